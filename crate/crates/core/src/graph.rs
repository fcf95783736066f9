//! Dense simple undirected graphs backed by one adjacency bitset per vertex.
//!
//! Vertices are the integers `0..n`. Every row is `ceil(n / 64)` words, so
//! intersecting two neighbourhoods costs `O(n / 64)` word operations. That
//! intersection is the inner loop of the closure engine, the witness
//! procedures and the K_{2,t} copy searches.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterator over the set bit positions of a word slice, in increasing order.
#[derive(Clone)]
pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        let cur = words.first().copied().unwrap_or(0);
        Ones { words, idx: 0, cur }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

/// Iterator over the positions set in both slices.
pub(crate) struct AndOnes<'a> {
    a: &'a [u64],
    b: &'a [u64],
    idx: usize,
    cur: u64,
}

impl<'a> AndOnes<'a> {
    pub(crate) fn new(a: &'a [u64], b: &'a [u64]) -> Self {
        debug_assert_eq!(a.len(), b.len());
        let cur = match (a.first(), b.first()) {
            (Some(x), Some(y)) => x & y,
            _ => 0,
        };
        AndOnes { a, b, idx: 0, cur }
    }
}

impl Iterator for AndOnes<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + bit);
            }
            self.idx += 1;
            if self.idx >= self.a.len() {
                return None;
            }
            self.cur = self.a[self.idx] & self.b[self.idx];
        }
    }
}

#[inline]
pub(crate) fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// A set of vertices of some host graph on `n` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            bits: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut s = Self::empty(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Size of the host vertex range.
    pub fn universe(&self) -> usize {
        self.n
    }

    /// Panics if `v` is outside the host range.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        let w = &mut self.bits[v / 64];
        let fresh = *w & (1 << (v % 64)) == 0;
        *w |= 1 << (v % 64);
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.n {
            return false;
        }
        let w = &mut self.bits[v / 64];
        let present = *w & (1 << (v % 64)) != 0;
        *w &= !(1 << (v % 64));
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits[v / 64] & (1 << (v % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones::new(&self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & b == 0)
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An immutable simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.checked_insert(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn checked_insert(&mut self, u: usize, v: usize) -> Result<bool> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        Ok(self.insert_edge(u, v))
    }

    /// Adds `uv`; returns false when it was already present. Callers
    /// guarantee `u != v` and both in range.
    #[inline]
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n && v < self.n);
        let (wu, bu) = (u / 64, 1u64 << (u % 64));
        let (wv, bv) = (v / 64, 1u64 << (v % 64));
        let row_u = u * self.words;
        if self.rows[row_u + wv] & bv != 0 {
            return false;
        }
        self.rows[row_u + wv] |= bv;
        self.rows[v * self.words + wu] |= bu;
        self.m += 1;
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    /// Neighbourhood bitset of `v` as raw words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet {
            n: self.n,
            bits: self.row(v).to_vec(),
        }
    }

    /// `|N(x) ∩ N(y)|`.
    pub fn common_neighbor_count(&self, x: usize, y: usize) -> Result<usize> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::SameVertex(x));
        }
        Ok(and_count(self.row(x), self.row(y)))
    }

    /// Unchecked codegree used on hot paths.
    #[inline]
    pub(crate) fn codegree(&self, x: usize, y: usize) -> usize {
        and_count(self.row(x), self.row(y))
    }

    /// Common neighbours of `x` and `y` in increasing order.
    pub fn common_neighbors(&self, x: usize, y: usize) -> impl Iterator<Item = usize> + '_ {
        AndOnes::new(self.row(x), self.row(y))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    /// True when every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    /// Pairs present in `self` but not in `base`, as `(u, v)` with `u < v`.
    pub fn edges_not_in(&self, base: &Graph) -> Vec<(usize, usize)> {
        self.edges().filter(|&(u, v)| !base.has_edge(u, v)).collect()
    }

    /// Induced subgraph on `s`, relabelled by increasing original id.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let keep: Vec<usize> = s.iter().filter(|&v| v < self.n).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut h = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && j > i {
                    h.insert_edge(i, j);
                }
            }
        }
        h
    }

    /// Number of edges with both endpoints in `s`.
    pub fn edges_within(&self, s: &VertexSet) -> usize {
        let twice: usize = s.iter().map(|v| and_count(self.row(v), s.words())).sum();
        twice / 2
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    /// A proper 2-colouring (`false`/`true` per vertex) if one exists.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Whether `self` contains `K_{a,b}` as a (not necessarily induced)
    /// subgraph. Backtracks over the `a`-side in increasing order, pruning
    /// by the size of the running common neighbourhood.
    pub fn contains_complete_bipartite(&self, a: usize, b: usize) -> bool {
        self.find_complete_bipartite(a, b).is_some()
    }

    /// A copy of `K_{a,b}` as `(a_side, b_side)` if one exists.
    pub fn find_complete_bipartite(&self, a: usize, b: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if a + b > self.n {
            return None;
        }
        if a == 0 {
            return Some((vec![], (0..b).collect()));
        }
        let mut chosen = Vec::with_capacity(a);
        let all = VertexSet::full(self.n).bits;
        self.kab_search(a, b, 0, &all, &mut chosen).map(|common| {
            let side: Vec<usize> = Ones::new(&common).take(b).collect();
            (chosen.clone(), side)
        })
    }

    fn kab_search(&self, a: usize, b: usize, from: usize, common: &[u64], chosen: &mut Vec<usize>) -> Option<Vec<u64>> {
        if chosen.len() == a {
            return Some(common.to_vec());
        }
        for v in from..self.n {
            if self.degree(v) < b {
                continue;
            }
            let next: Vec<u64> = common.iter().zip(self.row(v)).map(|(x, y)| x & y).collect();
            if next.iter().map(|w| w.count_ones() as usize).sum::<usize>() < b {
                continue;
            }
            chosen.push(v);
            if let Some(found) = self.kab_search(a, b, v + 1, &next, chosen) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges=", self.n, self.m)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k24() -> Graph {
        let edges: Vec<_> = (0..2).flat_map(|a| (2..6).map(move |b| (a, b))).collect();
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn from_edges_basics() {
        let g = Graph::from_edges(3, &[]).unwrap();
        assert_eq!(g.edge_count(), 0);

        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.degrees(), vec![1, 1]);

        let mut degs = k24().degrees();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 2, 4, 4]);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn common_neighbors_on_k24() {
        let g = k24();
        assert_eq!(g.common_neighbor_count(0, 1), Ok(4));
        assert_eq!(g.common_neighbor_count(2, 3), Ok(2));
        assert_eq!(g.common_neighbor_count(2, 2), Err(Error::SameVertex(2)));
        let e = Graph::empty(5);
        assert_eq!(e.common_neighbor_count(0, 4), Ok(0));
    }

    #[test]
    fn induced_subgraph_of_two_side() {
        let g = k24();
        let s = VertexSet::from_vertices(6, [0, 1]).unwrap();
        let h = g.induced_subgraph(&s);
        assert_eq!((h.n(), h.edge_count()), (2, 0));
        let all = g.induced_subgraph(&VertexSet::full(6));
        assert_eq!(all, g);
    }

    #[test]
    fn connectivity_and_bipartiteness() {
        let k33: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        let k33 = Graph::from_edges(6, &k33).unwrap();
        assert!(k33.is_connected());
        assert!(k33.is_bipartite());

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());

        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!tri.is_bipartite());
    }

    #[test]
    fn kab_search() {
        let g = k24();
        assert!(g.contains_complete_bipartite(2, 4));
        assert!(g.contains_complete_bipartite(4, 2));
        assert!(!g.contains_complete_bipartite(3, 3));
        let (a, b) = g.find_complete_bipartite(2, 3).unwrap();
        assert_eq!(a, vec![0, 1]);
        assert_eq!(b, vec![2, 3, 4]);
    }

    #[test]
    fn edges_within_counts_induced_edges() {
        let g = k24();
        let s = VertexSet::from_vertices(6, [0, 2, 3]).unwrap();
        assert_eq!(g.edges_within(&s), 2);
    }
}
