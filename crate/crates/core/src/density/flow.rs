//! Exact densest subgraph by parametric minimum cut.
//!
//! For a guess `g` build the network
//!
//! ```text
//! s → v   capacity m
//! v → t   capacity m + 2g − deg(v)
//! u ↔ v   capacity 1 for every edge uv
//! ```
//!
//! A cut `({s} ∪ S, rest)` costs `n·m + 2|S|(g − d(S))`, so the minimum cut
//! is below `n·m` iff some `S` has density above `g`, and the source side of
//! a minimum cut is such a set. Guesses are `a / D` with an integer `a` and
//! `D = n(n − 1) + 1`; capacities are scaled by `D` to stay integral. Two
//! distinct subgraph densities differ by at least `1/(n(n − 1))`, so once
//! the bracket narrows to `1/D` the last set found is a maximiser.

use std::collections::VecDeque;

use super::{density_of, DensityReport, Method, Rational};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub fn max_density_flow(g: &Graph) -> Result<DensityReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if g.edge_count() == 0 {
        return Ok(DensityReport {
            value: Rational::zero(),
            witness: VertexSet::from_vertices(n, [0])?,
            method: Method::Flow,
        });
    }
    let scale = (n * (n - 1) + 1) as i64;
    let mut lo: i64 = 0;
    let mut hi: i64 = ((n as i64 - 1) * scale + 1) / 2;
    let mut witness = denser_than(g, lo, scale).expect("a graph with an edge is denser than 0");
    debug_assert!(denser_than(g, hi, scale).is_none());
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match denser_than(g, mid, scale) {
            Some(s) => {
                lo = mid;
                witness = s;
            }
            None => hi = mid,
        }
    }
    Ok(DensityReport {
        value: density_of(g, &witness),
        witness,
        method: Method::Flow,
    })
}

/// A vertex set of density strictly above `numer / scale`, if one exists.
fn denser_than(g: &Graph, numer: i64, scale: i64) -> Option<VertexSet> {
    let n = g.n();
    let m = g.edge_count() as i64;
    let (s, t) = (n, n + 1);
    let mut net = Network::new(n + 2);
    for v in 0..n {
        net.add(s, v, m * scale, 0);
        net.add(v, t, m * scale + 2 * numer - g.degree(v) as i64 * scale, 0);
    }
    for (u, v) in g.edges() {
        net.add(u, v, scale, scale);
    }
    let cut = net.max_flow(s, t);
    if cut >= n as i64 * m * scale {
        return None;
    }
    let side = net.source_side(s);
    let set = VertexSet::from_vertices(n, (0..n).filter(|&v| side[v])).ok()?;
    debug_assert!(!set.is_empty());
    Some(set)
}

/// Dinic's algorithm on an adjacency-list residual network.
struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
    level: Vec<i32>,
    next: Vec<usize>,
}

impl Network {
    fn new(n: usize) -> Self {
        Network {
            head: vec![Vec::new(); n],
            to: Vec::new(),
            cap: Vec::new(),
            level: vec![0; n],
            next: vec![0; n],
        }
    }

    /// Arc `u → v` with capacity `c` paired with `v → u` with capacity `rc`.
    fn add(&mut self, u: usize, v: usize, c: i64, rc: i64) {
        debug_assert!(c >= 0 && rc >= 0);
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(rc);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64) -> i64 {
        if u == t {
            return limit;
        }
        while self.next[u] < self.head[u].len() {
            let e = self.head[u][self.next[u]];
            let v = self.to[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]));
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            self.next[u] += 1;
        }
        0
    }

    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.next.iter_mut().for_each(|x| *x = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Vertices reachable from `s` in the residual network.
    fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{build_ht, complete_bipartite};

    #[test]
    fn cliques() {
        for n in 1..=9 {
            let r = max_density_flow(&Graph::complete(n)).unwrap();
            assert_eq!(r.value, Rational::new(n as i64 - 1, 2));
            assert!(r.check(&Graph::complete(n)));
        }
    }

    #[test]
    fn dense_part_beats_whole() {
        // K_4 with a long pendant path: the K_4 wins.
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend((3..9).map(|i| (i, i + 1)));
        let g = Graph::from_edges(10, &edges).unwrap();
        let r = max_density_flow(&g).unwrap();
        assert_eq!(r.value, Rational::new(3, 2));
        assert_eq!(r.witness.to_vec(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn gadgets() {
        assert_eq!(
            max_density_flow(&complete_bipartite(2, 4)).unwrap().value,
            Rational::new(4, 3)
        );
        let h7 = build_ht(7).unwrap();
        let r = max_density_flow(&h7.graph).unwrap();
        assert_eq!(r.value, Rational::new(72, 44));
        assert!(r.check(&h7.graph));
    }
}
