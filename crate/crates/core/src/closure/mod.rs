//! K_{2,t}-bootstrap closure.
//!
//! A non-edge `uv` can be added exactly when `G + uv` contains a copy of
//! `K_{2,t}` through `uv`. The new edge joins a vertex of the 2-side to a
//! vertex of the t-side, so this holds iff some `w ∉ {u, v}` adjacent to `v`
//! has `|N(u) ∩ N(w)| ≥ t − 1`, or the same with `u` and `v` swapped. (`v`
//! is not in `N(u)` yet, so it never counts towards the intersection.)
//!
//! Equivalently: whenever two vertices have `t − 1` common neighbours, each
//! of them inherits every neighbour of the other. The engines here are
//! built on that pair relation:
//!
//! * [`close_k2t`] processes one edge at a time and records a certificate
//!   for every added edge,
//! * [`close_k2t_rounds`] follows the round process literally, adding every
//!   currently addable edge at once,
//! * [`twins::TwinQuotient`] works on classes of vertices that are forced
//!   to be twins in the closure and is what [`percolates`] uses,
//! * [`generic::close_generic`] is the subgraph-isomorphism oracle.

pub mod generic;
pub mod structure;
pub mod twins;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{and_count, AndOnes, Graph};

pub use generic::close_generic;
pub use structure::{classify_structure, equivalence_classes, Structure, StructureClass};
pub use twins::TwinQuotient;

/// One added edge with its certificate: after adding `edge = (u, v)`,
/// `u` and `partner` both see every vertex of `tset`, and `v ∈ tset`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub edge: (usize, usize),
    pub partner: usize,
    pub tset: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureTrace {
    pub t: usize,
    pub steps: Vec<Step>,
    /// Step indices of each round, when the round scheduler produced the trace.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rounds: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceError {
    EdgeAlreadyPresent { step: usize },
    BadWitness { step: usize, reason: &'static str },
    RoundsNotAPartition,
}

impl ClosureTrace {
    /// Replays the trace from `start`, checking every certificate against
    /// the state right after its edge is added.
    pub fn replay(&self, start: &Graph) -> Result<Graph, TraceError> {
        let mut g = start.clone();
        for (i, step) in self.steps.iter().enumerate() {
            let (u, v) = step.edge;
            if u == v || u >= g.n() || v >= g.n() || g.has_edge(u, v) {
                return Err(TraceError::EdgeAlreadyPresent { step: i });
            }
            g.insert_edge(u, v);
            check_witness(&g, self.t, step).map_err(|reason| TraceError::BadWitness { step: i, reason })?;
        }
        if let Some(rounds) = &self.rounds {
            let mut seen: Vec<usize> = rounds.iter().flatten().copied().collect();
            seen.sort_unstable();
            if seen != (0..self.steps.len()).collect::<Vec<_>>() {
                return Err(TraceError::RoundsNotAPartition);
            }
        }
        Ok(g)
    }
}

fn check_witness(g: &Graph, t: usize, step: &Step) -> Result<(), &'static str> {
    let (u, v) = step.edge;
    let w = step.partner;
    if w == u || w == v || w >= g.n() {
        return Err("partner coincides with an endpoint");
    }
    if step.tset.len() != t {
        return Err("t-set has the wrong size");
    }
    if !step.tset.contains(&v) {
        return Err("t-set misses the new edge's endpoint");
    }
    let distinct: BTreeSet<_> = step.tset.iter().collect();
    if distinct.len() != t {
        return Err("t-set has repeated vertices");
    }
    for &x in &step.tset {
        if x == u || x == w {
            return Err("t-set contains a 2-side vertex");
        }
        if !g.has_edge(u, x) || !g.has_edge(w, x) {
            return Err("t-set vertex not adjacent to both 2-side vertices");
        }
    }
    Ok(())
}

pub(crate) fn check_t(t: usize, min: usize) -> Result<()> {
    if t < min {
        Err(Error::InvalidT { t, min })
    } else {
        Ok(())
    }
}

/// Certificate for adding `a z` given `codeg(a, p) ≥ t − 1` and `z ∈ N(p)`.
fn certificate(g: &Graph, t: usize, a: usize, z: usize, p: usize) -> Step {
    let mut tset: Vec<usize> = AndOnes::new(g.row(a), g.row(p))
        .filter(|&x| x != z)
        .take(t - 1)
        .collect();
    tset.push(z);
    tset.sort_unstable();
    Step {
        edge: (a, z),
        partner: p,
        tset,
    }
}

/// All non-edges of `g` whose addition creates a copy of `K_{2,t}`.
pub fn addable_edges(g: &Graph, t: usize) -> Result<BTreeSet<(usize, usize)>> {
    check_t(t, 2)?;
    Ok(addable_with_witness(g, t).into_keys().collect())
}

fn addable_with_witness(g: &Graph, t: usize) -> BTreeMap<(usize, usize), Step> {
    let n = g.n();
    let mut out = BTreeMap::new();
    for x in 0..n {
        for p in 0..n {
            if x == p || g.codegree(x, p) < t - 1 {
                continue;
            }
            for z in g.neighbors(p) {
                if z == x || g.has_edge(x, z) {
                    continue;
                }
                let key = (x.min(z), x.max(z));
                out.entry(key).or_insert_with(|| certificate(g, t, x, z, p));
            }
        }
    }
    out
}

/// Sequential closure with one certificate per added edge.
///
/// Keeps the full codegree table. When a pair first reaches `t − 1` common
/// neighbours the two neighbourhoods are merged; afterwards every edge
/// gained by one member of the pair is copied to the other.
pub fn close_k2t(g: &Graph, t: usize) -> Result<(Graph, ClosureTrace)> {
    check_t(t, 2)?;
    let mut engine = SequentialEngine::new(g, t);
    engine.run();
    Ok((
        engine.g,
        ClosureTrace {
            t,
            steps: engine.steps,
            rounds: None,
        },
    ))
}

/// Closure by rounds: round `i` adds every edge addable in `G_{i−1}`.
pub fn close_k2t_rounds(g: &Graph, t: usize) -> Result<(Graph, ClosureTrace)> {
    check_t(t, 2)?;
    let mut state = g.clone();
    let mut steps = Vec::new();
    let mut rounds = Vec::new();
    loop {
        let batch = addable_with_witness(&state, t);
        if batch.is_empty() {
            break;
        }
        let mut round = Vec::with_capacity(batch.len());
        for (_, step) in batch {
            state.insert_edge(step.edge.0, step.edge.1);
            round.push(steps.len());
            steps.push(step);
        }
        rounds.push(round);
    }
    Ok((
        state,
        ClosureTrace {
            t,
            steps,
            rounds: Some(rounds),
        },
    ))
}

/// The closure graph alone, computed on twin classes.
pub fn closure(g: &Graph, t: usize) -> Result<Graph> {
    check_t(t, 2)?;
    Ok(TwinQuotient::build(g, t).to_graph())
}

/// Whether `g` percolates, i.e. its K_{2,t} closure is complete.
pub fn percolates(g: &Graph, t: usize) -> Result<bool> {
    check_t(t, 2)?;
    if g.is_complete() {
        return Ok(true);
    }
    // A copy of K_{2,t} needs t + 2 vertices.
    if g.n() < t + 2 {
        return Ok(false);
    }
    Ok(TwinQuotient::build(g, t).is_complete())
}

struct SequentialEngine {
    g: Graph,
    t: usize,
    n: usize,
    codeg: Vec<u32>,
    partners: Vec<Vec<usize>>,
    merges: VecDeque<(usize, usize)>,
    /// Non-edges waiting to be added, each at most once (`queued`).
    pending: Vec<(usize, usize, usize)>,
    queued: Vec<u64>,
    steps: Vec<Step>,
}

impl SequentialEngine {
    fn new(g: &Graph, t: usize) -> Self {
        let n = g.n();
        let mut codeg = vec![0u32; n * n];
        let mut partners = vec![Vec::new(); n];
        let mut merges = VecDeque::new();
        for x in 0..n {
            for y in x + 1..n {
                let c = and_count(g.row(x), g.row(y)) as u32;
                codeg[x * n + y] = c;
                codeg[y * n + x] = c;
                if c as usize >= t - 1 {
                    partners[x].push(y);
                    partners[y].push(x);
                    merges.push_back((x, y));
                }
            }
        }
        SequentialEngine {
            g: g.clone(),
            t,
            n,
            codeg,
            partners,
            merges,
            pending: Vec::new(),
            queued: vec![0; (n * n).div_ceil(64)],
            steps: Vec::new(),
        }
    }

    fn run(&mut self) {
        loop {
            while let Some((x, z, p)) = self.pending.pop() {
                let k = self.key(x, z);
                self.queued[k / 64] &= !(1 << (k % 64));
                if !self.g.has_edge(x, z) {
                    self.add(x, z, p);
                }
            }
            match self.merges.pop_front() {
                Some((x, y)) => self.merge(x, y),
                None => break,
            }
        }
    }

    fn merge(&mut self, x: usize, y: usize) {
        for (a, b) in [(x, y), (y, x)] {
            let mut gain = Vec::new();
            for (i, (&wb, &wa)) in self.g.row(b).iter().zip(self.g.row(a)).enumerate() {
                let mut bits = wb & !wa;
                while bits != 0 {
                    let z = i * 64 + bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if z != a {
                        gain.push(z);
                    }
                }
            }
            for z in gain {
                self.enqueue(a, z, b);
            }
        }
    }

    fn key(&self, x: usize, z: usize) -> usize {
        x.min(z) * self.n + x.max(z)
    }

    /// Queues non-edge `xz`, to be certified by `x`'s partner `p`.
    fn enqueue(&mut self, x: usize, z: usize, p: usize) {
        if x == z || self.g.has_edge(x, z) {
            return;
        }
        let k = self.key(x, z);
        let bit = 1 << (k % 64);
        if self.queued[k / 64] & bit == 0 {
            self.queued[k / 64] |= bit;
            self.pending.push((x, z, p));
        }
    }

    fn add(&mut self, a: usize, b: usize, partner: usize) {
        let step = certificate(&self.g, self.t, a, b, partner);
        self.steps.push(step);
        self.g.insert_edge(a, b);
        self.bump(a, b);
        self.bump(b, a);
        for i in 0..self.partners[a].len() {
            let q = self.partners[a][i];
            self.enqueue(q, b, a);
        }
        for i in 0..self.partners[b].len() {
            let q = self.partners[b][i];
            self.enqueue(q, a, b);
        }
    }

    /// `a` gained neighbour `b`: every other neighbour of `b` now shares one
    /// more common neighbour with `a`.
    fn bump(&mut self, a: usize, b: usize) {
        let n = self.n;
        let threshold = (self.t - 1) as u32;
        let others: Vec<usize> = self.g.neighbors(b).filter(|&c| c != a).collect();
        for c in others {
            let c1 = &mut self.codeg[a * n + c];
            *c1 += 1;
            let now = *c1;
            self.codeg[c * n + a] = now;
            if now == threshold {
                self.partners[a].push(c);
                self.partners[c].push(a);
                self.merges.push_back((a, c));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{build_ht, complete_bipartite};

    fn k2t_minus_edge(t: usize) -> Graph {
        let mut edges: Vec<_> = (0..2).flat_map(|a| (2..2 + t).map(move |b| (a, b))).collect();
        edges.pop();
        Graph::from_edges(t + 2, &edges).unwrap()
    }

    #[test]
    fn addable_edges_complete_k24() {
        let g = k2t_minus_edge(4);
        let got = addable_edges(&g, 4).unwrap();
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![(1, 5)]);
    }

    #[test]
    fn addable_edges_none_for_k23_with_t4() {
        assert!(addable_edges(&complete_bipartite(2, 3), 4).unwrap().is_empty());
        assert!(addable_edges(&Graph::complete(6), 3).unwrap().is_empty());
    }

    #[test]
    fn rejects_small_t() {
        assert_eq!(
            close_k2t(&Graph::empty(3), 1).unwrap_err(),
            Error::InvalidT { t: 1, min: 2 }
        );
    }

    #[test]
    fn closure_examples() {
        let k5 = Graph::complete(5);
        assert_eq!(close_k2t(&k5, 4).unwrap().0, k5);
        let k33 = complete_bipartite(3, 3);
        let (c, trace) = close_k2t(&k33, 4).unwrap();
        assert_eq!(c, k33);
        assert!(trace.steps.is_empty());

        let h4 = build_ht(4).unwrap();
        let (c, trace) = close_k2t(&h4.graph, 4).unwrap();
        assert!(c.contains_complete_bipartite(3, 3));
        assert_eq!(trace.replay(&h4.graph), Ok(c));
    }

    #[test]
    fn percolation_examples() {
        assert!(percolates(&Graph::complete(6), 4).unwrap());
        assert!(!percolates(&complete_bipartite(2, 3), 4).unwrap());
        // n < t + 2 and incomplete
        let mut almost = Graph::complete(5);
        almost = Graph::from_edges(5, &almost.edges().skip(1).collect::<Vec<_>>()).unwrap();
        assert!(!percolates(&almost, 4).unwrap());
    }

    #[test]
    fn rounds_and_sequential_agree_on_ht() {
        for t in 4..=6 {
            let h = build_ht(t).unwrap();
            let (a, _) = close_k2t(&h.graph, t).unwrap();
            let (b, trace) = close_k2t_rounds(&h.graph, t).unwrap();
            assert_eq!(a, b);
            assert_eq!(trace.replay(&h.graph), Ok(b.clone()));
            assert_eq!(closure(&h.graph, t).unwrap(), b);
        }
    }

    #[test]
    fn replay_detects_bad_witness() {
        let g = k2t_minus_edge(4);
        let (_, mut trace) = close_k2t(&g, 4).unwrap();
        trace.steps[0].tset.pop();
        assert!(matches!(trace.replay(&g), Err(TraceError::BadWitness { step: 0, .. })));
    }
}
