//! Component growth for `t = 4`.
//!
//! Components `F_1, F_2, …` are vertex disjoint. Each starts from a copy of
//! `K_{2,3}` with 2-side `A` (the first pair) and 3-side `B` (the initial
//! `b_side`), and grows by two rules:
//!
//! 1. adjacent `u, v` outside every component with `u` adjacent to `A` and
//!    `v` adjacent to some `w ∈ b_side`: add `u, v`, record the pair
//!    `{u, w}`, replace `w` by `v` in `b_side`, increment `ell`;
//! 2. otherwise, distinct outside `u, v, w` with `w` adjacent to both `u`
//!    and `v`, and `u`, `v` both adjacent to the same recorded pair: add
//!    all three, record `{u, v}`, push `w` to `b_side`, increment
//!    `ell_prime`.
//!
//! Then `|V(F)| = 2·ell + 3·ell_prime + 5` and `|E(F)| ≥ 3·ell + 4·ell_prime + 6`.
//! In a graph with no small subgraph of density `≥ 13/10` the edge count is
//! exact, `4·ell + ell_prime ≤ 4`, no edge joins two components, and two
//! components share at most one outside neighbour. Each of these can fail
//! only next to such a dense subgraph, which the violation then carries.

use serde::Serialize;
use thiserror::Error;

use super::merge_pairs;
use crate::density::{max_density_flow, DensityReport, Rational};
use crate::graph::{Graph, VertexSet};

/// Density at which the `t = 4` procedure is no longer guaranteed to work.
pub const T4_DENSITY_BOUND: (i64, i64) = (13, 10);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FComponent {
    pub vertices: VertexSet,
    /// Recorded pairs; the first is the seed's 2-side.
    pub pairs: Vec<(usize, usize)>,
    pub b_side: Vec<usize>,
    pub ell: usize,
    pub ell_prime: usize,
    pub edges: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Fact {
    /// `|E(F)| = 3·ell + 4·ell_prime + 6`.
    EdgeCount,
    /// `4·ell + ell_prime ≤ 4`.
    CounterBound,
    /// No edge between two components.
    NoCrossEdges,
    /// At most one outside vertex sees two given components.
    SharedNeighbor,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{fact:?} fails for component {component}")]
pub struct FactViolation {
    pub component: usize,
    pub other: Option<usize>,
    pub fact: Fact,
    /// Vertex set whose induced subgraph is forced to be dense.
    pub vertices: VertexSet,
}

impl FactViolation {
    /// Densest subgraph inside the offending vertex set.
    pub fn dense_subgraph(&self, g: &Graph) -> DensityReport {
        let sub = g.induced_subgraph(&self.vertices);
        let local = max_density_flow(&sub).expect("violation sets are nonempty");
        let ids = self.vertices.to_vec();
        let witness = VertexSet::from_vertices(g.n(), local.witness.iter().map(|i| ids[i])).expect("in range");
        DensityReport {
            value: local.value,
            witness,
            method: local.method,
        }
    }

    pub fn reaches_bound(&self, g: &Graph) -> bool {
        self.dense_subgraph(g).value >= Rational::new(T4_DENSITY_BOUND.0, T4_DENSITY_BOUND.1)
    }
}

/// A point where rule 2 would fire if `u` and `v` were allowed to touch
/// different recorded pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub component: usize,
    pub u: usize,
    pub v: usize,
    pub w: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TfourRun {
    pub components: Vec<FComponent>,
    pub divergences: Vec<Divergence>,
}

struct Grower<'a> {
    g: &'a Graph,
    taken: VertexSet,
    comp: FComponent,
}

impl Grower<'_> {
    fn outside(&self, x: usize) -> bool {
        !self.taken.contains(x) && !self.comp.vertices.contains(x)
    }

    fn touches(&self, x: usize, pair: (usize, usize)) -> bool {
        self.g.has_edge(x, pair.0) || self.g.has_edge(x, pair.1)
    }

    fn rule_one(&self) -> Option<(usize, usize, usize)> {
        let seed = self.comp.pairs[0];
        let g = self.g;
        for u in (0..g.n()).filter(|&u| self.outside(u) && self.touches(u, seed)) {
            for v in g.neighbors(u).filter(|&v| self.outside(v)) {
                if let Some(&w) = self.comp.b_side.iter().filter(|&&w| g.has_edge(v, w)).min() {
                    return Some((u, v, w));
                }
            }
        }
        None
    }

    fn common_outside(&self, u: usize, v: usize) -> Option<usize> {
        self.g.common_neighbors(u, v).find(|&w| self.outside(w))
    }

    fn rule_two(&self) -> Option<(usize, usize, usize)> {
        for &pair in &self.comp.pairs {
            let near: Vec<usize> = (0..self.g.n())
                .filter(|&x| self.outside(x) && self.touches(x, pair))
                .collect();
            for (i, &u) in near.iter().enumerate() {
                for &v in &near[i + 1..] {
                    if let Some(w) = self.common_outside(u, v) {
                        return Some((u, v, w));
                    }
                }
            }
        }
        None
    }

    fn rule_two_loose(&self) -> Option<(usize, usize, usize)> {
        let near: Vec<usize> = (0..self.g.n())
            .filter(|&x| self.outside(x) && self.comp.pairs.iter().any(|&p| self.touches(x, p)))
            .collect();
        for (i, &u) in near.iter().enumerate() {
            for &v in &near[i + 1..] {
                if let Some(w) = self.common_outside(u, v) {
                    return Some((u, v, w));
                }
            }
        }
        None
    }

    fn check(&self, index: usize) -> Result<(), FactViolation> {
        let c = &self.comp;
        let violation = |fact| FactViolation {
            component: index,
            other: None,
            fact,
            vertices: c.vertices.clone(),
        };
        if 4 * c.ell + c.ell_prime > 4 {
            return Err(violation(Fact::CounterBound));
        }
        if c.edges != 3 * c.ell + 4 * c.ell_prime + 6 {
            return Err(violation(Fact::EdgeCount));
        }
        Ok(())
    }
}

fn find_k23(g: &Graph, taken: &VertexSet) -> Option<((usize, usize), Vec<usize>)> {
    let n = g.n();
    for a in (0..n).filter(|&a| !taken.contains(a)) {
        for b in (a + 1..n).filter(|&b| !taken.contains(b)) {
            let side: Vec<usize> = g
                .common_neighbors(a, b)
                .filter(|&x| !taken.contains(x))
                .take(3)
                .collect();
            if side.len() == 3 {
                return Some(((a, b), side));
            }
        }
    }
    None
}

/// Runs the component procedure on `g`, stopping at the first violated fact.
pub fn f_procedure_t4(g: &Graph) -> Result<TfourRun, FactViolation> {
    let n = g.n();
    let mut taken = VertexSet::empty(n);
    let mut components: Vec<FComponent> = Vec::new();
    let mut divergences = Vec::new();

    while let Some((pair, side)) = find_k23(g, &taken) {
        let index = components.len();
        let vertices = VertexSet::from_vertices(n, side.iter().copied().chain([pair.0, pair.1])).expect("in range");
        let mut grower = Grower {
            g,
            taken: taken.clone(),
            comp: FComponent {
                edges: g.edges_within(&vertices),
                vertices,
                pairs: vec![pair],
                b_side: side,
                ell: 0,
                ell_prime: 0,
            },
        };
        grower.check(index)?;
        loop {
            if let Some((u, v, w)) = grower.rule_one() {
                let c = &mut grower.comp;
                c.vertices.insert(u);
                c.vertices.insert(v);
                c.pairs.push((u, w));
                c.b_side.retain(|&x| x != w);
                c.b_side.push(v);
                c.ell += 1;
            } else if let Some((u, v, w)) = grower.rule_two() {
                let c = &mut grower.comp;
                for x in [u, v, w] {
                    c.vertices.insert(x);
                }
                c.pairs.push((u, v));
                c.b_side.push(w);
                c.ell_prime += 1;
            } else {
                if let Some((u, v, w)) = grower.rule_two_loose() {
                    divergences.push(Divergence {
                        component: index,
                        u,
                        v,
                        w,
                    });
                }
                break;
            }
            grower.comp.edges = g.edges_within(&grower.comp.vertices);
            grower.check(index)?;
        }
        taken.union_with(&grower.comp.vertices);
        components.push(grower.comp);
    }

    check_cross_facts(g, &components)?;
    Ok(TfourRun {
        components,
        divergences,
    })
}

fn check_cross_facts(g: &Graph, comps: &[FComponent]) -> Result<(), FactViolation> {
    let n = g.n();
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let (fi, fj) = (&comps[i].vertices, &comps[j].vertices);
            let mut both = fi.clone();
            both.union_with(fj);
            if fi.iter().any(|x| g.neighbors(x).any(|y| fj.contains(y))) {
                return Err(FactViolation {
                    component: i,
                    other: Some(j),
                    fact: Fact::NoCrossEdges,
                    vertices: both,
                });
            }
            let shared: Vec<usize> = (0..n)
                .filter(|&x| !both.contains(x))
                .filter(|&x| g.neighbors(x).any(|y| fi.contains(y)) && g.neighbors(x).any(|y| fj.contains(y)))
                .take(2)
                .collect();
            if shared.len() == 2 {
                for x in shared {
                    both.insert(x);
                }
                return Err(FactViolation {
                    component: i,
                    other: Some(j),
                    fact: Fact::SharedNeighbor,
                    vertices: both,
                });
            }
        }
    }
    Ok(())
}

/// `G′` from every recorded pair of every component.
pub fn gprime_t4(g: &Graph, comps: &[FComponent]) -> Graph {
    let pairs: Vec<_> = comps.iter().flat_map(|c| c.pairs.iter().copied()).collect();
    merge_pairs(g, &pairs)
}
