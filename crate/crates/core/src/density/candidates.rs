//! The seven closed-neighbourhood unions of `H_t` that can be densest.
//!
//! With `A = ⋃ N[u_i]`, `B = ⋃ N[v_j]` and `C = ⋃ N[w_k]` (closed
//! neighbourhoods in `H_t`) the candidates are `{u}∪A`, `{v}∪B`, `{w}∪C`,
//! `{v}∪A∪B`, `{w}∪B∪C`, `{u,w}∪A∪C` and `{w}∪A∪B∪C`.
//!
//! Each `v_j` is joined to `u` and each `w_k` to `v`, so `B` already holds
//! `u` and `C` already holds `v`.

use super::{density_of, eta, Rational};
use crate::error::Result;
use crate::gadgets::{build_ht, Block, LabeledGadget};
use crate::graph::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub label: &'static str,
    pub vertices: VertexSet,
    pub edges: usize,
    pub density: Rational,
}

fn closed_union(h: &LabeledGadget, block: Block) -> VertexSet {
    let mut s = VertexSet::empty(h.graph.n());
    for p in h.parts(block) {
        s.insert(p);
        for x in h.graph.neighbors(p) {
            s.insert(x);
        }
    }
    s
}

fn candidate(h: &LabeledGadget, label: &'static str, hubs: &[Block], unions: &[&VertexSet]) -> Candidate {
    let mut s = VertexSet::empty(h.graph.n());
    for &b in hubs {
        s.insert(h.hub(b).expect("H_t has all three hubs"));
    }
    for u in unions {
        s.union_with(u);
    }
    Candidate {
        label,
        edges: h.graph.edges_within(&s),
        density: density_of(&h.graph, &s),
        vertices: s,
    }
}

pub fn seven_candidate_densities(t: usize) -> Result<Vec<Candidate>> {
    eta(t)?;
    let h = build_ht(t)?;
    let a = closed_union(&h, Block::U);
    let b = closed_union(&h, Block::V);
    let c = closed_union(&h, Block::W);
    use Block::{U, V, W};
    Ok(vec![
        candidate(&h, "{u}+A", &[U], &[&a]),
        candidate(&h, "{v}+B", &[V], &[&b]),
        candidate(&h, "{w}+C", &[W], &[&c]),
        candidate(&h, "{v}+A+B", &[V], &[&a, &b]),
        candidate(&h, "{w}+B+C", &[W], &[&b, &c]),
        candidate(&h, "{u,w}+A+C", &[U, W], &[&a, &c]),
        candidate(&h, "{w}+A+B+C", &[W], &[&a, &b, &c]),
    ])
}

/// `{v}∪A∪B` next to `{u,v}∪A∪B`, the two readings of the even-`t` maximiser.
pub fn even_case_sets(t: usize) -> Result<(Candidate, Candidate)> {
    eta(t)?;
    let h = build_ht(t)?;
    let a = closed_union(&h, Block::U);
    let b = closed_union(&h, Block::V);
    Ok((
        candidate(&h, "{v}+A+B", &[Block::V], &[&a, &b]),
        candidate(&h, "{u,v}+A+B", &[Block::U, Block::V], &[&a, &b]),
    ))
}
