//! Non-percolation witnesses.
//!
//! Both procedures pick pairs of vertices that are forced to become twins
//! in the closure and build `G′` by merging the neighbourhoods of every
//! pair in `G`. When `G′` equals the closure and is not complete, `G` does
//! not percolate. [`verify_witness`] checks that directly.

mod lower;
mod tfour;

use crate::closure::{check_t, closure};
use crate::error::Result;
use crate::graph::Graph;

pub use lower::{lower_witness, FamilyMember, FamilyWitness};
pub use tfour::{f_procedure_t4, gprime_t4, Divergence, FComponent, Fact, FactViolation, TfourRun, T4_DENSITY_BOUND};

/// `G′`: for every pair `{a, b}`, join `a` to `N_G(b) \ N_G(a)` and `b` to
/// `N_G(a) \ N_G(b)`. Neighbourhoods are always taken in the input `g`.
pub fn merge_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Graph {
    let mut out = g.clone();
    for &(a, b) in pairs {
        for (x, y) in [(a, b), (b, a)] {
            for z in g.neighbors(y) {
                if z != x && !g.has_edge(x, z) {
                    out.insert_edge(x, z);
                }
            }
        }
    }
    out
}

/// True iff `gprime` is exactly the K_{2,t} closure of `g` and is not
/// complete, i.e. it certifies that `g` does not percolate.
pub fn verify_witness(g: &Graph, t: usize, gprime: &Graph) -> Result<bool> {
    check_t(t, 2)?;
    if !g.is_subgraph_of(gprime) || gprime.is_complete() {
        return Ok(false);
    }
    let closed = closure(g, t)?;
    Ok(&closed == gprime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::complete_bipartite;

    #[test]
    fn verify_examples() {
        let k23 = complete_bipartite(2, 3);
        assert!(verify_witness(&k23, 4, &k23).unwrap());
        let k6 = Graph::complete(6);
        assert!(!verify_witness(&k6, 4, &k6).unwrap());
        // Not a supergraph.
        assert!(!verify_witness(&k23, 4, &Graph::empty(5)).unwrap());
    }

    #[test]
    fn merge_pairs_skips_self_and_existing() {
        // 0 and 1 adjacent; 0 also sees 2, 1 sees 3.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 3)]).unwrap();
        let h = merge_pairs(&g, &[(0, 1)]);
        assert_eq!(h.edges_not_in(&g), vec![(0, 3), (1, 2)]);
    }
}
