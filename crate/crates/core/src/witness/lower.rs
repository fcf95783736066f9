use serde::Serialize;

use super::merge_pairs;
use crate::closure::check_t;
use crate::error::Result;
use crate::graph::{AndOnes, Graph, VertexSet};

/// One copy of `K_{2,t−1}`: the 2-side `pair` and the `t − 1` other vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    pub pair: (usize, usize),
    pub side: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWitness {
    pub t: usize,
    pub families: Vec<FamilyMember>,
    pub gprime: Graph,
}

impl FamilyWitness {
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.families.iter().map(|f| f.pair).collect()
    }
}

/// Greedy maximal family of vertex-disjoint copies of `K_{2,t−1}`, scanning
/// pairs `a < b` lexicographically and taking the `t − 1` smallest unused
/// common neighbours, then `G′` from the 2-sides.
///
/// One pass is maximal: removing vertices only shrinks common
/// neighbourhoods, so a pair rejected earlier stays rejected.
pub fn lower_witness(g: &Graph, t: usize) -> Result<FamilyWitness> {
    check_t(t, 4)?;
    let n = g.n();
    let mut used = VertexSet::empty(n);
    let mut families = Vec::new();
    for a in 0..n {
        if used.contains(a) {
            continue;
        }
        for b in a + 1..n {
            if used.contains(b) {
                continue;
            }
            let common: Vec<usize> = AndOnes::new(g.row(a), g.row(b))
                .filter(|&x| !used.contains(x))
                .take(t - 1)
                .collect();
            if common.len() == t - 1 {
                for &x in common.iter().chain([&a, &b]) {
                    used.insert(x);
                }
                families.push(FamilyMember {
                    pair: (a, b),
                    side: common,
                });
                break;
            }
        }
    }
    let pairs: Vec<_> = families.iter().map(|f| f.pair).collect();
    Ok(FamilyWitness {
        t,
        gprime: merge_pairs(g, &pairs),
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::close_k2t;
    use crate::gadgets::complete_bipartite;

    #[test]
    fn single_k23() {
        let g = complete_bipartite(2, 3);
        let w = lower_witness(&g, 4).unwrap();
        assert_eq!(
            w.families,
            vec![FamilyMember {
                pair: (0, 1),
                side: vec![2, 3, 4]
            }]
        );
        assert_eq!(w.gprime, g);
    }

    #[test]
    fn no_copy() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let w = lower_witness(&g, 4).unwrap();
        assert!(w.families.is_empty());
        assert_eq!(w.gprime, g);
    }

    #[test]
    fn two_disjoint_k23() {
        let mut edges: Vec<_> = complete_bipartite(2, 3).edges().collect();
        edges.extend(edges.clone().into_iter().map(|(a, b)| (a + 5, b + 5)));
        let g = Graph::from_edges(10, &edges).unwrap();
        let w = lower_witness(&g, 4).unwrap();
        assert_eq!(w.families.len(), 2);
        assert_eq!(close_k2t(&g, 4).unwrap().0, w.gprime);
    }

    #[test]
    fn family_members_are_disjoint_copies() {
        // K_{2,3} plus a second pair sharing the same 3-side: only one copy fits.
        let mut edges: Vec<_> = complete_bipartite(2, 3).edges().collect();
        edges.extend([(5, 2), (5, 3), (5, 4), (6, 2), (6, 3), (6, 4)]);
        let g = Graph::from_edges(7, &edges).unwrap();
        let w = lower_witness(&g, 4).unwrap();
        assert_eq!(w.families.len(), 1);
    }
}
