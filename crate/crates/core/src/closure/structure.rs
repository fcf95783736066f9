use serde::{Deserialize, Serialize};

use crate::closure::{check_t, close_k2t};
use crate::error::Result;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructureClass {
    Complete,
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    /// Independent part of size `independent`, clique part of size `clique`.
    CompleteSplit {
        independent: usize,
        clique: usize,
    },
    Other,
}

/// A classification together with the partition that witnesses it: the
/// two sides for bipartite, `[independent, clique]` for split, a single
/// block for complete and nothing for [`StructureClass::Other`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Structure {
    pub class: StructureClass,
    pub partition: Vec<Vec<usize>>,
}

/// Recognises complete, complete bipartite and complete split graphs.
///
/// Both parts of a bipartite or split witness are nonempty and the
/// independent part of a split graph has at least two vertices (one
/// vertex would make the graph complete). Edgeless graphs on two or more
/// vertices are therefore `Other`. A star is reported as bipartite.
pub fn classify_structure(g: &Graph) -> Structure {
    let n = g.n();
    if g.is_complete() {
        return Structure {
            class: StructureClass::Complete,
            partition: vec![(0..n).collect()],
        };
    }
    if g.edge_count() > 0 && g.is_connected() {
        if let Some(color) = g.two_coloring() {
            let left: Vec<usize> = (0..n).filter(|&v| !color[v]).collect();
            let right: Vec<usize> = (0..n).filter(|&v| color[v]).collect();
            if left.len() * right.len() == g.edge_count() {
                let (a, b) = (left.len(), right.len());
                return Structure {
                    class: StructureClass::CompleteBipartite { a, b },
                    partition: vec![left, right],
                };
            }
        }
    }
    // The clique part of a non-complete split graph is exactly the set of
    // universal vertices, which is also the largest admissible clique part.
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 == n).collect();
    let rest: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 != n).collect();
    let c = universal.len();
    let i = rest.len();
    if c >= 1 && i >= 2 && g.edge_count() == c * (c - 1) / 2 + c * i {
        return Structure {
            class: StructureClass::CompleteSplit {
                independent: i,
                clique: c,
            },
            partition: vec![rest, universal],
        };
    }
    Structure {
        class: StructureClass::Other,
        partition: Vec::new(),
    }
}

/// `x ≈ y` iff `N(x) \ {y} = N(y) \ {x}`.
pub fn twins(g: &Graph, x: usize, y: usize) -> bool {
    if x == y {
        return true;
    }
    let (wx, bx) = (x / 64, 1u64 << (x % 64));
    let (wy, by) = (y / 64, 1u64 << (y % 64));
    g.row(x).iter().zip(g.row(y)).enumerate().all(|(i, (&a, &b))| {
        let mut mask = !0u64;
        if i == wx {
            mask &= !bx;
        }
        if i == wy {
            mask &= !by;
        }
        a & mask == b & mask
    })
}

/// Classes of `≈` on the K_{2,t} closure of `g`, each sorted and ordered by
/// smallest member.
///
/// Panics if `≈` fails to be an equivalence relation on the closure, which
/// would mean the closure engine is wrong.
pub fn equivalence_classes(g: &Graph, t: usize) -> Result<Vec<Vec<usize>>> {
    check_t(t, 2)?;
    let (closed, _) = close_k2t(g, t)?;
    Ok(twin_classes(&closed))
}

/// Classes of `≈` on `g` itself.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (v, slot) in class_of.iter_mut().enumerate() {
        match classes.iter().position(|c| twins(g, c[0], v)) {
            Some(i) => {
                *slot = i;
                classes[i].push(v);
            }
            None => {
                *slot = classes.len();
                classes.push(vec![v]);
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            assert_eq!(
                twins(g, x, y),
                class_of[x] == class_of[y],
                "twin relation is not transitive on ({x}, {y})"
            );
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::{complete_bipartite, complete_split};

    #[test]
    fn classify_examples() {
        assert_eq!(classify_structure(&Graph::complete(7)).class, StructureClass::Complete);
        let s = classify_structure(&complete_bipartite(3, 3));
        assert_eq!(s.class, StructureClass::CompleteBipartite { a: 3, b: 3 });
        assert_eq!(s.partition, vec![vec![0, 1, 2], vec![3, 4, 5]]);

        let s = classify_structure(&complete_split(2, 3));
        assert_eq!(
            s.class,
            StructureClass::CompleteSplit {
                independent: 2,
                clique: 3
            }
        );
        assert_eq!(s.partition, vec![vec![0, 1], vec![2, 3, 4]]);

        assert_eq!(classify_structure(&Graph::empty(3)).class, StructureClass::Other);
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(classify_structure(&path).class, StructureClass::Other);
    }

    #[test]
    fn equivalence_class_examples() {
        assert_eq!(
            equivalence_classes(&complete_bipartite(3, 3), 4).unwrap(),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
        assert_eq!(
            equivalence_classes(&Graph::complete(5), 4).unwrap(),
            vec![vec![0, 1, 2, 3, 4]]
        );
        assert_eq!(
            equivalence_classes(&Graph::empty(4), 4).unwrap(),
            vec![vec![0, 1, 2, 3]]
        );
    }
}
