//! Fans of `K_{2,r}` copies glued at one vertex, the three-block graphs
//! `H_t` assembled from them, and a few standard families.
//!
//! Vertex numbering is fixed: blocks in the order u, v, w; inside a block
//! the hub, then the part vertices in index order, then the middle vertices
//! copy by copy.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Block {
    U,
    V,
    W,
}

impl Block {
    fn letter(self) -> char {
        match self {
            Block::U => 'u',
            Block::V => 'v',
            Block::W => 'w',
        }
    }
}

/// Role of a gadget vertex. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    /// The shared vertex `u`, `v` or `w` of a fan.
    Hub(Block),
    /// `u_i`, `v_j` or `w_k`.
    Part { block: Block, index: usize },
    /// Vertex `slot` on the r-side of copy `copy`.
    Middle { block: Block, copy: usize, slot: usize },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Role::Hub(b) => write!(f, "{}", b.letter()),
            Role::Part { block, index } => write!(f, "{}_{}", block.letter(), index),
            Role::Middle { block, copy, slot } => write!(f, "middle({},{},{})", block.letter(), copy, slot),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGadget {
    pub graph: Graph,
    pub roles: Vec<Role>,
}

impl LabeledGadget {
    pub fn vertex(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    pub fn hub(&self, block: Block) -> Option<usize> {
        self.vertex(Role::Hub(block))
    }

    /// Part vertices of a block in index order.
    pub fn parts(&self, block: Block) -> Vec<usize> {
        let mut out: Vec<(usize, usize)> = self
            .roles
            .iter()
            .enumerate()
            .filter_map(|(v, r)| match *r {
                Role::Part { block: b, index } if b == block => Some((index, v)),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out.into_iter().map(|(_, v)| v).collect()
    }

    pub fn middles(&self, block: Block) -> Vec<usize> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| matches!(r, Role::Middle { block: b, .. } if *b == block))
            .map(|(v, _)| v)
            .collect()
    }

    /// `# role <vertex> <tag>` lines for the edge-list header.
    pub fn role_comments(&self) -> Vec<String> {
        self.roles
            .iter()
            .enumerate()
            .map(|(v, r)| format!("role {v} {r}"))
            .collect()
    }
}

#[derive(Default)]
struct Builder {
    roles: Vec<Role>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn push(&mut self, role: Role) -> usize {
        self.roles.push(role);
        self.roles.len() - 1
    }

    /// `s` copies of `K_{2,r}` sharing the hub; returns `(hub, parts)`.
    fn fan(&mut self, block: Block, r: usize, s: usize) -> (usize, Vec<usize>) {
        let hub = self.push(Role::Hub(block));
        let parts: Vec<usize> = (1..=s).map(|index| self.push(Role::Part { block, index })).collect();
        for (i, &part) in parts.iter().enumerate() {
            for slot in 1..=r {
                let m = self.push(Role::Middle {
                    block,
                    copy: i + 1,
                    slot,
                });
                self.edges.push((hub, m));
                self.edges.push((part, m));
            }
        }
        (hub, parts)
    }

    fn finish(self) -> LabeledGadget {
        let graph = Graph::from_edges(self.roles.len(), &self.edges).expect("gadget edges are valid");
        LabeledGadget {
            graph,
            roles: self.roles,
        }
    }
}

/// `s` copies of `K_{2,r}` glued along one vertex of their 2-sides:
/// `1 + s + s·r` vertices and `2·s·r` edges.
pub fn build_fan(r: usize, s: usize) -> Result<LabeledGadget> {
    if s == 0 {
        return Err(Error::InvalidParameter("a fan needs at least one copy (s >= 1)".into()));
    }
    let mut b = Builder::default();
    b.fan(Block::U, r, s);
    Ok(b.finish())
}

/// Split of `t − 1` into the u-block copy count `r = ⌊(t−1)/2⌋` and the
/// v-block copy count `s = t − 1 − r`.
pub fn ht_split(t: usize) -> (usize, usize) {
    let r = (t - 1) / 2;
    (r, t - 1 - r)
}

/// The three-block gadget for `t ≥ 4`: fans with hubs u, v, w, where u is
/// joined to v and every `v_j`, and v is joined to w and every `w_k`.
pub fn build_ht(t: usize) -> Result<LabeledGadget> {
    if t < 4 {
        return Err(Error::InvalidT { t, min: 4 });
    }
    let (r, s) = ht_split(t);
    let mut b = Builder::default();
    let (u, _) = b.fan(Block::U, t - 1, r);
    let (v, vs) = b.fan(Block::V, s - 1, s);
    let (w, ws) = b.fan(Block::W, r - 1, t - 2);
    b.edges.push((u, v));
    b.edges.extend(vs.iter().map(|&vj| (u, vj)));
    b.edges.push((v, w));
    b.edges.extend(ws.iter().map(|&wk| (v, wk)));
    Ok(b.finish())
}

/// Fan of `t − 2` copies of `K_{2,t−1}`; its closure contains `K_{t−1,t−1}`.
pub fn build_remark_gadget(t: usize) -> Result<LabeledGadget> {
    if t < 4 {
        return Err(Error::InvalidT { t, min: 4 });
    }
    build_fan(t - 1, t - 2)
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y))).collect();
    Graph::from_edges(a + b, &edges).expect("valid")
}

/// Independent set `0..i` fully joined to the clique `i..i+c`.
pub fn complete_split(i: usize, c: usize) -> Graph {
    let mut edges: Vec<_> = (0..i).flat_map(|x| (i..i + c).map(move |y| (x, y))).collect();
    for x in i..i + c {
        for y in x + 1..i + c {
            edges.push((x, y));
        }
    }
    Graph::from_edges(i + c, &edges).expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fan_sizes() {
        let f = build_fan(4, 3).unwrap();
        assert_eq!((f.graph.n(), f.graph.edge_count()), (16, 24));
        let f = build_fan(0, 2).unwrap();
        assert_eq!((f.graph.n(), f.graph.edge_count()), (3, 0));
        let f = build_fan(1, 1).unwrap();
        assert_eq!((f.graph.n(), f.graph.edge_count()), (3, 2));
        assert_eq!(f.graph.degrees(), vec![1, 1, 2]);
        assert!(build_fan(2, 0).is_err());
    }

    #[test]
    fn fan_degrees() {
        let f = build_fan(3, 4).unwrap();
        for m in f.middles(Block::U) {
            assert_eq!(f.graph.degree(m), 2);
        }
        assert_eq!(f.graph.degree(f.hub(Block::U).unwrap()), 12);
        for p in f.parts(Block::U) {
            assert_eq!(f.graph.degree(p), 3);
        }
    }

    #[test]
    fn ht_small_cases() {
        let h = build_ht(4).unwrap();
        assert_eq!((h.graph.n(), h.graph.edge_count()), (13, 16));
        let h = build_ht(5).unwrap();
        assert_eq!(h.graph.n(), 23);
        assert_eq!(ht_split(5), (2, 2));
        assert_eq!(build_ht(3), Err(Error::InvalidT { t: 3, min: 4 }));
    }

    #[test]
    fn ht_closed_forms() {
        for t in 4..=10 {
            let (r, s) = ht_split(t);
            let v = (1 + r + r * (t - 1)) + (1 + s + s * (s - 1)) + (1 + (t - 2) + (t - 2) * (r - 1));
            let e = 2 * r * (t - 1) + 2 * s * (s - 1) + 2 * (t - 2) * (r - 1) + (1 + s) + (1 + (t - 2));
            let h = build_ht(t).unwrap();
            assert_eq!((h.graph.n(), h.graph.edge_count()), (v, e), "t = {t}");
        }
    }

    #[test]
    fn ht8_block_layout() {
        let h = build_ht(8).unwrap();
        let g = &h.graph;
        let (u, v, w) = (
            h.hub(Block::U).unwrap(),
            h.hub(Block::V).unwrap(),
            h.hub(Block::W).unwrap(),
        );
        assert_eq!(h.parts(Block::U).len(), 3);
        assert_eq!(h.parts(Block::V).len(), 4);
        assert_eq!(h.parts(Block::W).len(), 6);
        let mut u_nbrs: Vec<_> = g.neighbors(u).filter(|&x| !h.middles(Block::U).contains(&x)).collect();
        u_nbrs.sort_unstable();
        let mut want = vec![v];
        want.extend(h.parts(Block::V));
        want.sort_unstable();
        assert_eq!(u_nbrs, want);
        let mut v_out: Vec<_> = g
            .neighbors(v)
            .filter(|&x| x != u && !h.middles(Block::V).contains(&x))
            .collect();
        v_out.sort_unstable();
        let mut want = vec![w];
        want.extend(h.parts(Block::W));
        assert_eq!(v_out, want);
        // Copy sizes: K_{2,7}, K_{2,3}, K_{2,2}.
        assert_eq!(h.middles(Block::U).len(), 21);
        assert_eq!(h.middles(Block::V).len(), 12);
        assert_eq!(h.middles(Block::W).len(), 12);
        assert_eq!(h.roles.iter().filter(|r| matches!(r, Role::Hub(_))).count(), 3);
    }

    #[test]
    fn standard_families() {
        assert_eq!(complete_bipartite(2, 4).edge_count(), 8);
        let s = complete_split(2, 3);
        assert_eq!((s.n(), s.edge_count()), (5, 9));
        let r = build_remark_gadget(4).unwrap();
        assert_eq!((r.graph.n(), r.graph.edge_count()), (9, 12));
        assert_eq!(r, build_fan(3, 2).unwrap());
    }

    #[test]
    fn role_labels() {
        let h = build_ht(4).unwrap();
        let c = h.role_comments();
        assert_eq!(c[0], "role 0 u");
        assert_eq!(c[1], "role 1 u_1");
        assert_eq!(c[2], "role 2 middle(u,1,1)");
        assert_eq!(c[5], "role 5 v");
    }
}
