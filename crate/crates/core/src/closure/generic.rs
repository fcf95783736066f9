//! H-bootstrap closure for an arbitrary small pattern `H`, decided by
//! backtracking subgraph search. Exponential in `|V(H)|`, so only meant
//! as a reference for small instances.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest pattern accepted by [`close_generic`].
pub const MAX_PATTERN_VERTICES: usize = 12;

/// Round process: each round adds every non-edge `e` for which
/// `G_{i−1} + e` contains a copy of `h` using `e`.
pub fn close_generic(g: &Graph, h: &Graph) -> Result<Graph> {
    if h.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    if h.n() > MAX_PATTERN_VERTICES {
        return Err(Error::PatternTooLarge(h.n()));
    }
    let mut state = g.clone();
    loop {
        let mut round = Vec::new();
        for u in 0..state.n() {
            for v in u + 1..state.n() {
                if !state.has_edge(u, v) && creates_copy(&state, h, u, v) {
                    round.push((u, v));
                }
            }
        }
        if round.is_empty() {
            return Ok(state);
        }
        for (u, v) in round {
            state.insert_edge(u, v);
        }
    }
}

/// Whether `g + uv` contains a copy of `h` whose image uses the edge `uv`.
pub fn creates_copy(g: &Graph, h: &Graph, u: usize, v: usize) -> bool {
    if h.n() > g.n() {
        return false;
    }
    let mut plus = g.clone();
    plus.insert_edge(u, v);
    h.edges().any(|(a, b)| {
        [(u, v), (v, u)].into_iter().any(|(fa, fb)| {
            let mut search = Embedding::new(&plus, h, a, b);
            search.map(a, fa);
            search.map(b, fb);
            search.extend(0)
        })
    })
}

struct Embedding<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    image: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl<'a> Embedding<'a> {
    fn new(host: &'a Graph, pattern: &'a Graph, a: usize, b: usize) -> Self {
        // Remaining pattern vertices, each preferring one adjacent to an
        // already ordered vertex so candidates come from a neighbourhood.
        let mut placed = vec![false; pattern.n()];
        placed[a] = true;
        placed[b] = true;
        let mut order = Vec::new();
        while order.len() + 2 < pattern.n() {
            let next = (0..pattern.n())
                .filter(|&x| !placed[x])
                .max_by_key(|&x| {
                    (
                        pattern.neighbors(x).filter(|&y| placed[y]).count(),
                        std::cmp::Reverse(x),
                    )
                })
                .unwrap();
            placed[next] = true;
            order.push(next);
        }
        Embedding {
            host,
            pattern,
            order,
            image: vec![None; pattern.n()],
            used: vec![false; host.n()],
        }
    }

    fn map(&mut self, x: usize, to: usize) {
        self.image[x] = Some(to);
        self.used[to] = true;
    }

    fn unmap(&mut self, x: usize) {
        if let Some(to) = self.image[x].take() {
            self.used[to] = false;
        }
    }

    fn fits(&self, x: usize, to: usize) -> bool {
        !self.used[to]
            && self
                .pattern
                .neighbors(x)
                .all(|y| self.image[y].is_none_or(|fy| self.host.has_edge(to, fy)))
    }

    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let anchor = self.pattern.neighbors(x).find_map(|y| self.image[y]);
        let candidates: Vec<usize> = match anchor {
            Some(fy) => self.host.neighbors(fy).collect(),
            None => (0..self.host.n()).collect(),
        };
        for to in candidates {
            if self.fits(x, to) {
                self.map(x, to);
                if self.extend(depth + 1) {
                    return true;
                }
                self.unmap(x);
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::complete_bipartite;

    #[test]
    fn triangle_completes_path() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let k3 = Graph::complete(3);
        assert_eq!(close_generic(&path, &k3).unwrap(), k3);
    }

    #[test]
    fn completes_k24_minus_edge() {
        let k24 = complete_bipartite(2, 4);
        let minus: Vec<_> = k24.edges().skip(1).collect();
        let g = Graph::from_edges(6, &minus).unwrap();
        assert_eq!(close_generic(&g, &k24).unwrap(), k24);
    }

    #[test]
    fn rejects_bad_patterns() {
        let g = Graph::empty(4);
        assert_eq!(close_generic(&g, &Graph::empty(3)), Err(Error::EdgelessPattern));
        assert_eq!(close_generic(&g, &Graph::complete(13)), Err(Error::PatternTooLarge(13)));
    }

    #[test]
    fn disconnected_pattern() {
        // Two disjoint edges: any non-edge disjoint from an existing edge completes a copy.
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let g = Graph::from_edges(5, &[(0, 1)]).unwrap();
        let c = close_generic(&g, &two).unwrap();
        assert!(c.is_complete());
    }
}
