//! Closure on twin classes.
//!
//! Two vertices with `t − 1` common neighbours end up as twins in the
//! closure (`N(x) \ {y} = N(y) \ {x}`), and twinhood is transitive there.
//! So the evolving graph is always a blow-up of a quotient graph whose
//! nodes are classes of known twins. A class is a clique or an
//! independent set, and two classes are either fully joined or not joined
//! at all. Merging two classes unions their quotient neighbourhoods, so the
//! quotient never gains edges. Percolation on `G(n, p)` then costs about
//! `O(Σ deg²)` instead of the `Θ(n³)` needed to materialise a dense
//! closure edge by edge.
//!
//! Every merge is forced, so the represented graph stays inside the
//! closure. The run stops once no two classes reach `t − 1` common
//! neighbours, so the final state is closed and equals the closure.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::graph::Graph;

/// FIFO of class pairs that skips pairs already waiting.
#[derive(Default)]
struct Worklist {
    queue: VecDeque<(usize, usize)>,
    queued: HashSet<(usize, usize)>,
}

impl Worklist {
    fn push(&mut self, a: usize, b: usize) {
        let key = (a.min(b), a.max(b));
        if self.queued.insert(key) {
            self.queue.push_back(key);
        }
    }

    fn pop(&mut self) -> Option<(usize, usize)> {
        let key = self.queue.pop_front()?;
        self.queued.remove(&key);
        Some(key)
    }
}

#[derive(Debug, Clone)]
pub struct TwinQuotient {
    n: usize,
    parent: Vec<usize>,
    size: Vec<usize>,
    clique: Vec<bool>,
    adj: Vec<BTreeSet<usize>>,
}

impl TwinQuotient {
    pub fn build(g: &Graph, t: usize) -> Self {
        assert!(t >= 2);
        let n = g.n();
        let mut q = TwinQuotient {
            n,
            parent: (0..n).collect(),
            size: vec![1; n],
            clique: vec![false; n],
            adj: (0..n).map(|v| g.neighbors(v).collect()).collect(),
        };
        let need = t - 1;
        let mut work = VecDeque::new();
        // Initial candidates: pairs at distance two with enough common neighbours.
        let mut count = vec![0usize; n];
        let mut touched = Vec::new();
        for x in 0..n {
            for c in g.neighbors(x) {
                for y in g.neighbors(c) {
                    if y > x {
                        if count[y] == 0 {
                            touched.push(y);
                        }
                        count[y] += 1;
                    }
                }
            }
            for &y in &touched {
                if count[y] >= need {
                    work.push_back((x, y));
                }
                count[y] = 0;
            }
            touched.clear();
        }
        q.run(need, work);
        q
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn find_const(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    /// Common neighbours of a vertex of class `x` and a vertex of class `y`.
    fn codegree(&self, x: usize, y: usize) -> usize {
        let (small, large) = if self.adj[x].len() <= self.adj[y].len() {
            (&self.adj[x], &self.adj[y])
        } else {
            (&self.adj[y], &self.adj[x])
        };
        let mut c: usize = small.iter().filter(|z| large.contains(z)).map(|&z| self.size[z]).sum();
        if self.adj[x].contains(&y) {
            if self.clique[x] {
                c += self.size[x] - 1;
            }
            if self.clique[y] {
                c += self.size[y] - 1;
            }
        }
        c
    }

    /// Merges classes until no two reach `need` common neighbours.
    ///
    /// Invariant: every pair of current classes at or above the threshold
    /// has a queued entry. Merging `gone` into `keep` raises the codegree
    /// of a pair only if the pair lies inside `N(W)`, or is `(W, z)` with
    /// `z ∈ N(W)` and `W` a clique, or is `(W, z)` with `z` adjacent to a
    /// class in `N(gone) \ N(keep)`. Everything else was already at its
    /// old value relative to `keep`, so only those pairs are queued.
    fn run(&mut self, need: usize, work: VecDeque<(usize, usize)>) {
        let mut queue = Worklist::default();
        for (a, b) in work {
            queue.push(a, b);
        }
        while let Some((a, b)) = queue.pop() {
            let (x, y) = (self.find(a), self.find(b));
            if x == y || self.codegree(x, y) < need {
                continue;
            }
            let (keep, gone) = if self.adj[x].len() >= self.adj[y].len() {
                (x, y)
            } else {
                (y, x)
            };
            let gained: Vec<usize> = self.adj[gone]
                .iter()
                .copied()
                .filter(|&q| q != keep && !self.adj[keep].contains(&q))
                .collect();
            let w = self.merge(keep, gone);
            let nbrs: Vec<usize> = self.adj[w].iter().copied().collect();
            if self.size[w] >= need {
                // Every two neighbours of w share its members, so they merge
                // in a chain.
                for pair in nbrs.windows(2) {
                    queue.push(pair[0], pair[1]);
                }
            } else {
                for (i, &p) in nbrs.iter().enumerate() {
                    for &r in &nbrs[i + 1..] {
                        queue.push(p, r);
                    }
                }
            }
            if self.clique[w] {
                for &z in &nbrs {
                    queue.push(w, z);
                }
            }
            for q in gained {
                for &z in &self.adj[q] {
                    if z != w {
                        queue.push(w, z);
                    }
                }
            }
        }
    }

    fn merge(&mut self, keep: usize, gone: usize) -> usize {
        let joined = self.adj[keep].contains(&gone);
        let clique = joined || (self.clique[keep] && self.size[keep] > 1) || (self.clique[gone] && self.size[gone] > 1);
        let moved = std::mem::take(&mut self.adj[gone]);
        self.adj[keep].remove(&gone);
        for z in moved {
            if z == keep {
                continue;
            }
            self.adj[z].remove(&gone);
            self.adj[z].insert(keep);
            self.adj[keep].insert(z);
        }
        self.parent[gone] = keep;
        self.size[keep] += self.size[gone];
        self.clique[keep] = clique;
        keep
    }

    /// Twin classes of the closure, each sorted, ordered by smallest member.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for v in 0..self.n {
            by_root[self.find_const(v)].push(v);
        }
        let mut out: Vec<Vec<usize>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
        out.sort();
        out
    }

    pub fn is_complete(&self) -> bool {
        let roots: Vec<usize> = (0..self.n).filter(|&v| self.parent[v] == v).collect();
        roots
            .iter()
            .all(|&r| (self.size[r] == 1 || self.clique[r]) && self.adj[r].len() == roots.len() - 1)
    }

    pub fn to_graph(&self) -> Graph {
        let roots: Vec<usize> = (0..self.n).map(|v| self.find_const(v)).collect();
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                let (ru, rv) = (roots[u], roots[v]);
                let edge = if ru == rv {
                    self.clique[ru]
                } else {
                    self.adj[ru].contains(&rv)
                };
                if edge {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::close_k2t;
    use crate::gadgets::{build_ht, build_remark_gadget, complete_bipartite};

    #[test]
    fn matches_sequential_engine_on_gadgets() {
        for t in 4..=6 {
            for g in [build_ht(t).unwrap().graph, build_remark_gadget(t).unwrap().graph] {
                let q = TwinQuotient::build(&g, t);
                assert_eq!(q.to_graph(), close_k2t(&g, t).unwrap().0);
            }
        }
    }

    #[test]
    fn k33_classes_are_the_sides() {
        let q = TwinQuotient::build(&complete_bipartite(3, 3), 3);
        assert_eq!(q.classes(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(!q.is_complete());
    }

    #[test]
    fn complete_graph_is_complete() {
        let q = TwinQuotient::build(&Graph::complete(6), 4);
        assert!(q.is_complete());
        assert_eq!(q.classes(), vec![(0..6).collect::<Vec<_>>()]);
    }
}
