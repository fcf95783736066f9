//! Exhaustive maximum density over all vertex subsets, walked in Gray-code
//! order so each step toggles one vertex and updates the induced edge count
//! with a single popcount.

use std::ops::Range;

use super::{DensityReport, Method, Rational};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const BRUTE_FORCE_MAX_VERTICES: usize = 26;

#[derive(Clone, Copy)]
struct Best {
    edges: u64,
    size: u64,
    mask: u32,
}

impl Best {
    /// Denser first, then fewer vertices, then smaller mask. Total order, so
    /// the result does not depend on how the index range is split.
    fn beats(&self, other: &Best) -> bool {
        let lhs = self.edges * other.size;
        let rhs = other.edges * self.size;
        lhs > rhs || (lhs == rhs && (self.size, self.mask) < (other.size, other.mask))
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u32, |m, w| m | 1 << w))
        .collect()
}

#[inline]
fn gray(i: u64) -> u32 {
    (i ^ (i >> 1)) as u32
}

pub fn max_density_bruteforce(g: &Graph) -> Result<DensityReport> {
    max_density_bruteforce_range(g, 1..1u64 << g.n())
}

/// Best subset among the Gray-code indices in `range`, intersected with
/// `1..2^n`. Disjoint ranges can be solved independently and the report
/// with the larger value kept; ties resolve identically either way.
pub fn max_density_bruteforce_range(g: &Graph, range: Range<u64>) -> Result<DensityReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let adj = masks(g);
    let start = range.start.max(1);
    let end = range.end.min(1u64 << n);

    // Vertex 0 alone is a valid answer whenever the range is empty or all
    // subsets in it are sparser.
    let mut best = Best {
        edges: 0,
        size: 1,
        mask: 1,
    };
    if start < end {
        let mut cur = gray(start);
        let mut edges: u64 = (0..n)
            .filter(|&v| cur & (1 << v) != 0)
            .map(|v| (adj[v] & cur).count_ones() as u64)
            .sum::<u64>()
            / 2;
        let mut size = cur.count_ones() as u64;
        let cand = Best { edges, size, mask: cur };
        if cand.beats(&best) {
            best = cand;
        }
        for i in start + 1..end {
            let v = i.trailing_zeros() as usize;
            let bit = 1u32 << v;
            if cur & bit == 0 {
                edges += (adj[v] & cur).count_ones() as u64;
                cur |= bit;
                size += 1;
            } else {
                cur &= !bit;
                edges -= (adj[v] & cur).count_ones() as u64;
                size -= 1;
            }
            let cand = Best { edges, size, mask: cur };
            if cand.beats(&best) {
                best = cand;
            }
        }
    }
    let witness = VertexSet::from_vertices(n, (0..n).filter(|&v| best.mask & (1 << v) != 0))?;
    Ok(DensityReport {
        value: Rational::new(best.edges as i64, best.size as i64),
        witness,
        method: Method::Bruteforce,
    })
}
