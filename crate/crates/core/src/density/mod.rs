//! Exact densities `|E| / |V|`, maximum subgraph density and `η(t)`.
//!
//! Only induced subgraphs are searched: deleting edges from a subgraph on a
//! fixed vertex set can only lower its density, so the maximum over all
//! subgraphs is attained by an induced one. Every comparison is done on
//! exact rationals.

mod brute;
mod candidates;
mod flow;
mod rational;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use brute::{max_density_bruteforce, max_density_bruteforce_range, BRUTE_FORCE_MAX_VERTICES};
pub use candidates::{even_case_sets, seven_candidate_densities, Candidate};
pub use flow::max_density_flow;
pub use rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bruteforce,
    Flow,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensityReport {
    pub value: Rational,
    /// Vertex set whose induced subgraph attains `value`.
    pub witness: VertexSet,
    pub method: Method,
}

impl DensityReport {
    /// Recomputes the density of the witness in `g`.
    pub fn check(&self, g: &Graph) -> bool {
        !self.witness.is_empty() && density_of(g, &self.witness) == self.value
    }
}

pub fn density(g: &Graph) -> Result<Rational> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(Rational::new(g.edge_count() as i64, g.n() as i64))
}

/// Density of the subgraph induced on a nonempty `s`.
pub fn density_of(g: &Graph, s: &VertexSet) -> Rational {
    Rational::new(g.edges_within(s) as i64, s.len() as i64)
}

/// `(6t² − 14t + 12)/(3t² − 4t + 8)` for even `t`, `(2t² − 4t + 2)/(t² − t + 2)`
/// for odd `t`; defined for `t ≥ 4`.
pub fn eta(t: usize) -> Result<Rational> {
    if t < 4 {
        return Err(Error::InvalidT { t, min: 4 });
    }
    let t = t as i64;
    Ok(if t % 2 == 0 {
        Rational::new(6 * t * t - 14 * t + 12, 3 * t * t - 4 * t + 8)
    } else {
        Rational::new(2 * t * t - 4 * t + 2, t * t - t + 2)
    })
}

/// `1 / m(H)`: `G(n, p)` contains a copy of `H` around `p = n^{-1/m(H)}`.
pub fn containment_threshold_exponent(h: &Graph) -> Result<Rational> {
    if h.edge_count() == 0 {
        return Err(Error::EdgelessPattern);
    }
    Ok(max_density_flow(h)?.value.recip())
}

/// Exponent `t/(2t − 3)` of the general lower bound `n^{−t/(2t−3)}`.
pub fn lower_bound_exponent(t: usize) -> Result<Rational> {
    if t < 4 {
        return Err(Error::InvalidT { t, min: 4 });
    }
    Ok(Rational::new(t as i64, 2 * t as i64 - 3))
}
