//! Exact tools for `K_{2,t}`-bootstrap percolation: the closure process,
//! the extremal gadgets `ℋ_t`, maximum subgraph density, non-percolation
//! witnesses and Monte Carlo threshold estimation on `G(n, p)`.

pub mod closure;
pub mod density;
pub mod error;
pub mod experiments;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod witness;

pub use closure::{close_k2t, closure, percolates, ClosureTrace, Step};
pub use density::{eta, max_density_bruteforce, max_density_flow, DensityReport, Method, Rational};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
