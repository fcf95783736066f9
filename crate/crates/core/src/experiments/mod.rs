//! Monte Carlo on `G(n, p)`: sampling, percolation frequency, threshold
//! bisection and power-law fits.
//!
//! Trial `i` of a run with master seed `s` always draws from ChaCha8 stream
//! `i` of key `s`, and every pair `{u, v}` consumes one uniform in
//! lexicographic order. So one trial at different `p` sees the same
//! uniforms: its graph at `p` is a subgraph of its graph at `p′ > p`, and
//! its percolation indicator is monotone in `p`. Results never depend on
//! how trials are scheduled; callers choose the schedule through a
//! [`TrialRunner`].

mod fit;
mod sampling;
mod threshold;

pub use fit::{fit_exponent, fit_power_law, ExponentBrackets, ExponentFit};
pub use sampling::{sample_gnp, sample_gnp_with, trial_rng};
pub use threshold::{
    estimate_pc, percolation_probability, wilson_interval, PcConfig, PercolationEstimate, ThresholdEstimate,
    TrialConfig,
};

/// Executes independent boolean trials `0..count` and returns their
/// outcomes in index order.
pub trait TrialRunner: Sync {
    fn run(&self, count: usize, trial: &(dyn Fn(usize) -> bool + Sync)) -> Vec<bool>;
}

/// Runs trials one after another on the calling thread.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl TrialRunner for Sequential {
    fn run(&self, count: usize, trial: &(dyn Fn(usize) -> bool + Sync)) -> Vec<bool> {
        (0..count).map(trial).collect()
    }
}
