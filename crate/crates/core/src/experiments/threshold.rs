use std::cell::Cell;

use serde::Serialize;

use super::{sample_gnp_with, trial_rng, TrialRunner};
use crate::closure::{check_t, percolates};
use crate::density::{eta, lower_bound_exponent};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TrialConfig {
    pub n: usize,
    pub t: usize,
    pub p: f64,
    pub trials: usize,
    pub master_seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PercolationEstimate {
    pub p: f64,
    pub successes: usize,
    pub trials: usize,
    pub fraction: f64,
    pub ci_lo: f64,
    pub ci_hi: f64,
}

const Z95: f64 = 1.959_963_984_540_054;

/// Wilson score interval at 95% for `successes` out of `trials`.
pub fn wilson_interval(successes: usize, trials: usize) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let centre = (phat + z2 / (2.0 * n)) / denom;
    let half = Z95 * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

pub fn percolation_probability(cfg: &TrialConfig, runner: &dyn TrialRunner) -> Result<PercolationEstimate> {
    check_t(cfg.t, 2)?;
    if !(0.0..=1.0).contains(&cfg.p) {
        return Err(Error::InvalidProbability(cfg.p));
    }
    if cfg.trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let TrialConfig {
        n, t, p, master_seed, ..
    } = *cfg;
    let outcomes = runner.run(cfg.trials, &|i| {
        let g = sample_gnp_with(n, p, &mut trial_rng(master_seed, i as u64)).expect("p checked");
        percolates(&g, t).expect("t checked")
    });
    let successes = outcomes.iter().filter(|&&b| b).count();
    let (ci_lo, ci_hi) = wilson_interval(successes, cfg.trials);
    Ok(PercolationEstimate {
        p,
        successes,
        trials: cfg.trials,
        fraction: successes as f64 / cfg.trials as f64,
        ci_lo,
        ci_hi,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PcConfig {
    pub n: usize,
    pub t: usize,
    pub trials_per_step: usize,
    /// Stop once `p_hi − p_lo < tolerance · p_hat`.
    pub tolerance: f64,
    pub seed: u64,
    pub target_prob: f64,
}

impl PcConfig {
    pub fn new(n: usize, t: usize, trials_per_step: usize, tolerance: f64, seed: u64) -> Self {
        PcConfig {
            n,
            t,
            trials_per_step,
            tolerance,
            seed,
            target_prob: 0.5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThresholdEstimate {
    pub n: usize,
    pub t: usize,
    pub p_lo: f64,
    pub p_hi: f64,
    pub p_hat: f64,
    pub fraction_lo: f64,
    pub fraction_hi: f64,
    pub target_prob: f64,
    pub trials_per_step: usize,
    pub tolerance: f64,
    pub seed: u64,
    /// Number of probabilities at which percolation was sampled.
    pub evaluations: usize,
}

const MAX_EVALUATIONS: usize = 80;

/// Initial bracket `[n^{−t/(2t−3)} / 10, 10 · n^{−1/η(t)}]`, clipped to `[0, 1]`.
/// For `t < 4`, where `η` is undefined, `[1/(10n), min(1, 10 log n / n)]`.
fn initial_bracket(n: usize, t: usize) -> (f64, f64) {
    let nf = n as f64;
    if t >= 4 {
        let lower = lower_bound_exponent(t).expect("t >= 4").to_f64();
        let upper = eta(t).expect("t >= 4").recip().to_f64();
        ((nf.powf(-lower) / 10.0).min(1.0), (10.0 * nf.powf(-upper)).min(1.0))
    } else {
        (1.0 / (10.0 * nf), (10.0 * nf.ln() / nf).min(1.0))
    }
}

/// Geometric bisection for the `p` where the percolation frequency crosses
/// `target_prob`. All evaluations reuse trial streams `0..trials_per_step`,
/// so the frequency is monotone in `p` and the bracket is consistent.
pub fn estimate_pc(cfg: &PcConfig, runner: &dyn TrialRunner) -> Result<ThresholdEstimate> {
    check_t(cfg.t, 2)?;
    if cfg.n < cfg.t + 2 {
        return Err(Error::BracketNotFound { n: cfg.n, t: cfg.t });
    }
    if cfg.tolerance.is_nan() || cfg.tolerance <= 0.0 {
        return Err(Error::InvalidParameter("tolerance must be positive".into()));
    }
    if !(cfg.target_prob > 0.0 && cfg.target_prob <= 1.0) {
        return Err(Error::InvalidParameter("target probability must lie in (0, 1]".into()));
    }
    let evaluations = Cell::new(0usize);
    let fraction = |p: f64| -> Result<f64> {
        evaluations.set(evaluations.get() + 1);
        let est = percolation_probability(
            &TrialConfig {
                n: cfg.n,
                t: cfg.t,
                p,
                trials: cfg.trials_per_step,
                master_seed: cfg.seed,
            },
            runner,
        )?;
        Ok(est.fraction)
    };
    let not_found = || Error::BracketNotFound { n: cfg.n, t: cfg.t };

    let (mut lo, mut hi) = initial_bracket(cfg.n, cfg.t);
    let mut f_lo = fraction(lo)?;
    while f_lo >= cfg.target_prob {
        lo /= 10.0;
        if lo < 1e-12 {
            return Err(not_found());
        }
        f_lo = fraction(lo)?;
    }
    let mut f_hi = fraction(hi)?;
    while f_hi < cfg.target_prob {
        if hi >= 1.0 {
            return Err(not_found());
        }
        hi = (hi * 10.0).min(1.0);
        f_hi = fraction(hi)?;
    }
    loop {
        let mid = (lo * hi).sqrt();
        if hi - lo < cfg.tolerance * mid || evaluations.get() >= MAX_EVALUATIONS || !(lo < mid && mid < hi) {
            break;
        }
        let f = fraction(mid)?;
        if f >= cfg.target_prob {
            hi = mid;
            f_hi = f;
        } else {
            lo = mid;
            f_lo = f;
        }
    }
    Ok(ThresholdEstimate {
        n: cfg.n,
        t: cfg.t,
        p_lo: lo,
        p_hi: hi,
        p_hat: (lo * hi).sqrt(),
        fraction_lo: f_lo,
        fraction_hi: f_hi,
        target_prob: cfg.target_prob,
        trials_per_step: cfg.trials_per_step,
        tolerance: cfg.tolerance,
        seed: cfg.seed,
        evaluations: evaluations.get(),
    })
}
