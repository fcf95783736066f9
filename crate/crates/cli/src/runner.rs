use perclab::experiments::TrialRunner;
use rayon::prelude::*;

use crate::error::{usage, CliError};

/// Trial pool sized by `PERCLAB_WORKERS`, or by rayon's default when unset.
pub struct Pool(rayon::ThreadPool);

impl Pool {
    pub fn from_env() -> Result<Self, CliError> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Ok(raw) = std::env::var("PERCLAB_WORKERS") {
            let workers: usize = raw
                .trim()
                .parse()
                .ok()
                .filter(|&w| w > 0)
                .ok_or_else(|| usage(format!("PERCLAB_WORKERS must be a positive integer, got {raw:?}")))?;
            builder = builder.num_threads(workers);
        }
        builder
            .build()
            .map(Pool)
            .map_err(|e| CliError::Domain(format!("worker pool: {e}")))
    }
}

impl TrialRunner for Pool {
    fn run(&self, count: usize, trial: &(dyn Fn(usize) -> bool + Sync)) -> Vec<bool> {
        self.0.install(|| (0..count).into_par_iter().map(trial).collect())
    }
}
