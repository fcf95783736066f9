use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Generator for trial `index` under `master_seed`.
pub fn trial_rng(master_seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    rng.set_stream(index);
    rng
}

/// `G(n, p)` from stream 0 of `seed`.
pub fn sample_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    sample_gnp_with(n, p, &mut trial_rng(seed, 0))
}

/// `G(n, p)` drawing one uniform in `[0, 1)` per pair, pairs in
/// lexicographic order; `uv` is an edge iff its uniform is below `p`.
pub fn sample_gnp_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}
