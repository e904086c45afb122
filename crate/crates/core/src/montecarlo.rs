//! Parallel Monte Carlo with per-index seeding.
//!
//! Sample `i` draws only from [`seed::stream`]`(seed, i)`, and results are
//! collected in index order, so the output is the same for every worker
//! count and every partition of the index range.

use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::combinatorics::{sample_ensemble_element, sample_uniform_involution, EnsembleSpec};
use crate::error::{Error, Result};
use crate::lpp::LppSpec;
use crate::seed;

/// Runs `f(rng_i, i)` for `i ∈ [0, count)` and returns the results in index
/// order. `threads = None` uses the global rayon pool (sized by
/// `RAYON_NUM_THREADS` or the number of CPUs); the first error wins.
pub fn run_indexed<T, F>(count: usize, seed: u64, threads: Option<usize>, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng, u64) -> Result<T> + Sync,
{
    let job = || {
        (0..count as u64)
            .into_par_iter()
            .map(|i| f(&mut seed::stream(seed, i), i))
            .collect::<Result<Vec<T>>>()
    };
    match threads {
        None => job(),
        Some(0) => Err(Error::param("thread count must be positive")),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Numerics(format!("cannot start {t} worker threads: {e}")))?
            .install(job),
    }
}

/// LIS of `count` uniform elements of the ensemble `spec`.
pub fn sample_lis(spec: &EnsembleSpec, count: usize, seed: u64, threads: Option<usize>) -> Result<Vec<usize>> {
    spec.validate()?;
    run_indexed(count, seed, threads, |rng, _| Ok(sample_ensemble_element(spec, rng)?.lis()))
}

/// LIS of `count` uniform involutions of `1..=size` (no constraint on the
/// number of fixed points).
pub fn sample_involution_lis(size: usize, count: usize, seed: u64, threads: Option<usize>) -> Result<Vec<usize>> {
    run_indexed(count, seed, threads, |rng, _| Ok(sample_uniform_involution(size, rng).lis()))
}

/// `count` draws of the last-passage value `G(N)`.
pub fn sample_lpp(spec: &LppSpec, count: usize, seed: u64, threads: Option<usize>) -> Result<Vec<u64>> {
    spec.validate()?;
    run_indexed(count, seed, threads, |_, i| Ok(spec.g_from_seed(seed::split(seed, i))))
}
