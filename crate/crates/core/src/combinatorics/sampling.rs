//! Exact uniform samplers for the discrete ensembles.

use rand::seq::SliceRandom;
use rand::{Rng, RngExt};

use crate::error::{Error, Result};

use super::permutation::Permutation;
use super::symmetry::{EnsembleSpec, SymmetryType};

/// Uniform element of `S^○_{n,m}`: an involution of `1..=2n+m` with exactly
/// `m` fixed points.
///
/// The fixed positions are a uniform `m`-subset; the remaining `2n`
/// positions are matched by repeatedly pairing the smallest unpaired
/// position with a uniformly chosen other one, so each matching has
/// probability `1/(2n−1)!!`.
pub fn sample_involution<R: Rng + ?Sized>(n: usize, m: usize, rng: &mut R) -> Permutation {
    let size = 2 * n + m;
    let mut images = vec![usize::MAX; size];
    let mut positions: Vec<usize> = (0..size).collect();
    let (fixed, _) = positions.partial_shuffle(rng, m);
    for &i in fixed.iter() {
        images[i] = i;
    }
    pair_remaining(&mut images, rng);
    Permutation::from_zero_based(images)
}

/// Matches all unassigned (`usize::MAX`) slots of `images` uniformly at
/// random: the smallest unpaired slot is paired with a uniform other one.
fn pair_remaining<R: Rng + ?Sized>(images: &mut [usize], rng: &mut R) {
    let mut pool: Vec<usize> = (0..images.len()).filter(|&i| images[i] == usize::MAX).collect();
    // slot[i] = index of i in pool
    let mut slot = vec![usize::MAX; images.len()];
    for (k, &i) in pool.iter().enumerate() {
        slot[i] = k;
    }
    let remove = |pool: &mut Vec<usize>, slot: &mut [usize], i: usize| {
        let k = slot[i];
        pool.swap_remove(k);
        if k < pool.len() {
            slot[pool[k]] = k;
        }
    };
    for a in 0..images.len() {
        if images[a] != usize::MAX {
            continue;
        }
        remove(&mut pool, &mut slot, a);
        let b = pool[rng.random_range(0..pool.len())];
        remove(&mut pool, &mut slot, b);
        images[a] = b;
        images[b] = a;
    }
}

/// Probabilities of the fixed-point count `m` (index) of a uniform
/// involution of `1..=size`: `P(m) ∝ 1/(2^k k! m!)` with `2k + m = size`.
pub fn count_uniform_involution_weights(size: usize) -> Vec<f64> {
    let mut ln_fact = vec![0.0f64; size + 1];
    for k in 1..=size {
        ln_fact[k] = ln_fact[k - 1] + (k as f64).ln();
    }
    let log_w: Vec<Option<f64>> = (0..=size)
        .map(|m| {
            ((size - m) % 2 == 0).then(|| {
                let k = (size - m) / 2;
                -(k as f64 * std::f64::consts::LN_2 + ln_fact[k] + ln_fact[m])
            })
        })
        .collect();
    let max = log_w.iter().flatten().copied().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = log_w.iter().map(|l| l.map_or(0.0, |l| (l - max).exp())).collect();
    let total: f64 = w.iter().sum();
    w.into_iter().map(|x| x / total).collect()
}

/// Uniform involution of `1..=size` with no constraint on fixed points.
pub fn sample_uniform_involution<R: Rng + ?Sized>(size: usize, rng: &mut R) -> Permutation {
    let weights = count_uniform_involution_weights(size);
    let mut u: f64 = rng.random();
    let mut m = size;
    for (k, &w) in weights.iter().enumerate() {
        if u < w {
            m = k;
            break;
        }
        u -= w;
    }
    // rounding can leave u ≥ 0 after the loop; fall back to the last
    // admissible count, which has the right parity
    if (size - m) % 2 == 1 {
        m -= 1;
    }
    sample_involution((size - m) / 2, m, rng)
}

/// Index in `1..=2n` of the signed letter `x ∈ {±1, …, ±n}`; negation
/// corresponds to `ι`.
fn signed_position(x: i64, n: usize) -> usize {
    let n = n as i64;
    (if x < 0 { x + n + 1 } else { x + n }) as usize
}

fn embed_signed(images: &[i64]) -> Permutation {
    // images[a-1] = π(a) for a = 1..=n; π(−a) = −π(a)
    let n = images.len();
    let mut out = vec![0; 2 * n];
    for (k, &v) in images.iter().enumerate() {
        let a = (k + 1) as i64;
        out[signed_position(a, n) - 1] = signed_position(v, n);
        out[signed_position(-a, n) - 1] = signed_position(-v, n);
    }
    Permutation::from_images_unchecked(out)
}

/// Uniform signed permutation of `n` letters, embedded in `S_{2n}`.
pub fn sample_signed_permutation<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut values: Vec<i64> = (1..=n as i64).collect();
    values.shuffle(rng);
    for v in &mut values {
        if rng.random_bool(0.5) {
            *v = -*v;
        }
    }
    embed_signed(&values)
}

/// Uniform signed involution with `m_plus` fixed letters and `m_minus`
/// negated letters (hence `2m₊` fixed and `2m₋` negated points after the
/// embedding into `S_{4n+2m₊+2m₋}`); the other `2n` letters are matched
/// uniformly and every pair gets an independent uniform sign.
pub fn sample_signed_involution<R: Rng + ?Sized>(n: usize, m_plus: usize, m_minus: usize, rng: &mut R) -> Permutation {
    let letters = 2 * n + m_plus + m_minus;
    let mut images = vec![usize::MAX; letters];
    let mut idx: Vec<usize> = (0..letters).collect();
    let (special, _) = idx.partial_shuffle(rng, m_plus + m_minus);
    let mut signed = vec![0i64; letters];
    for (k, &i) in special.iter().enumerate() {
        images[i] = i;
        signed[i] = if k < m_plus { i as i64 + 1 } else { -(i as i64 + 1) };
    }
    pair_remaining(&mut images, rng);
    for a in 0..letters {
        let b = images[a];
        if a < b {
            let s = if rng.random_bool(0.5) { 1 } else { -1 };
            signed[a] = s * (b as i64 + 1);
            signed[b] = s * (a as i64 + 1);
        }
    }
    embed_signed(&signed)
}

/// Uniform element of the discrete ensemble described by `spec`.
pub fn sample_ensemble_element<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> Result<Permutation> {
    spec.validate()?;
    let perm = match spec.symmetry {
        SymmetryType::Plain => {
            let mut images: Vec<usize> = (1..=spec.n).collect();
            images.shuffle(rng);
            Permutation::from_images_unchecked(images)
        }
        SymmetryType::Invol => sample_involution(spec.n, spec.m, rng),
        SymmetryType::AntiInvol => {
            // π ↦ ιπ maps S^○_{n,m} onto S^◇_{n,m}
            let tau = sample_involution(spec.n, spec.m, rng);
            Permutation::reversal(tau.len()).compose(&tau)
        }
        SymmetryType::Signed => sample_signed_permutation(spec.n, rng),
        SymmetryType::SignedInvol => sample_signed_involution(spec.n, spec.m_plus, spec.m_minus, rng),
    };
    if perm.len() != spec.size() {
        return Err(Error::Invariant(format!("sampled size {} != N = {}", perm.len(), spec.size())));
    }
    Ok(perm)
}
