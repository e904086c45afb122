use std::sync::{Mutex, OnceLock};

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::combinatorics::{EnsembleSpec, HookCache};
use crate::error::{Error, Result};

use super::law::{exact_cdf_rsk, plain_first_row_counts, RSK_BOUND};

/// Value of a truncated Poisson series together with the size of the
/// discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoissonSeries {
    pub value: f64,
    /// `e^{−t²} Σ_{n>n_max} t^{2n}/n!`, an upper bound for the truncation
    /// error since every CDF value lies in `[0, 1]`.
    pub truncation_bound: f64,
}

/// Floating-point CDF tables `Prob(L_n ≤ l)` of uniform permutations, grown
/// on demand and shared between callers.
fn plain_cdf_table(n_max: usize) -> Vec<Vec<f64>> {
    static TABLE: OnceLock<Mutex<(HookCache, Vec<Vec<f64>>)>> = OnceLock::new();
    let lock = TABLE.get_or_init(|| Mutex::new((HookCache::new(), Vec::new())));
    let mut guard = lock.lock().unwrap();
    let (cache, table) = &mut *guard;
    while table.len() <= n_max {
        let n = table.len();
        let counts = plain_first_row_counts(n, cache);
        let total: num_bigint::BigUint = counts.iter().sum();
        let mut acc = num_bigint::BigUint::default();
        let cdf = counts
            .iter()
            .map(|c| {
                acc += c;
                BigRational::new(acc.clone().into(), total.clone().into()).to_f64().unwrap()
            })
            .collect();
        table.push(cdf);
    }
    table[..=n_max].to_vec()
}

/// `ln(e^{−t²} t^{2n}/n!)`, the log-probability that a Poisson variable of
/// mean `t²` equals `n`.
fn ln_poisson_weight(n: usize, t: f64) -> f64 {
    let ln_fact: f64 = (1..=n).map(|k| (k as f64).ln()).sum();
    -t * t + 2.0 * n as f64 * t.ln() - ln_fact
}

/// `P_l(t) = e^{−t²} Σ_{n ≤ n_max} t^{2n}/n! · Prob(L_n ≤ l)` from the exact
/// laws of uniform permutations.
pub fn poisson_gf_series(l: usize, t: f64, n_max: usize) -> Result<PoissonSeries> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("t = {t} must be finite and nonnegative")));
    }
    if n_max > RSK_BOUND {
        return Err(Error::Size(format!("n_max = {n_max} exceeds the exact-law bound {RSK_BOUND}")));
    }
    if t == 0.0 {
        return Ok(PoissonSeries { value: 1.0, truncation_bound: 0.0 });
    }
    let table = plain_cdf_table(n_max);
    let value = table
        .iter()
        .enumerate()
        .map(|(n, cdf)| ln_poisson_weight(n, t).exp() * cdf[l.min(n)])
        .sum();
    let mut truncation_bound = 0.0;
    let mut n = n_max + 1;
    let mut term = ln_poisson_weight(n, t).exp();
    while term > 1e-300 && (term > truncation_bound * 1e-17 || (n as f64) < t * t) {
        truncation_bound += term;
        n += 1;
        term *= t * t / n as f64;
    }
    Ok(PoissonSeries { value, truncation_bound })
}

/// `P_l(t)` as `e^{−t²} det[I_{j−k}(2t)]_{0≤j,k<l}`, the Toeplitz determinant
/// of the weight `e^{2t cos θ}` whose Fourier coefficients are `I_k(2t)`.
pub fn poisson_gf_toeplitz(l: usize, t: f64) -> Result<f64> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("t = {t} must be finite and nonnegative")));
    }
    let coeffs = (0..l.max(1)).map(|k| bessel_i(k as i64, 2.0 * t)).collect::<Result<Vec<_>>>()?;
    let mut a: Vec<Vec<f64>> = (0..l).map(|j| (0..l).map(|k| coeffs[j.abs_diff(k)]).collect()).collect();
    Ok((-t * t).exp() * determinant(&mut a))
}

/// Determinant by LU decomposition with partial pivoting (destroys `a`).
fn determinant(a: &mut [Vec<f64>]) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for c in 0..n {
        let pivot = (c..n).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs())).unwrap();
        if a[pivot][c] == 0.0 {
            return 0.0;
        }
        if pivot != c {
            a.swap(pivot, c);
            det = -det;
        }
        det *= a[c][c];
        for r in c + 1..n {
            let f = a[r][c] / a[c][c];
            for k in c..n {
                a[r][k] -= f * a[c][k];
            }
        }
    }
    det
}

/// Modified Bessel function `I_k(z)` of integer order by its power series
/// `Σ_m (z/2)^{2m+k} / (m! (m+k)!)`.
///
/// All terms have the same sign, so the summation is accurate to a few ulps
/// over the supported domain `|k| ≤ 200`, `|z| ≤ 50`.
pub fn bessel_i(order: i64, z: f64) -> Result<f64> {
    if order.abs() > 200 || !(z.abs() <= 50.0) {
        return Err(Error::domain(format!("I_{order}({z}) outside |order| ≤ 200, |z| ≤ 50")));
    }
    let k = order.unsigned_abs();
    let half = z.abs() / 2.0;
    // first term (z/2)^k / k! as a product to avoid overflow
    let mut term = 1.0;
    for i in 1..=k {
        term *= half / i as f64;
    }
    let mut sum = term;
    let q = half * half;
    let mut m = 0u64;
    loop {
        term *= q / ((m + 1) as f64 * (m + 1 + k) as f64);
        sum += term;
        m += 1;
        let decreasing = q < ((m + 1) * (m + 1 + k)) as f64;
        if decreasing && term <= sum * 1e-17 || term == 0.0 {
            break;
        }
    }
    Ok(if z < 0.0 && k % 2 == 1 { -sum } else { sum })
}

/// Exact `Prob(L_n ≤ l)` against its Poissonized value at Poisson mean `n`
/// (`t = √n`).
#[derive(Debug, Clone, PartialEq)]
pub struct DepoissonizeCheck {
    pub exact: BigRational,
    pub poissonized: f64,
    /// `poissonized − exact`.
    pub gap: f64,
}

pub fn depoissonize_check(n: usize, l: usize) -> Result<DepoissonizeCheck> {
    let exact = exact_cdf_rsk(&EnsembleSpec::plain(n))?.cdf(l);
    let poissonized = poisson_gf_toeplitz(l, (n as f64).sqrt())?;
    let gap = poissonized - exact.to_f64().unwrap();
    Ok(DepoissonizeCheck { exact, poissonized, gap })
}
