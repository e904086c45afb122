use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Pow, Zero};
use rand::{Rng, RngExt};

use crate::combinatorics::{for_each_partition, hook_dim, Partition};
use crate::error::{Error, Result};

use super::ln_biguint;

/// Largest `n` for which the β-Plancherel measure is tabulated.
pub const PLANCHEREL_BOUND: usize = 60;

/// The β-Plancherel measure `M^β_n(λ) = d_λ^β / Σ_μ d_μ^β` on partitions of
/// `n`, tabulated in reverse-lexicographic order.
#[derive(Debug, Clone)]
pub struct PlancherelLaw {
    pub n: usize,
    pub beta: f64,
    pub partitions: Vec<Partition>,
    pub probs: Vec<f64>,
    cumulative: Vec<f64>,
}

impl PlancherelLaw {
    /// Inverse-CDF draw.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> &Partition {
        let u: f64 = rng.random::<f64>() * self.cumulative.last().unwrap();
        let k = self.cumulative.partition_point(|&c| c <= u).min(self.partitions.len() - 1);
        &self.partitions[k]
    }

    /// Law of `λ₁`: entry `l` is `M^β_n(λ₁ = l)`.
    pub fn first_row_pmf(&self) -> Vec<f64> {
        let mut pmf = vec![0.0; self.n + 1];
        for (lambda, p) in self.partitions.iter().zip(&self.probs) {
            pmf[lambda.first_row()] += p;
        }
        pmf
    }
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::param(format!("β = {beta} must be positive and finite")));
    }
    Ok(())
}

fn check_n(n: usize) -> Result<()> {
    if n > PLANCHEREL_BOUND {
        return Err(Error::Size(format!("n = {n} exceeds the partition bound {PLANCHEREL_BOUND}")));
    }
    Ok(())
}

/// `M^β_n` in floating point, for any real `β > 0`.
pub fn beta_plancherel_pmf(n: usize, beta: f64) -> Result<PlancherelLaw> {
    check_beta(beta)?;
    check_n(n)?;
    let mut partitions = Vec::new();
    let mut log_w = Vec::new();
    for_each_partition(n, n, |lambda| {
        partitions.push(lambda.clone());
        log_w.push(beta * ln_biguint(&hook_dim(lambda)));
    });
    let max = log_w.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let w: Vec<f64> = log_w.iter().map(|l| (l - max).exp()).collect();
    let total: f64 = w.iter().sum();
    let probs: Vec<f64> = w.iter().map(|x| x / total).collect();
    let cumulative = probs
        .iter()
        .scan(0.0, |acc, p| {
            *acc += p;
            Some(*acc)
        })
        .collect();
    Ok(PlancherelLaw { n, beta, partitions, probs, cumulative })
}

/// `M^β_n` in exact rational arithmetic for integer `β ≥ 1`.
pub fn beta_plancherel_pmf_exact(n: usize, beta: u32) -> Result<Vec<(Partition, BigRational)>> {
    check_beta(beta as f64)?;
    check_n(n)?;
    let mut weights = Vec::new();
    for_each_partition(n, n, |lambda| weights.push((lambda.clone(), hook_dim(lambda).pow(beta))));
    let total: BigUint = weights.iter().map(|(_, w)| w).sum();
    let total = BigInt::from(total);
    Ok(weights.into_iter().map(|(l, w)| (l, BigRational::new(w.into(), total.clone()))).collect())
}

/// One draw from `M^β_n`. Builds the table on every call; use
/// [`PlancherelLaw::sample`] for repeated draws.
pub fn beta_plancherel_sample<R: Rng + ?Sized>(n: usize, beta: f64, rng: &mut R) -> Result<Partition> {
    Ok(beta_plancherel_pmf(n, beta)?.sample(rng).clone())
}

/// `λ₁`.
pub fn first_row(lambda: &Partition) -> usize {
    lambda.first_row()
}

/// `Σ_{λ⊢n, λ₁≤l} d_λ^β`, exactly.
pub fn regev_lhs(n: usize, l: usize, beta: u32) -> Result<BigUint> {
    if n > 120 || (l > 3 && n > 40) {
        return Err(Error::Size(format!("Regev sum for n = {n}, l = {l} is beyond the tabulated range")));
    }
    let mut sum = BigUint::zero();
    for_each_partition(n, l, |lambda| sum += hook_dim(lambda).pow(beta));
    Ok(sum)
}

/// `ln Γ(k/2)` for a positive integer `k`.
fn ln_gamma_half(k: u64) -> f64 {
    let ln_fact = |m: u64| (1..=m).map(|i| (i as f64).ln()).sum::<f64>();
    if k % 2 == 0 {
        ln_fact(k / 2 - 1)
    } else {
        // Γ(j + 1/2) = (2j)! √π / (4^j j!)
        let j = (k - 1) / 2;
        ln_fact(2 * j) + 0.5 * std::f64::consts::PI.ln() - j as f64 * 4f64.ln() - ln_fact(j)
    }
}

/// `ln ∫_{ℝ^l} e^{−(a/2)Σx²} Π_{j<k}|x_j − x_k|^β dx` with `a = βl`, from
/// Mehta's closed form
/// `a^{−l/2 − βl(l−1)/4} (2π)^{l/2} Π_{j=1}^{l} Γ(1 + jβ/2)/Γ(1 + β/2)`.
fn ln_mehta(l: usize, beta: u32) -> f64 {
    let (lf, bf) = (l as f64, beta as f64);
    let a = bf * lf;
    let gammas: f64 = (1..=l as u64).map(|j| ln_gamma_half(2 + j * beta as u64) - ln_gamma_half(2 + beta as u64)).sum();
    -(lf / 2.0 + bf * lf * (lf - 1.0) / 4.0) * a.ln() + lf / 2.0 * (2.0 * std::f64::consts::PI).ln() + gammas
}

fn check_regev(n: usize, l: usize, beta: u32) -> Result<()> {
    if ![1, 2, 4].contains(&beta) {
        return Err(Error::Unsupported(format!("closed form only for β ∈ {{1, 2, 4}}, got {beta}")));
    }
    if l == 0 || n == 0 {
        return Err(Error::param("Regev asymptotics need n, l ≥ 1"));
    }
    Ok(())
}

/// Common prefactor with the normalizing power of `2π` passed in.
fn ln_prefactor(n: usize, l: usize, beta: u32, ln_two_pi_power: f64) -> f64 {
    let (nf, lf, bf) = (n as f64, l as f64, beta as f64);
    let ln_l_fact: f64 = (1..=l).map(|k| (k as f64).ln()).sum();
    bf * (lf * lf / 2.0 * lf.ln() + nf * lf.ln() - ln_two_pi_power - (lf - 1.0) * (lf + 2.0) / 4.0 * nf.ln())
        + (lf - 1.0) / 2.0 * nf.ln()
        - ln_l_fact
}

/// Logarithm of the asymptotic Regev expression exactly as it is usually
/// quoted,
/// `[l^{l²/2} l^n / ((√(2π))^{(l−1)/2} n^{(l−1)(l+2)/4})]^β n^{(l−1)/2}/l! ·
/// ∫_{ℝ^l} e^{−βl Σx²/2} |Δ(x)|^β dx`.
///
/// This form does not reduce to 1 at `l = 1` and is off by a constant
/// factor in general; see [`regev_ln_rhs_hyperplane`] for the normalization
/// that matches the sums.
pub fn regev_ln_rhs(n: usize, l: usize, beta: u32) -> Result<f64> {
    check_regev(n, l, beta)?;
    let two_pi_power = (l as f64 - 1.0) / 2.0 * (2.0 * std::f64::consts::PI).sqrt().ln();
    Ok(ln_prefactor(n, l, beta, two_pi_power) + ln_mehta(l, beta))
}

pub fn regev_rhs(n: usize, l: usize, beta: u32) -> Result<f64> {
    regev_ln_rhs(n, l, beta).map(f64::exp)
}

/// Logarithm of the Regev asymptotics with the constant that matches the
/// sums: the power `(2π)^{(l−1)/2}` in the denominator and the Gaussian
/// integral taken over the hyperplane `Σx_j = 0` in the coordinates
/// `dx₁⋯dx_{l−1}`. The latter equals the full integral divided by
/// `√(2πl/a)`, `a = βl`.
pub fn regev_ln_rhs_hyperplane(n: usize, l: usize, beta: u32) -> Result<f64> {
    check_regev(n, l, beta)?;
    let two_pi_power = (l as f64 - 1.0) / 2.0 * (2.0 * std::f64::consts::PI).ln();
    let a = (beta as usize * l) as f64;
    let hyperplane = ln_mehta(l, beta) - 0.5 * (2.0 * std::f64::consts::PI * l as f64 / a).ln();
    Ok(ln_prefactor(n, l, beta, two_pi_power) + hyperplane)
}

pub fn regev_rhs_hyperplane(n: usize, l: usize, beta: u32) -> Result<f64> {
    regev_ln_rhs_hyperplane(n, l, beta).map(f64::exp)
}

/// `(lhs/rhs, lhs/rhs_hyperplane)` computed in log space.
pub fn regev_ratio(n: usize, l: usize, beta: u32) -> Result<(f64, f64)> {
    let ln_lhs = ln_biguint(&regev_lhs(n, l, beta)?);
    Ok(((ln_lhs - regev_ln_rhs(n, l, beta)?).exp(), (ln_lhs - regev_ln_rhs_hyperplane(n, l, beta)?).exp()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::stream;
    use num_traits::One;

    #[test]
    fn pmf_sums_to_one() {
        for n in 0..=12 {
            for beta in [1u32, 2, 3] {
                let exact = beta_plancherel_pmf_exact(n, beta).unwrap();
                let total: BigRational = exact.iter().map(|(_, p)| p.clone()).sum();
                assert!(total.is_one());
            }
            for beta in [0.5, 1.0, 2.0, 7.5] {
                let law = beta_plancherel_pmf(n, beta).unwrap();
                assert!((law.probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            }
        }
        assert!(beta_plancherel_pmf(3, 0.0).is_err());
        assert!(beta_plancherel_pmf(61, 1.0).is_err());
    }

    #[test]
    fn float_and_exact_agree() {
        let law = beta_plancherel_pmf(9, 2.0).unwrap();
        let exact = beta_plancherel_pmf_exact(9, 2).unwrap();
        for ((l, p), (m, q)) in law.partitions.iter().zip(&law.probs).zip(&exact) {
            assert_eq!(l, m);
            assert!((p - num_traits::ToPrimitive::to_f64(q).unwrap()).abs() < 1e-15);
        }
    }

    #[test]
    fn sampling() {
        let mut rng = stream(1, 0);
        for beta in [0.5, 2.0] {
            assert_eq!(beta_plancherel_sample(1, beta, &mut rng).unwrap().parts(), &[1]);
        }
        let law = beta_plancherel_pmf(5, 1.0).unwrap();
        let mut hist = vec![0usize; law.partitions.len()];
        let samples = 40_000;
        for i in 0..samples {
            let lambda = law.sample(&mut stream(2, i));
            hist[law.partitions.iter().position(|p| p == lambda).unwrap()] += 1;
        }
        for (c, p) in hist.iter().zip(&law.probs) {
            let sd = (samples as f64 * p * (1.0 - p)).sqrt();
            assert!((*c as f64 - samples as f64 * p).abs() < 5.0 * sd);
        }
    }

    #[test]
    fn regev_sums() {
        assert_eq!(regev_lhs(3, 2, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(regev_lhs(2, 1, 7).unwrap(), BigUint::from(1u32));
        let mut fact = BigUint::one();
        for n in 1..=10u32 {
            fact *= n;
            assert_eq!(regev_lhs(n as usize, n as usize, 2).unwrap(), fact);
        }
        assert!(regev_lhs(121, 2, 2).is_err());
    }

    #[test]
    fn regev_constants() {
        assert!((ln_gamma_half(1) - std::f64::consts::PI.sqrt().ln()).abs() < 1e-15);
        assert!((ln_gamma_half(7) - (15.0 / 8.0 * std::f64::consts::PI.sqrt()).ln()).abs() < 1e-14);
        // l = 1: the hyperplane form is exactly 1 = lhs
        for beta in [1, 2, 4] {
            assert!(regev_ln_rhs_hyperplane(5, 1, beta).unwrap().abs() < 1e-14);
        }
        // the quoted form is off by √(2π/β) at l = 1
        let off = regev_ln_rhs(5, 1, 2).unwrap();
        assert!((off - (std::f64::consts::PI).ln() / 2.0).abs() < 1e-14);
        assert!(regev_rhs(5, 2, 3).is_err());
    }

    #[test]
    fn regev_hyperplane_ratio_tends_to_one() {
        // Catalan asymptotics: C_n ~ 4^n / (√π n^{3/2}) (1 − 9/(8n))
        let (_, r) = regev_ratio(120, 2, 2).unwrap();
        assert!((r - (1.0 - 9.0 / 960.0)).abs() < 2e-4, "{r}");
    }
}
