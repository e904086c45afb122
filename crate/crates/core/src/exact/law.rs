use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::combinatorics::{for_each_partition, EnsembleSpec, HookCache, Permutation, SymmetryType};
use crate::error::{Error, Result};

/// Largest `N` enumerated by [`exact_cdf_bruteforce`] for `□`.
pub const BRUTE_FORCE_BOUND_PLAIN: usize = 10;
/// Largest `N` enumerated for `○` and `◇`.
pub const BRUTE_FORCE_BOUND_INVOL: usize = 12;
/// Largest `N` enumerated for `⊡` and `⊠`.
pub const BRUTE_FORCE_BOUND_SIGNED: usize = 8;
/// Largest `N` handled by [`exact_cdf_rsk`].
pub const RSK_BOUND: usize = 40;

/// Exact distribution of the LIS length `L` over a finite ensemble.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactLaw {
    pub ensemble: EnsembleSpec,
    /// `cdf[l] = Prob(L ≤ l)` for `l = 0, …, N`.
    cdf: Vec<BigRational>,
}

impl ExactLaw {
    /// Builds the law from weights `w[l]` of the event `L = l`.
    fn from_weights(ensemble: EnsembleSpec, weights: &[BigUint]) -> Result<Self> {
        let size = ensemble.size();
        let total: BigUint = weights.iter().sum();
        if total.is_zero() {
            return Err(Error::Invariant(format!("ensemble {ensemble:?} is empty")));
        }
        let total = num_bigint::BigInt::from(total);
        let mut acc = BigUint::zero();
        let cdf = (0..=size)
            .map(|l| {
                if let Some(w) = weights.get(l) {
                    acc += w;
                }
                BigRational::new(acc.clone().into(), total.clone())
            })
            .collect();
        Ok(ExactLaw { ensemble, cdf })
    }

    /// `Prob(L ≤ l)`; equals 1 for `l ≥ N`.
    pub fn cdf(&self, l: usize) -> BigRational {
        self.cdf.get(l).cloned().unwrap_or_else(|| self.cdf.last().unwrap().clone())
    }

    pub fn cdf_f64(&self, l: usize) -> f64 {
        self.cdf(l).to_f64().unwrap_or(f64::NAN)
    }

    /// `Prob(L = l)`.
    pub fn pmf(&self, l: usize) -> BigRational {
        match l {
            0 => self.cdf(0),
            _ => self.cdf(l) - self.cdf(l - 1),
        }
    }

    /// All values `Prob(L ≤ l)` for `l = 0, …, N`.
    pub fn cdf_values(&self) -> &[BigRational] {
        &self.cdf
    }

    pub fn mean(&self) -> f64 {
        (0..self.cdf.len()).map(|l| l as f64 * self.pmf(l).to_f64().unwrap()).sum()
    }

    /// CSV with header `l,numerator,denominator,float_value`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,numerator,denominator,float_value\n");
        for (l, c) in self.cdf.iter().enumerate() {
            writeln!(out, "{l},{},{},{}", c.numer(), c.denom(), crate::stats::fmt_sig(c.to_f64().unwrap())).unwrap();
        }
        out
    }
}

/// Exact law by exhaustive enumeration, with the default size bounds.
pub fn exact_cdf_bruteforce(spec: &EnsembleSpec) -> Result<ExactLaw> {
    let bound = match spec.symmetry {
        SymmetryType::Plain => BRUTE_FORCE_BOUND_PLAIN,
        SymmetryType::Invol | SymmetryType::AntiInvol => BRUTE_FORCE_BOUND_INVOL,
        SymmetryType::Signed | SymmetryType::SignedInvol => BRUTE_FORCE_BOUND_SIGNED,
    };
    exact_cdf_bruteforce_bounded(spec, bound)
}

/// Exact law by exhaustive enumeration of every ensemble element with
/// `N ≤ max_size`.
///
/// The enumeration is independent of the samplers: `○`/`◇` run over all
/// involutions with the prescribed fixed points, and `⊡`/`⊠` filter all of
/// `S_N` by the defining constraints.
pub fn exact_cdf_bruteforce_bounded(spec: &EnsembleSpec, max_size: usize) -> Result<ExactLaw> {
    spec.validate()?;
    let size = spec.size();
    if size > max_size {
        return Err(Error::Size(format!("N = {size} exceeds the enumeration bound {max_size}")));
    }
    let mut counts = vec![0u64; size + 1];
    match spec.symmetry {
        SymmetryType::Plain => Permutation::all(size).for_each(|p| counts[p.lis()] += 1),
        SymmetryType::Invol => {
            Permutation::involutions(size, Some(spec.m)).iter().for_each(|p| counts[p.lis()] += 1)
        }
        SymmetryType::AntiInvol => {
            let iota = Permutation::reversal(size);
            for tau in Permutation::involutions(size, Some(spec.m)) {
                let p = iota.compose(&tau);
                debug_assert!(p.is_anti_involution() && p.ifp_count() == spec.m);
                counts[p.lis()] += 1;
            }
        }
        SymmetryType::Signed => {
            Permutation::all(size).filter(Permutation::commutes_with_reversal).for_each(|p| counts[p.lis()] += 1)
        }
        SymmetryType::SignedInvol => Permutation::involutions(size, Some(2 * spec.m_plus))
            .iter()
            .filter(|p| p.commutes_with_reversal() && p.ifp_count() == 2 * spec.m_minus)
            .for_each(|p| counts[p.lis()] += 1),
    }
    let weights: Vec<BigUint> = counts.into_iter().map(BigUint::from).collect();
    ExactLaw::from_weights(*spec, &weights)
}

/// Exact law through RSK and hook lengths, with the default bound.
pub fn exact_cdf_rsk(spec: &EnsembleSpec) -> Result<ExactLaw> {
    exact_cdf_rsk_bounded(spec, RSK_BOUND)
}

/// Exact law through RSK and hook lengths.
///
/// * `□`: `Prob(L_n ≤ l) = Σ_{λ⊢n, λ₁≤l} d_λ² / n!`.
/// * `○`: involutions with `m` fixed points correspond under RSK to the
///   standard tableaux whose shape has exactly `m` odd columns, and the LIS
///   is `λ₁`; the law is `Σ d_λ` over those shapes, normalized.
/// * `◇`: `π ↦ ιπ` maps `S^○` onto `S^◇` and turns the LIS into the LDS,
///   which is the number of rows `λ'₁`.
pub fn exact_cdf_rsk_bounded(spec: &EnsembleSpec, max_size: usize) -> Result<ExactLaw> {
    spec.validate()?;
    let size = spec.size();
    if size > max_size {
        return Err(Error::Size(format!("N = {size} exceeds the partition bound {max_size}")));
    }
    let cache = HookCache::new();
    let mut weights = vec![BigUint::zero(); size + 1];
    match spec.symmetry {
        SymmetryType::Plain => weights = plain_first_row_counts(size, &cache),
        SymmetryType::Invol | SymmetryType::AntiInvol => for_each_partition(size, size, |lambda| {
            if lambda.odd_columns() == spec.m {
                let l = match spec.symmetry {
                    SymmetryType::Invol => lambda.first_row(),
                    _ => lambda.len(),
                };
                weights[l] += cache.get(lambda);
            }
        }),
        SymmetryType::Signed | SymmetryType::SignedInvol => {
            return Err(Error::Unsupported(format!(
                "no RSK law implemented for {}; use the brute-force enumeration",
                spec.symmetry
            )))
        }
    }
    ExactLaw::from_weights(*spec, &weights)
}

/// `counts[l] = #{π ∈ S_n : L(π) = l} = Σ_{λ⊢n, λ₁=l} d_λ²`.
pub fn plain_first_row_counts(n: usize, cache: &HookCache) -> Vec<BigUint> {
    let mut counts = vec![BigUint::zero(); n + 1];
    for_each_partition(n, n, |lambda| {
        let d = cache.get(lambda);
        counts[lambda.first_row()] += &d * &d;
    });
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn small_plain_laws() {
        assert_eq!(exact_cdf_bruteforce(&EnsembleSpec::plain(2)).unwrap().cdf(1), q(1, 2));
        assert_eq!(exact_cdf_bruteforce(&EnsembleSpec::plain(3)).unwrap().cdf(2), q(5, 6));
        assert_eq!(exact_cdf_bruteforce(&EnsembleSpec::plain(1)).unwrap().cdf(1), q(1, 1));
        assert_eq!(exact_cdf_rsk(&EnsembleSpec::plain(3)).unwrap().cdf(2), q(5, 6));
        assert_eq!(exact_cdf_rsk(&EnsembleSpec::plain(4)).unwrap().cdf(4), q(1, 1));
        assert_eq!(exact_cdf_rsk(&EnsembleSpec::invol(1, 1)).unwrap().cdf(3), q(1, 1));
    }

    #[test]
    fn law_invariants() {
        for spec in [EnsembleSpec::plain(6), EnsembleSpec::invol(3, 2), EnsembleSpec::signed(3)] {
            let law = exact_cdf_bruteforce(&spec).unwrap();
            assert_eq!(law.cdf(0), q(0, 1));
            assert_eq!(law.cdf(spec.size()), q(1, 1));
            assert!(law.cdf_values().windows(2).all(|w| w[0] <= w[1]));
        }
        let empty = exact_cdf_bruteforce(&EnsembleSpec::plain(0)).unwrap();
        assert_eq!(empty.cdf(0), q(1, 1));
    }

    #[test]
    fn bounds_and_unsupported() {
        assert!(matches!(exact_cdf_bruteforce(&EnsembleSpec::plain(11)), Err(Error::Size(_))));
        assert!(matches!(exact_cdf_bruteforce(&EnsembleSpec::signed(5)), Err(Error::Size(_))));
        assert!(matches!(exact_cdf_rsk(&EnsembleSpec::signed(2)), Err(Error::Unsupported(_))));
        assert!(matches!(exact_cdf_rsk(&EnsembleSpec::plain(41)), Err(Error::Size(_))));
    }

    #[test]
    fn rsk_matches_bruteforce_on_involution_classes() {
        for n in 0..=4 {
            for m in 0..=4 {
                for spec in [EnsembleSpec::invol(n, m), EnsembleSpec::anti_invol(n, m)] {
                    if spec.size() > 10 {
                        continue;
                    }
                    assert_eq!(exact_cdf_rsk(&spec).unwrap(), exact_cdf_bruteforce(&spec).unwrap(), "{spec:?}");
                }
            }
        }
    }

    #[test]
    fn signed_laws() {
        // S^⊡_1 = {(1 2), (2 1)} → L ∈ {2, 1}
        let law = exact_cdf_bruteforce(&EnsembleSpec::signed(1)).unwrap();
        assert_eq!(law.cdf(1), q(1, 2));
        // ⊠ with n = 0: identity-like fixed/negated letters only
        let law = exact_cdf_bruteforce(&EnsembleSpec::signed_invol(0, 2, 0)).unwrap();
        assert_eq!(law.cdf(3), q(0, 1));
        assert_eq!(law.cdf(4), q(1, 1));
    }

    #[test]
    fn csv_format() {
        let csv = exact_cdf_rsk(&EnsembleSpec::plain(3)).unwrap().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "l,numerator,denominator,float_value");
        assert_eq!(lines[3], "2,5,6,0.833333333333");
        assert_eq!(lines.len(), 5);
        assert!(!csv.contains('\r'));
    }
}
