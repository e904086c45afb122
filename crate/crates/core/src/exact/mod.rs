//! Exact finite-size laws of the LIS, Poissonization, and the β-Plancherel
//! measure.

mod law;
mod plancherel;
mod poisson;

pub use law::{
    exact_cdf_bruteforce, exact_cdf_bruteforce_bounded, exact_cdf_rsk, exact_cdf_rsk_bounded, plain_first_row_counts,
    ExactLaw, BRUTE_FORCE_BOUND_INVOL, BRUTE_FORCE_BOUND_PLAIN, BRUTE_FORCE_BOUND_SIGNED, RSK_BOUND,
};
pub use plancherel::{
    beta_plancherel_pmf, beta_plancherel_pmf_exact, beta_plancherel_sample, first_row, regev_lhs, regev_ln_rhs,
    regev_ln_rhs_hyperplane, regev_ratio, regev_rhs, regev_rhs_hyperplane, PlancherelLaw, PLANCHEREL_BOUND,
};
pub use poisson::{
    bessel_i, depoissonize_check, poisson_gf_series, poisson_gf_toeplitz, DepoissonizeCheck, PoissonSeries,
};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// Natural logarithm of a (possibly huge) positive integer.
pub(crate) fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits < 1000 {
        return x.to_f64().unwrap().ln();
    }
    let shift = bits - 64;
    (x >> shift).to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}
