//! Symmetrized random permutations and their longest increasing subsequences.
//!
//! The crate is split along the lines of the computation:
//!
//! * [`combinatorics`] samples the five symmetry classes of permutations and
//!   point configurations, computes LIS, RSK, hook-length dimensions and the
//!   random-turn walker bijection.
//! * [`exact`] computes exact finite-size laws of the LIS (enumeration and
//!   RSK sums), the Poissonized generating function by series and by the
//!   Bessel–Toeplitz determinant, the β-Plancherel measure and Regev sums.
//! * [`painleve`] solves the Hastings–McLeod Painlevé II problem in
//!   double-double precision and evaluates the Tracy–Widom family together
//!   with the interpolating laws `F^□(x;w)` and `F^⊠(x;w)`.
//! * [`lpp`] simulates the symmetrized geometric last-passage models.
//! * [`stats`] holds scalings, empirical CDFs, KS distances and moments.
//! * [`montecarlo`] fans sampling jobs out over worker threads with
//!   per-index seeding.

pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod lpp;
pub mod montecarlo;
pub mod painleve;
pub mod seed;
pub mod stats;

pub use error::{Error, Result};
