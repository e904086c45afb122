//! Painlevé II, the Tracy–Widom family and the interpolating laws.
//!
//! Everything rests on one double-double integration of the Hastings–McLeod
//! solution ([`solve_hastings_mcleod`]); the distribution functions are read
//! off the stored integrals, and `F^□`, `F^⊠` additionally need the matrix
//! `m(−iw; x)` from [`solve_m`].

mod airy;
mod dd;
mod m;
mod pii;
mod tw;

pub use airy::{airy, airy_bi};
pub use m::{f_box, f_boxtimes, solve_m, MTable, W_RANGE};
pub use pii::{solve_hastings_mcleod, PIIConfig, PIITable};
pub use tw::{tw_eval, tw_moments, TwFamily, TwKind};
