use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The five symmetry classes of the unit square used to symmetrize a
/// random point configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetryType {
    /// `□`: no symmetry, `S_n`.
    Plain,
    /// `○`: reflection about the diagonal; involutions with `m` fixed points.
    Invol,
    /// `◇`: reflection about the anti-diagonal; `π = ιπ⁻¹ι` with `m`
    /// points on the anti-diagonal.
    AntiInvol,
    /// `⊡`: rotation by π about the centre; signed permutations.
    Signed,
    /// `⊠`: both reflections; signed involutions.
    SignedInvol,
}

impl SymmetryType {
    pub const ALL: [SymmetryType; 5] = [
        SymmetryType::Plain,
        SymmetryType::Invol,
        SymmetryType::AntiInvol,
        SymmetryType::Signed,
        SymmetryType::SignedInvol,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SymmetryType::Plain => "plain",
            SymmetryType::Invol => "invol",
            SymmetryType::AntiInvol => "anti-invol",
            SymmetryType::Signed => "signed",
            SymmetryType::SignedInvol => "signed-invol",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            SymmetryType::Plain => "□",
            SymmetryType::Invol => "○",
            SymmetryType::AntiInvol => "◇",
            SymmetryType::Signed => "⊡",
            SymmetryType::SignedInvol => "⊠",
        }
    }

    /// Whether the fluctuation scale carries the extra `2^{2/3}` factor.
    pub fn is_signed(self) -> bool {
        matches!(self, SymmetryType::Signed | SymmetryType::SignedInvol)
    }
}

impl fmt::Display for SymmetryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "plain" | "box" | "□" => Ok(SymmetryType::Plain),
            "invol" | "involution" | "○" => Ok(SymmetryType::Invol),
            "anti-invol" | "anti_invol" | "antiinvol" | "◇" => Ok(SymmetryType::AntiInvol),
            "signed" | "⊡" => Ok(SymmetryType::Signed),
            "signed-invol" | "signed_invol" | "signedinvol" | "⊠" => {
                Ok(SymmetryType::SignedInvol)
            }
            other => Err(Error::param(format!("unknown symmetry type `{other}`"))),
        }
    }
}

/// Full parameterization of one of the five ensembles.
///
/// `m` is only meaningful for `○`/`◇`; `m_plus`/`m_minus` only for `⊠`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnsembleSpec {
    pub symmetry: SymmetryType,
    pub n: usize,
    pub m: usize,
    pub m_plus: usize,
    pub m_minus: usize,
}

impl EnsembleSpec {
    pub fn plain(n: usize) -> Self {
        Self::raw(SymmetryType::Plain, n, 0, 0, 0)
    }

    pub fn invol(n: usize, m: usize) -> Self {
        Self::raw(SymmetryType::Invol, n, m, 0, 0)
    }

    pub fn anti_invol(n: usize, m: usize) -> Self {
        Self::raw(SymmetryType::AntiInvol, n, m, 0, 0)
    }

    pub fn signed(n: usize) -> Self {
        Self::raw(SymmetryType::Signed, n, 0, 0, 0)
    }

    pub fn signed_invol(n: usize, m_plus: usize, m_minus: usize) -> Self {
        Self::raw(SymmetryType::SignedInvol, n, 0, m_plus, m_minus)
    }

    /// Builds a spec without validation; see [`EnsembleSpec::validate`].
    pub fn raw(symmetry: SymmetryType, n: usize, m: usize, m_plus: usize, m_minus: usize) -> Self {
        EnsembleSpec { symmetry, n, m, m_plus, m_minus }
    }

    /// The boundary-point counts of the α/β regime: `m = [√(2n)α]` for `○`,
    /// `m = [√(2n)β]` for `◇`, `m₊ = [√n α]`, `m₋ = [√n β]` for `⊠`.
    pub fn with_alpha_beta(symmetry: SymmetryType, n: usize, alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha >= 0.0 && beta >= 0.0) {
            return Err(Error::param("alpha and beta must be nonnegative"));
        }
        let r2n = (2.0 * n as f64).sqrt();
        let rn = (n as f64).sqrt();
        let spec = match symmetry {
            SymmetryType::Plain => Self::plain(n),
            SymmetryType::Signed => Self::signed(n),
            SymmetryType::Invol => Self::invol(n, floor_count(r2n * alpha)),
            SymmetryType::AntiInvol => Self::anti_invol(n, floor_count(r2n * beta)),
            SymmetryType::SignedInvol => {
                Self::signed_invol(n, floor_count(rn * alpha), floor_count(rn * beta))
            }
        };
        Ok(spec)
    }

    /// Boundary-point counts of the transition regime around α = 1:
    /// `m = [√(2n) − 2w(2n)^{1/3}]` for `○` and `m₊ = [√n − 2w n^{1/3}]`,
    /// `m₋ = [√n β]` for `⊠`.
    pub fn transitional(symmetry: SymmetryType, n: usize, w: f64, beta: f64) -> Result<Self> {
        let nf = n as f64;
        match symmetry {
            SymmetryType::Invol => {
                let m = (2.0 * nf).sqrt() - 2.0 * w * (2.0 * nf).cbrt();
                if m < 0.0 {
                    return Err(Error::param("transitional m would be negative"));
                }
                Ok(Self::invol(n, floor_count(m)))
            }
            SymmetryType::SignedInvol => {
                let mp = nf.sqrt() - 2.0 * w * nf.cbrt();
                if mp < 0.0 || beta < 0.0 {
                    return Err(Error::param("transitional m_plus would be negative"));
                }
                Ok(Self::signed_invol(n, floor_count(mp), floor_count(nf.sqrt() * beta)))
            }
            other => Err(Error::param(format!("no transition regime for {other}"))),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.symmetry {
            SymmetryType::Plain | SymmetryType::Signed => {
                if self.m != 0 || self.m_plus != 0 || self.m_minus != 0 {
                    return Err(Error::param(format!(
                        "{} ensemble takes no boundary points (m = {}, m+ = {}, m- = {})",
                        self.symmetry, self.m, self.m_plus, self.m_minus
                    )));
                }
            }
            SymmetryType::Invol | SymmetryType::AntiInvol => {
                if self.m_plus != 0 || self.m_minus != 0 {
                    return Err(Error::param(format!("{} ensemble takes m, not m+/m-", self.symmetry)));
                }
            }
            SymmetryType::SignedInvol => {
                if self.m != 0 {
                    return Err(Error::param("signed-invol ensemble takes m+/m-, not m"));
                }
            }
        }
        Ok(())
    }

    /// Size `N` of the underlying permutation.
    pub fn size(&self) -> usize {
        match self.symmetry {
            SymmetryType::Plain => self.n,
            SymmetryType::Invol | SymmetryType::AntiInvol => 2 * self.n + self.m,
            SymmetryType::Signed => 2 * self.n,
            SymmetryType::SignedInvol => 4 * self.n + 2 * self.m_plus + 2 * self.m_minus,
        }
    }
}

/// `[k]`, the largest integer `≤ k`, clamped at zero.
pub(crate) fn floor_count(k: f64) -> usize {
    if k <= 0.0 {
        0
    } else {
        k.floor() as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_conventions() {
        assert_eq!(EnsembleSpec::plain(7).size(), 7);
        assert_eq!(EnsembleSpec::invol(3, 2).size(), 8);
        assert_eq!(EnsembleSpec::anti_invol(3, 2).size(), 8);
        assert_eq!(EnsembleSpec::signed(5).size(), 10);
        assert_eq!(EnsembleSpec::signed_invol(2, 1, 3).size(), 16);
    }

    #[test]
    fn boundary_points_rejected_for_plain_and_signed() {
        assert!(EnsembleSpec::raw(SymmetryType::Plain, 3, 1, 0, 0).validate().is_err());
        assert!(EnsembleSpec::raw(SymmetryType::Signed, 3, 2, 0, 0).validate().is_err());
        assert!(EnsembleSpec::raw(SymmetryType::Invol, 3, 0, 1, 0).validate().is_err());
        assert!(EnsembleSpec::raw(SymmetryType::SignedInvol, 3, 1, 0, 0).validate().is_err());
        for s in SymmetryType::ALL {
            assert!(EnsembleSpec::raw(s, 4, 0, 0, 0).validate().is_ok());
        }
    }

    #[test]
    fn alpha_scaling_uses_floor() {
        let s = EnsembleSpec::with_alpha_beta(SymmetryType::Invol, 50, 0.3, 0.0).unwrap();
        assert_eq!(s.m, 3);
        let s = EnsembleSpec::with_alpha_beta(SymmetryType::SignedInvol, 100, 0.55, 1.0).unwrap();
        assert_eq!((s.m_plus, s.m_minus), (5, 10));
        let s = EnsembleSpec::transitional(SymmetryType::Invol, 4000, 1.0, 0.0).unwrap();
        // √8000 − 2·8000^{1/3} = 89.44 − 40 = 49.44
        assert_eq!(s.m, 49);
    }

    #[test]
    fn parse_round_trip() {
        for s in SymmetryType::ALL {
            assert_eq!(s.name().parse::<SymmetryType>().unwrap(), s);
            assert_eq!(s.symbol().parse::<SymmetryType>().unwrap(), s);
        }
        assert!("hexagon".parse::<SymmetryType>().is_err());
    }
}
