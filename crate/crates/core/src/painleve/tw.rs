//! The Tracy–Widom family `F, E, F₁, F₂, F₄` and the interpolating laws
//! `F^□(·; w)`, `F^⊠(·; w)` as evaluable distribution functions.
//!
//! With `F = e^{½∫_x^∞ v}` and `E = e^{½∫_x^∞ u}`:
//! `F₂ = F²`, `F₁ = F·E`, `F₄ = F·(E + E⁻¹)/2`.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

use super::m::{interp_log, ln_f_box_node, ln_f_boxtimes_node, solve_m, MTable};
use super::pii::PIITable;

/// Which distribution function to evaluate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TwKind {
    F,
    E,
    F1,
    F2,
    F4,
    FBox(f64),
    FBoxtimes(f64),
}

impl TwKind {
    /// The `w` of the interpolating laws.
    pub fn w(&self) -> Option<f64> {
        match self {
            TwKind::FBox(w) | TwKind::FBoxtimes(w) => Some(*w),
            _ => None,
        }
    }
}

impl fmt::Display for TwKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwKind::F => write!(f, "F"),
            TwKind::E => write!(f, "E"),
            TwKind::F1 => write!(f, "F1"),
            TwKind::F2 => write!(f, "F2"),
            TwKind::F4 => write!(f, "F4"),
            TwKind::FBox(w) => write!(f, "Fbox_{w}"),
            TwKind::FBoxtimes(w) => write!(f, "Fboxtimes_{w}"),
        }
    }
}

/// `ln (E + E⁻¹)/2` from `ln E ≤ 0` without overflow.
fn ln_cosh_half(ln_e: f64) -> f64 {
    let a = -ln_e;
    a + (0.5 * (1.0 + (-2.0 * a).exp())).ln()
}

/// Logarithm of `F, E, F₁, F₂, F₄` from `ln F` and `ln E`.
fn ln_combination(kind: TwKind, ln_f: f64, ln_e: f64) -> Result<f64> {
    Ok(match kind {
        TwKind::F => ln_f,
        TwKind::E => ln_e,
        TwKind::F1 => ln_f + ln_e,
        TwKind::F2 => 2.0 * ln_f,
        TwKind::F4 => ln_f + ln_cosh_half(ln_e),
        TwKind::FBox(_) | TwKind::FBoxtimes(_) => {
            return Err(Error::param("the interpolating laws need an m-table; use TwFamily"))
        }
    })
}

/// `F, E, F₁, F₂` or `F₄` at `x`, by cubic Hermite interpolation of
/// `½∫_x^∞ v` and `½∫_x^∞ u` (whose derivatives `−v/2`, `−u/2` are stored),
/// so the algebraic relations between the five functions hold exactly.
pub fn tw_eval(table: &PIITable, kind: TwKind, x: f64) -> Result<f64> {
    Ok(ln_combination(kind, table.ln_f(x)?, table.ln_e(x)?)?.exp())
}

/// A distribution function of the family, bound to its tables.
#[derive(Debug, Clone)]
pub struct TwFamily {
    kind: TwKind,
    pii: Arc<PIITable>,
    m: Option<Arc<MTable>>,
}

impl TwFamily {
    /// Builds the evaluator, solving for the m-table when `kind` needs one.
    pub fn new(kind: TwKind, pii: Arc<PIITable>) -> Result<Self> {
        let m = match kind.w() {
            Some(w) => Some(Arc::new(solve_m(w, &pii)?)),
            None => None,
        };
        Ok(TwFamily { kind, pii, m })
    }

    /// Builds the evaluator from an existing m-table (for `F^□` and `F^⊠`
    /// at the same `w`).
    pub fn with_m(kind: TwKind, pii: Arc<PIITable>, m: Arc<MTable>) -> Result<Self> {
        if kind.w() != Some(m.w) {
            return Err(Error::param(format!("{kind} does not match an m-table for w = {}", m.w)));
        }
        Ok(TwFamily { kind, pii, m: Some(m) })
    }

    pub fn kind(&self) -> TwKind {
        self.kind
    }

    pub fn pii(&self) -> &PIITable {
        &self.pii
    }

    pub fn m_table(&self) -> Option<&MTable> {
        self.m.as_deref()
    }

    fn ln_node(&self, i: usize) -> f64 {
        let p = &self.pii;
        match (self.kind, &self.m) {
            (TwKind::FBox(_), Some(m)) => ln_f_box_node(p, m, i),
            (TwKind::FBoxtimes(_), Some(m)) => ln_f_boxtimes_node(p, m, i),
            (kind, _) => ln_combination(kind, 0.5 * p.iv[i], 0.5 * p.iu[i]).unwrap_or(f64::NAN),
        }
    }

    /// Value at `x` inside the grid.
    pub fn eval(&self, x: f64) -> Result<f64> {
        match self.kind {
            TwKind::FBox(_) | TwKind::FBoxtimes(_) => interp_log(&self.pii, x, |i| self.ln_node(i)),
            kind => tw_eval(&self.pii, kind, x),
        }
    }

    /// Distribution function on the whole line: the value at the nearest grid
    /// end outside the grid (the neglected mass is below `10^{-6}` for the
    /// Tracy–Widom laws on the default grid).
    pub fn cdf(&self, x: f64) -> f64 {
        let p = &self.pii;
        let x = x.clamp(p.x_min(), p.x_max());
        self.eval(x).unwrap_or(f64::NAN)
    }

    /// Values at the grid nodes.
    pub fn grid_values(&self) -> Vec<f64> {
        (0..self.pii.len()).map(|i| self.ln_node(i).exp()).collect()
    }
}

/// Mean and variance of a distribution function from its grid values, by
/// integration by parts, `E X = bF(b) − aF(a) − ∫F`,
/// `E X² = b²F(b) − a²F(a) − 2∫xF`, with Simpson's rule. The mass outside
/// the grid is neglected (below `10^{-6}` on each side for the default grid
/// and the Tracy–Widom laws).
pub fn tw_moments(family: &TwFamily) -> (f64, f64) {
    let grid = &family.pii().grid;
    let f = family.grid_values();
    let xf: Vec<f64> = grid.iter().zip(&f).map(|(x, v)| x * v).collect();
    let (a, b) = (grid[0], *grid.last().unwrap());
    let (fa, fb) = (f[0], *f.last().unwrap());
    let mean = b * fb - a * fa - simpson(grid, &f);
    let second = b * b * fb - a * a * fa - 2.0 * simpson(grid, &xf);
    (mean, second - mean * mean)
}

/// Composite Simpson's rule on a uniform grid (trapezoid on a final odd
/// interval).
fn simpson(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() - 1;
    let even = n - n % 2;
    let mut s = 0.0;
    for i in (0..even).step_by(2) {
        let h = (x[i + 2] - x[i]) / 2.0;
        s += h / 3.0 * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
    }
    if even < n {
        s += 0.5 * (x[n] - x[n - 1]) * (y[n] + y[n - 1]);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::painleve::pii::shared_table;

    fn family(kind: TwKind) -> TwFamily {
        TwFamily::new(kind, Arc::new(shared_table().clone())).unwrap()
    }

    #[test]
    fn definition_identities() {
        let t = shared_table();
        for i in 0..=400 {
            let x = -9.9 + 0.0447 * i as f64;
            let f1 = tw_eval(t, TwKind::F1, x).unwrap();
            let f2 = tw_eval(t, TwKind::F2, x).unwrap();
            let f4 = tw_eval(t, TwKind::F4, x).unwrap();
            let f = tw_eval(t, TwKind::F, x).unwrap();
            let e = tw_eval(t, TwKind::E, x).unwrap();
            assert!((f1 * f1 / (f2 * (2.0 * t.ln_e(x).unwrap()).exp()) - 1.0).abs() < 1e-10);
            assert!((f2 / (f * f) - 1.0).abs() < 1e-12);
            assert!((f4 / (f * (e + 1.0 / e) / 2.0) - 1.0).abs() < 1e-12);
            assert!(f4 >= f1, "x = {x}");
        }
    }

    #[test]
    fn limits_and_monotonicity() {
        for kind in [TwKind::F1, TwKind::F2, TwKind::F4] {
            let f = family(kind);
            let v = f.grid_values();
            assert!(v[0] < 1e-6, "{kind}");
            assert!((1.0 - v[v.len() - 1]).abs() < 1e-6, "{kind}");
            assert!(v.iter().all(|&y| (0.0..=1.0).contains(&y)));
            assert!(v.windows(2).all(|p| p[1] >= p[0] - 1e-12), "{kind}");
        }
        assert!((tw_eval(shared_table(), TwKind::F2, 8.0).unwrap() - 1.0).abs() < 1e-6);
        assert!(tw_eval(shared_table(), TwKind::F2, 8.5).is_err());
        assert!(tw_eval(shared_table(), TwKind::FBox(1.0), 0.0).is_err());
    }

    #[test]
    fn moments_match_literature() {
        // GUE and GOE largest-eigenvalue laws: mean −1.7711, variance 0.8132;
        // mean −1.2065, variance 1.6078
        let (m2, v2) = tw_moments(&family(TwKind::F2));
        assert!((v2 - 0.8132).abs() < 2e-3 && (m2 + 1.7711).abs() < 1e-3);
        let (m1, v1) = tw_moments(&family(TwKind::F1));
        assert!((m1 + 1.2065).abs() < 1e-3 && (v1 - 1.6078).abs() < 1e-3);
        // F₄ here is the GSE law in the variable x/√2: mean −2.30688·√2,
        // variance 0.51772·2
        let (m4, v4) = tw_moments(&family(TwKind::F4));
        assert!((m4 + 2.30688 * 2f64.sqrt()).abs() < 1e-3 && (v4 - 2.0 * 0.51772).abs() < 1e-3);
        assert!(m4 < m1 && m1 < m2 + 1.0);
    }

    #[test]
    fn interpolating_laws_at_zero() {
        let t = shared_table();
        let fb = family(TwKind::FBox(0.0));
        let fbt = family(TwKind::FBoxtimes(0.0));
        for i in 0..=1000 {
            let x = -6.0 + 0.01 * i as f64;
            let f1 = tw_eval(t, TwKind::F1, x).unwrap();
            assert!((fb.eval(x).unwrap() - f1).abs() < 1e-6);
            assert!((fbt.eval(x).unwrap() - f1 * f1).abs() < 1e-6);
        }
        let (ma, va) = tw_moments(&fb);
        let (mb, vb) = tw_moments(&family(TwKind::F1));
        assert!((ma - mb).abs() < 1e-9 && (va - vb).abs() < 1e-9);
    }
}
