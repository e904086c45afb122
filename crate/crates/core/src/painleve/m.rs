//! The matrix `m(−iw; x)` solving `m' = w[m, σ₃] + u σ₁ m`, and the
//! interpolating laws `F^□(x; w)` and `F^⊠(x; w)` built from it.
//!
//! Componentwise the system splits into two independent columns,
//! `(m₁₁, m₂₁)' = [[0, u], [u, 2w]] (m₁₁, m₂₁)` and
//! `(m₁₂, m₂₂)' = [[−2w, u], [u, 0]] (m₁₂, m₂₂)`, and `det m` is conserved.
//!
//! For `w > 0` the first column is `(1, 0)` at `+∞` and is the dominant
//! solution when integrating downward, so it is shot from the right end of
//! the grid. The second column is the solution that is recessive at `−∞`;
//! its asymptotic form at `+∞` carries an error multiplied by
//! `e^{(8/3)w³ − 2xw}`, which is useless for large `w`. It is therefore
//! integrated upward from the left end (where it is dominant) starting on the
//! recessive eigenvector, and its constant is fixed by `det m = 1`.
//! Negative `w` follows from `m(−iw) = σ₁ m(i w) σ₁`.

use crate::error::{Error, Result};

use super::airy::airy_scaled_asymptotic;
use super::dd::{d, diff, horner, horner_deriv, tail_size, to_f64, DD, ZERO};
use super::pii::{u_series, PIITable};

/// Supported range of `w`.
pub const W_RANGE: (f64, f64) = (-2.5, 5.0);

/// `m(−iw; x)` on the grid of a [`PIITable`].
///
/// Entries are stored as mantissas with one logarithmic scale per column:
/// `m_{jk}(x_i) = mantissa_{jk}[i] · e^{logscale[k−1][i]}`.
#[derive(Debug, Clone)]
pub struct MTable {
    pub w: f64,
    pub grid: Vec<f64>,
    pub m11: Vec<f64>,
    pub m12: Vec<f64>,
    pub m21: Vec<f64>,
    pub m22: Vec<f64>,
    pub logscale: [Vec<f64>; 2],
}

impl MTable {
    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    /// The unscaled entry `m_{jk}(x_i)` (may overflow to ±∞ for large `w`).
    pub fn entry(&self, j: usize, k: usize, i: usize) -> f64 {
        let mant = match (j, k) {
            (1, 1) => self.m11[i],
            (1, 2) => self.m12[i],
            (2, 1) => self.m21[i],
            (2, 2) => self.m22[i],
            _ => panic!("matrix entry ({j}, {k}) out of range"),
        };
        mant * self.logscale[k - 1][i].exp()
    }

    /// `det m(x_i)`, formed from the mantissas so that it stays finite.
    pub fn det(&self, i: usize) -> f64 {
        (self.m11[i] * self.m22[i] - self.m12[i] * self.m21[i]) * (self.logscale[0][i] + self.logscale[1][i]).exp()
    }
}

/// One column `(p, q)` with `p' = αp + uq`, `q' = up + γq`, advanced by
/// Taylor series alongside the Painlevé function it is driven by.
#[derive(Debug, Clone, Copy)]
struct ColState {
    p: DD,
    q: DD,
    u: DD,
    du: DD,
}

const ORDER: usize = 24;
const TOL: f64 = 1e-28;

fn advance(s: ColState, x: DD, t: DD, alpha: f64, gamma: f64, depth: u32) -> Result<ColState> {
    let (a, _) = u_series(x, s.u, s.du, ORDER);
    let mut p = vec![ZERO; ORDER + 1];
    let mut q = vec![ZERO; ORDER + 1];
    p[0] = s.p;
    q[0] = s.q;
    for k in 0..ORDER {
        let mut up = ZERO;
        let mut uq = ZERO;
        for j in 0..=k {
            up += a[j] * p[k - j];
            uq += a[j] * q[k - j];
        }
        p[k + 1] = (p[k] * alpha + uq) / (k + 1) as f64;
        q[k + 1] = (up + q[k] * gamma) / (k + 1) as f64;
    }
    let th = t.hi();
    let size = s.p.hi().abs() + s.q.hi().abs();
    let err = tail_size(&p, th) + tail_size(&q, th) + tail_size(&a, th) * size;
    if err > TOL * size {
        if depth > 30 {
            return Err(Error::Instability { x: to_f64(x), reason: "Taylor step size underflow in the m-equation".into() });
        }
        let half = t / 2.0;
        let mid = advance(s, x, half, alpha, gamma, depth + 1)?;
        return advance(mid, x + half, half, alpha, gamma, depth + 1);
    }
    Ok(ColState { p: horner(&p, t), q: horner(&q, t), u: horner(&a, t), du: horner_deriv(&a, t) })
}

/// Integrates one column node by node from `start` to `end` (either
/// direction), renormalizing after every step. Returns mantissas and log
/// scales indexed like the grid (entries outside the traversed range are 0).
fn integrate_column(
    pii: &PIITable,
    alpha: f64,
    gamma: f64,
    start: usize,
    end: usize,
    init: (f64, f64),
) -> Result<(Vec<f64>, Vec<f64>, Vec<f64>)> {
    let n = pii.len();
    let (mut ps, mut qs, mut logs) = (vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    let norm = init.0.abs().max(init.1.abs());
    let mut state = ColState { p: d(init.0 / norm), q: d(init.1 / norm), u: pii.u_dd[start], du: pii.du_dd[start] };
    let mut log = norm.ln();
    let mut i = start;
    ps[i] = init.0 / norm;
    qs[i] = init.1 / norm;
    logs[i] = log;
    while i != end {
        let j = if end > start { i + 1 } else { i - 1 };
        let next = advance(state, d(pii.grid[i]), diff(pii.grid[j], pii.grid[i]), alpha, gamma, 0)?;
        let scale = next.p.hi().abs().max(next.q.hi().abs());
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::Instability { x: pii.grid[j], reason: "m-column lost its scale".into() });
        }
        state = ColState { p: next.p / scale, q: next.q / scale, u: pii.u_dd[j], du: pii.du_dd[j] };
        log += scale.ln();
        ps[j] = to_f64(state.p);
        qs[j] = to_f64(state.q);
        logs[j] = log;
        i = j;
    }
    Ok((ps, qs, logs))
}

/// First-order value of `m₂₁(x)` for `w > 0` at large `x`:
/// `∫_x^∞ e^{−2w(s−x)} Ai(s) ds`, by Simpson's rule on the scaled Airy
/// function (valid for `x ≥ 7`).
fn born_m21(x: f64, w: f64) -> f64 {
    let zeta = |t: f64| 2.0 / 3.0 * t.powf(1.5);
    let z0 = zeta(x);
    let g = |s: f64| airy_scaled_asymptotic(s).0 * (-2.0 * w * (s - x) - zeta(s) + z0).exp();
    let n = 8000;
    let h = 16.0 / n as f64;
    let mut sum = g(x) + g(x + 16.0);
    for i in 1..n {
        sum += g(x + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    sum * h / 3.0 * (-z0).exp()
}

/// Solves for `m(−iw; x)` on the grid of `pii`.
///
/// `w = 0` uses the closed form
/// `m = [[(E² + E⁻²)/2, −E²], [(E⁻² − E²)/2, E²]]`, `E = e^{½∫_x^∞ u}`.
pub fn solve_m(w: f64, pii: &PIITable) -> Result<MTable> {
    if !(w >= W_RANGE.0 && w <= W_RANGE.1) {
        return Err(Error::domain(format!("w = {w} outside the supported range [{}, {}]", W_RANGE.0, W_RANGE.1)));
    }
    if pii.x_max() < 7.0 {
        return Err(Error::domain("the m-equation needs a Painlevé table reaching x ≥ 7"));
    }
    let n = pii.len();
    if w == 0.0 {
        let e2: Vec<f64> = pii.iu.clone(); // ln E² = ∫_x^∞ u
        return Ok(MTable {
            w,
            grid: pii.grid.clone(),
            m11: e2.iter().map(|&l| 0.5 * ((2.0 * l).exp() + 1.0)).collect(),
            m21: e2.iter().map(|&l| 0.5 * (1.0 - (2.0 * l).exp())).collect(),
            m12: vec![-1.0; n],
            m22: vec![1.0; n],
            logscale: [e2.iter().map(|&l| -l).collect(), e2],
        });
    }
    let a = w.abs();
    // column 1: dominant downward, (1, m₂₁) at the right end
    let (c11, c21, s1) = integrate_column(pii, 0.0, 2.0 * a, n - 1, 0, (1.0, born_m21(pii.x_max(), a)))?;
    // column 2: recessive at −∞, started on the eigenvector of λ₊ = −w + √(w² + u²)
    let u0 = pii.u[0];
    let (c12, c22, mut s2) = integrate_column(pii, -2.0 * a, 0.0, 0, n - 1, (u0, a + (a * a + u0 * u0).sqrt()))?;
    // fix the constant by det m = 1 where the two columns are best separated
    let cond = |i: usize| {
        let det = c11[i] * c22[i] - c12[i] * c21[i];
        (c11[i].hypot(c21[i]) * c12[i].hypot(c22[i])) / det.abs()
    };
    let k = (0..n)
        .filter(|&i| pii.grid[i] >= -6.0 && pii.grid[i] <= 0.0)
        .min_by(|&i, &j| cond(i).total_cmp(&cond(j)))
        .ok_or_else(|| Error::domain("the grid must cover [−6, 0]"))?;
    let det = c11[k] * c22[k] - c12[k] * c21[k];
    let shift = -(det.abs().ln() + s1[k] + s2[k]);
    let sign = det.signum();
    for s in s2.iter_mut() {
        *s += shift;
    }
    let (c12, c22): (Vec<f64>, Vec<f64>) = (c12.iter().map(|v| v * sign).collect(), c22.iter().map(|v| v * sign).collect());
    if s1.iter().chain(&s2).any(|s| !s.is_finite()) {
        return Err(Error::Numerics(format!("scale overflow in the m-equation at w = {w}")));
    }
    Ok(if w > 0.0 {
        MTable { w, grid: pii.grid.clone(), m11: c11, m21: c21, m12: c12, m22: c22, logscale: [s1, s2] }
    } else {
        // m(−iw) = σ₁ m(−i|w|) σ₁: columns swap and each column is flipped
        MTable { w, grid: pii.grid.clone(), m11: c22, m21: c12, m12: c21, m22: c11, logscale: [s2, s1] }
    })
}

fn check_pair(w: f64, pii: &PIITable, m: &MTable) -> Result<()> {
    if m.w != w || m.len() != pii.len() {
        return Err(Error::param(format!("m-table for w = {} used with w = {w} or a different grid", m.w)));
    }
    Ok(())
}

/// `ln F^□(x_i; w)` at a grid node, or `−∞` where rounding leaves no
/// positive value.
pub(crate) fn ln_f_box_node(pii: &PIITable, m: &MTable, i: usize) -> f64 {
    let (x, w) = (pii.grid[i], m.w);
    let ln_f = 0.5 * pii.iv[i];
    // E⁻¹ ± E without cancellation (E → 1 at the right end, where the
    // difference gets multiplied by e^{(8/3)w³ − 2xw} for w < 0)
    let half = 0.5 * pii.iu[i];
    let (sum, dif) = (2.0 * half.cosh(), -2.0 * half.sinh());
    let (val, scale) = if w >= 0.0 {
        // F [m₂₂(E⁻¹ + E) − m₁₂(E⁻¹ − E)] / 2
        (m.m22[i] * sum - m.m12[i] * dif, m.logscale[1][i])
    } else {
        // e^{(8/3)w³ − 2xw} F [m₁₁(E⁻¹ − E) − m₂₁(E⁻¹ + E)] / 2
        (m.m11[i] * dif - m.m21[i] * sum, m.logscale[0][i] + 8.0 / 3.0 * w.powi(3) - 2.0 * x * w)
    };
    if val > 0.0 {
        ln_f + scale + (0.5 * val).ln()
    } else {
        f64::NEG_INFINITY
    }
}

/// `ln F^⊠(x_i; w)` at a grid node.
pub(crate) fn ln_f_boxtimes_node(pii: &PIITable, m: &MTable, i: usize) -> f64 {
    let (x, w) = (pii.grid[i], m.w);
    let ln_f2 = pii.iv[i];
    let (val, scale) = if w >= 0.0 {
        (m.m22[i], m.logscale[1][i])
    } else {
        (-m.m21[i], m.logscale[0][i] + 8.0 / 3.0 * w.powi(3) - 2.0 * x * w)
    };
    if val > 0.0 {
        ln_f2 + scale + val.ln()
    } else {
        f64::NEG_INFINITY
    }
}

/// Four-point Lagrange interpolation of node values in log space.
pub(crate) fn interp_log(pii: &PIITable, x: f64, node: impl Fn(usize) -> f64) -> Result<f64> {
    let i = pii.locate(x)?;
    let lo = i.saturating_sub(1).min(pii.len() - 4);
    let xs: Vec<f64> = (lo..lo + 4).map(|k| pii.grid[k]).collect();
    let ys: Vec<f64> = (lo..lo + 4).map(&node).collect();
    if ys.iter().any(|y| !y.is_finite()) {
        // deep in the left tail: linear interpolation of the values
        let h = pii.grid[i + 1] - pii.grid[i];
        let t = (x - pii.grid[i]) / h;
        return Ok((1.0 - t) * node(i).exp() + t * node(i + 1).exp());
    }
    let mut s = 0.0;
    for a in 0..4 {
        let mut l = 1.0;
        for b in 0..4 {
            if a != b {
                l *= (x - xs[b]) / (xs[a] - xs[b]);
            }
        }
        s += l * ys[a];
    }
    Ok(s.exp())
}

/// `F^□(x; w)`; `m` must come from [`solve_m`] with the same `w` and table.
pub fn f_box(x: f64, w: f64, pii: &PIITable, m: &MTable) -> Result<f64> {
    check_pair(w, pii, m)?;
    interp_log(pii, x, |i| ln_f_box_node(pii, m, i))
}

/// `F^⊠(x; w)`; `m` must come from [`solve_m`] with the same `w` and table.
pub fn f_boxtimes(x: f64, w: f64, pii: &PIITable, m: &MTable) -> Result<f64> {
    check_pair(w, pii, m)?;
    interp_log(pii, x, |i| ln_f_boxtimes_node(pii, m, i))
}
