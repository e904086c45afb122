use crate::error::{Error, Result};

use super::dd::{d, dd, div_dd, exp_dd, horner, horner_deriv, tail_size, to_f64, DD, PI, ZERO};

// Ai(0), Ai'(0), Bi(0), Bi'(0) as unevaluated sums hi + lo.
const AI0: (f64, f64) = (0.3550280538878172, 2.05233632436212e-17);
const DAI0: (f64, f64) = (-0.2588194037928068, 2.522243111610832e-17);
const BI0: (f64, f64) = (0.6149266274460007, 5.0899207794891416e-17);
const DBI0: (f64, f64) = (0.4482883573538264, -2.5363237774417305e-17);

/// Value, derivative and `∫₀^x` of the solution of `y'' = xy` with `y(0) = a0`,
/// `y'(0) = a1`, from its Maclaurin series
/// `c_{n+3} = c_n / ((n+2)(n+3))`.
fn maclaurin(a0: DD, a1: DD, x: DD) -> (DD, DD, DD) {
    let mut c = [a0, a1, ZERO];
    let (mut y, mut dy, mut iy) = (ZERO, ZERO, ZERO);
    let (mut xn, mut xprev) = (d(1.0), ZERO); // x^n, x^{n−1}
    let (mut scale, mut recent) = (0.0f64, [0.0f64; 3]);
    for n in 0usize.. {
        let k = n % 3;
        let term = c[k] * xn;
        y += term;
        iy += term * x / (n + 1) as f64;
        if n > 0 {
            dy += c[k] * xprev * n as f64;
        }
        scale = scale.max(term.hi().abs());
        recent[k] = term.hi().abs();
        // the cap only matters far outside |x| ≤ 12, where x^n would overflow
        if n > 10 && recent.iter().all(|&r| r <= 1e-34 * scale) || n > 600 {
            break;
        }
        c[k] /= ((n + 2) * (n + 3)) as f64;
        xprev = xn;
        xn *= x;
    }
    (y, dy, iy)
}

fn checked(x: f64) -> Result<()> {
    if !(x.abs() <= 12.0) {
        return Err(Error::domain(format!("Airy functions are evaluated for |x| ≤ 12, got {x}")));
    }
    Ok(())
}

/// `(Ai(x), Ai'(x), ∫₀^x Ai)` in double-double precision.
///
/// The series suffers cancellation for large positive `x`; the relative
/// accuracy is about `10^{-18}` at `x = 8` and degrades to `10^{-7}` at 12.
pub(crate) fn airy_ai_dd(x: DD) -> (DD, DD, DD) {
    maclaurin(dd(AI0.0, AI0.1), dd(DAI0.0, DAI0.1), x)
}

/// `(Bi(x), Bi'(x))` in double-double precision.
pub(crate) fn airy_bi_dd(x: DD) -> (DD, DD) {
    let (y, dy, _) = maclaurin(dd(BI0.0, BI0.1), dd(DBI0.0, DBI0.1), x);
    (y, dy)
}

/// Point where the large-`x` expansion starts: there its truncation error
/// is below `e^{−2ζ} ≈ 10^{−52}`.
const FAR: f64 = 20.0;

/// `(Ai(x), Ai'(x))` in double-double precision for `x ≥ 5`, free of the
/// cancellation in the Maclaurin series: the asymptotic expansions at
/// `max(x, 20)` give the starting values and `y'' = xy` is integrated
/// downward by Taylor series, the direction in which `Ai` is dominant.
pub(crate) fn airy_ai_large_dd(x: f64) -> (DD, DD) {
    debug_assert!(x >= 5.0);
    let start = x.max(FAR);
    let far = d(start);
    let sx = far.sqrt();
    let zeta = sx * far * 2.0 / 3.0;
    let pre = div_dd(exp_dd(-zeta), dd(PI.0, PI.1).sqrt() * sx.sqrt() * 2.0);
    // Σ (−1)^k u_k ζ^{−k} and Σ (−1)^k v_k ζ^{−k}, v_k = −(6k+1)/(6k−1) u_k
    let (mut su, mut sv, mut term) = (d(1.0), d(1.0), d(1.0));
    for k in 1.. {
        let kf = k as f64;
        term = div_dd(-term * ((6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)) / ((2.0 * kf - 1.0) * 216.0 * kf), zeta);
        su += term;
        sv -= term * (6.0 * kf + 1.0) / (6.0 * kf - 1.0);
        if term.hi().abs() < 1e-36 {
            break;
        }
    }
    let mut y = pre * su;
    let mut dy = -pre * sx * sv;
    // downward Taylor steps, y'' = xy about c: (k+2)(k+1)a_{k+2} = c a_k + a_{k−1}
    const ORDER: usize = 40;
    let n = ((start - x) / 0.125).ceil() as usize;
    if n == 0 {
        return (y, dy);
    }
    let h = (d(x) - far) / n as f64;
    let mut c = far;
    for _ in 0..n {
        let mut a = [ZERO; ORDER + 1];
        a[0] = y;
        a[1] = dy;
        for k in 0..ORDER - 1 {
            let prev = if k > 0 { a[k - 1] } else { ZERO };
            a[k + 2] = (c * a[k] + prev) / ((k + 2) * (k + 1)) as f64;
        }
        debug_assert!(tail_size(&a, h.hi()) < 1e-33 * y.hi().abs());
        y = horner(&a, h);
        dy = horner_deriv(&a, h);
        c += h;
    }
    (y, dy)
}

/// Airy function `Ai(x)` and its derivative for `|x| ≤ 12`.
pub fn airy(x: f64) -> Result<(f64, f64)> {
    checked(x)?;
    let (ai, dai, _) = airy_ai_dd(d(x));
    Ok((to_f64(ai), to_f64(dai)))
}

/// Airy function `Bi(x)` and its derivative for `|x| ≤ 12`.
pub fn airy_bi(x: f64) -> Result<(f64, f64)> {
    checked(x)?;
    let (bi, dbi) = airy_bi_dd(d(x));
    Ok((to_f64(bi), to_f64(dbi)))
}

/// Coefficients `u_k` of the large-argument expansions
/// `Ai(x) ~ e^{−ζ}/(2√π x^{1/4}) Σ (−1)^k u_k ζ^{−k}`,
/// `Bi(x) ~ e^{ζ}/(√π x^{1/4}) Σ u_k ζ^{−k}`, `ζ = (2/3)x^{3/2}`.
fn asymptotic_coeffs() -> [f64; 24] {
    let mut u = [1.0; 24];
    for k in 1..24 {
        let kf = k as f64;
        u[k] = u[k - 1] * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
    }
    u
}

/// `(Ai(x) e^{ζ}, Bi(x) e^{−ζ})` by the asymptotic expansions, for `x ≥ 7`
/// where 24 terms give about 11 correct digits (more for larger `x`).
pub(crate) fn airy_scaled_asymptotic(x: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let pre = 1.0 / (std::f64::consts::PI.sqrt() * x.powf(0.25));
    let (mut sa, mut sb, mut p) = (0.0, 0.0, 1.0);
    for (k, uk) in asymptotic_coeffs().iter().enumerate() {
        sa += if k % 2 == 0 { uk * p } else { -uk * p };
        sb += uk * p;
        p /= zeta;
    }
    (0.5 * pre * sa, pre * sb)
}
