//! Small helpers for truncated power series in double-double arithmetic.

use twofloat::TwoFloat;

pub(crate) type DD = TwoFloat;

pub(crate) const ZERO: DD = TwoFloat::from_f64(0.0);

/// The double-double value `hi + lo` (exact when the parts do not overlap).
#[inline]
pub(crate) fn dd(hi: f64, lo: f64) -> DD {
    TwoFloat::new_add(hi, lo)
}

#[inline]
pub(crate) fn d(x: f64) -> DD {
    TwoFloat::from(x)
}

/// `x − y` rounded to double-double (exact for `f64` operands).
#[inline]
pub(crate) fn diff(x: f64, y: f64) -> DD {
    TwoFloat::new_sub(x, y)
}

#[inline]
pub(crate) fn to_f64(x: DD) -> f64 {
    x.hi() + x.lo()
}

/// `Σ_{j=0}^{k} a_j b_{k−j}`.
#[inline]
pub(crate) fn cauchy(a: &[DD], b: &[DD], k: usize) -> DD {
    let mut s = ZERO;
    for j in 0..=k {
        s += a[j] * b[k - j];
    }
    s
}

/// `Σ c_k t^k`.
pub(crate) fn horner(c: &[DD], t: DD) -> DD {
    c.iter().rev().fold(ZERO, |acc, &ck| acc * t + ck)
}

/// `Σ k c_k t^{k−1}`.
pub(crate) fn horner_deriv(c: &[DD], t: DD) -> DD {
    c.iter().enumerate().skip(1).rev().fold(ZERO, |acc, (k, &ck)| acc * t + ck * k as f64)
}

/// Size of the last two terms `|c_{K−1} t^{K−1}| + |c_K t^K|`, a proxy for
/// the truncation error.
pub(crate) fn tail_size(c: &[DD], t: f64) -> f64 {
    let k = c.len() - 1;
    let t = t.abs();
    c[k - 1].hi().abs() * t.powi(k as i32 - 1) + c[k].hi().abs() * t.powi(k as i32)
}

/// `a / b` to full double-double accuracy by three-term long division (the
/// library's `TwoFloat / TwoFloat` loses the low word).
pub(crate) fn div_dd(a: DD, b: DD) -> DD {
    let q1 = a.hi() / b.hi();
    let r = a - b * q1;
    let q2 = r.hi() / b.hi();
    let r = r - b * q2;
    let q3 = r.hi() / b.hi();
    TwoFloat::new_add(q1, q2) + q3
}

/// `ln 2` and `π` as double-double constants.
#[allow(clippy::approx_constant)] // hi/lo split of ln 2, not an approximation
pub(crate) const LN2: (f64, f64) = (0.6931471805599453, 2.3190468138462996e-17);
#[allow(clippy::approx_constant)]
pub(crate) const PI: (f64, f64) = (3.141592653589793, 1.2246467991473532e-16);

/// `e^x` to full double-double accuracy (the library `exp` is only good to
/// about `10^{-18}`): `e^x = 2^k (e^{r/32})^{32}` with `|r| ≤ ln2/2`.
pub(crate) fn exp_dd(x: DD) -> DD {
    let ln2 = dd(LN2.0, LN2.1);
    let k = (x.hi() / LN2.0).round();
    let r = (x - ln2 * k) / 32.0;
    let mut term = d(1.0);
    let mut sum = d(1.0);
    for n in 1..24 {
        term = term * r / n as f64;
        sum += term;
    }
    for _ in 0..5 {
        sum = sum * sum;
    }
    sum * 2f64.powi(k as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_full_precision() {
        let third = div_dd(d(1.0), d(3.0));
        assert!(to_f64(third * 3.0 - 1.0).abs() < 1e-32);
        let pi = dd(PI.0, PI.1);
        let q = div_dd(pi, d(7.0).sqrt());
        assert!(to_f64(q * d(7.0).sqrt() - pi).abs() < 1e-31);
    }

    #[test]
    fn exp_full_precision() {
        // e and e^{−15.084944665313014}, hi + lo from a 40-digit evaluation
        let e = exp_dd(d(1.0));
        assert_eq!(e.hi(), std::f64::consts::E);
        assert!((e.lo() - 1.4456468917292502e-16).abs() < 1e-29, "{:e}", e.lo() - 1.4456468917292502e-16);
        let z = exp_dd(d(-15.084944665313014));
        let want = dd(2.8099058730385485e-07, -4.792167678737563e-24);
        assert!(to_f64(div_dd(z - want, want)).abs() < 1e-29);
        assert!(to_f64(exp_dd(d(50.0)) * exp_dd(d(-50.0)) - 1.0).abs() < 1e-30);
    }
}
