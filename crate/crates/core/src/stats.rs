//! Scalings, empirical distribution functions, Kolmogorov–Smirnov distances
//! and moments.

use serde::{Deserialize, Serialize};

use crate::combinatorics::{EnsembleSpec, SymmetryType};
use crate::error::{Error, Result};

/// Raw values together with the affine map `x ↦ (x − center)/scale`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledSample {
    pub raw: Vec<f64>,
    pub center: f64,
    pub scale: f64,
    pub scaled: Vec<f64>,
}

impl ScaledSample {
    pub fn new(raw: Vec<f64>, center: f64, scale: f64) -> Result<Self> {
        if !(scale > 0.0 && scale.is_finite() && center.is_finite()) {
            return Err(Error::domain(format!("scale must be positive and finite, got {scale}")));
        }
        let scaled = raw.iter().map(|x| (x - center) / scale).collect();
        Ok(ScaledSample { raw, center, scale, scaled })
    }

    pub fn len(&self) -> usize {
        self.raw.len()
    }

    pub fn is_empty(&self) -> bool {
        self.raw.is_empty()
    }
}

/// Center `2√N` and scale `N^{1/6}` (`□, ○, ◇`) or `2^{2/3}N^{1/6}`
/// (`⊡, ⊠`) of the LIS of an ensemble of size `N`.
pub fn chi_center_scale(symmetry: SymmetryType, size: usize) -> Result<(f64, f64)> {
    if size == 0 {
        return Err(Error::domain("the χ scaling needs N > 0"));
    }
    let n = size as f64;
    let scale = n.powf(1.0 / 6.0) * if symmetry.is_signed() { 2f64.powf(2.0 / 3.0) } else { 1.0 };
    Ok((2.0 * n.sqrt(), scale))
}

/// `χ = (L − 2√N)/N^{1/6}`, with the extra factor `2^{2/3}` in the scale
/// for `⊡` and `⊠`.
pub fn chi_transform(values: &[f64], spec: &EnsembleSpec) -> Result<ScaledSample> {
    let (center, scale) = chi_center_scale(spec.symmetry, spec.size())?;
    ScaledSample::new(values.to_vec(), center, scale)
}

/// Smallest admissible `√(1/α − 1/α³)` in [`gaussian_transform`].
const GAUSSIAN_SCALE_GUARD: f64 = 1e-6;

/// The Gaussian-regime normalization for `α > 1`: center `(α + 1/α)√N`,
/// scale `√(1/α − 1/α³)·N^{1/4}`.
pub fn gaussian_transform(values: &[f64], spec: &EnsembleSpec, alpha: f64) -> Result<ScaledSample> {
    if !(alpha > 1.0 && alpha.is_finite()) {
        return Err(Error::domain(format!("the Gaussian regime needs α > 1, got {alpha}")));
    }
    let factor = (1.0 / alpha - 1.0 / alpha.powi(3)).sqrt();
    if factor < GAUSSIAN_SCALE_GUARD {
        return Err(Error::domain(format!("α = {alpha} is too close to 1 for the Gaussian scale")));
    }
    let n = spec.size() as f64;
    if n == 0.0 {
        return Err(Error::domain("the Gaussian scaling needs N > 0"));
    }
    ScaledSample::new(values.to_vec(), (alpha + 1.0 / alpha) * n.sqrt(), factor * n.powf(0.25))
}

/// Right-continuous empirical distribution function with jump `1/k` at each
/// of the `k` points.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalCdf {
    sorted: Vec<f64>,
}

impl EmpiricalCdf {
    pub fn new(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::param("empirical CDF of an empty sample"));
        }
        if values.iter().any(|x| x.is_nan()) {
            return Err(Error::param("sample contains NaN"));
        }
        let mut sorted = values.to_vec();
        sorted.sort_by(f64::total_cmp);
        Ok(EmpiricalCdf { sorted })
    }

    pub fn len(&self) -> usize {
        self.sorted.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sorted.is_empty()
    }

    /// `F_k(x) = #{i : x_i ≤ x}/k`.
    pub fn eval(&self, x: f64) -> f64 {
        self.sorted.partition_point(|&v| v <= x) as f64 / self.sorted.len() as f64
    }

    /// Distinct values with `(F_k(c⁻), F_k(c))` at each.
    pub fn jumps(&self) -> Vec<(f64, f64, f64)> {
        let k = self.sorted.len() as f64;
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.sorted.len() {
            let c = self.sorted[i];
            let mut j = i;
            while j < self.sorted.len() && self.sorted[j] == c {
                j += 1;
            }
            out.push((c, i as f64 / k, j as f64 / k));
            i = j;
        }
        out
    }
}

/// `sup_x |F_k(x) − F(x)|` for a nondecreasing `F`. On each interval
/// `[c_i, c_{i+1})` where the empirical CDF is constant, the reference is
/// evaluated at `c_i`, at the midpoint and just below `c_{i+1}` (the left
/// limit, up to one ulp), which gives the exact supremum for continuous `F`
/// and for step functions jumping at the sample points.
pub fn ks_distance(sample: &ScaledSample, cdf: impl Fn(f64) -> f64) -> Result<f64> {
    ks_distance_values(&sample.scaled, cdf)
}

/// [`ks_distance`] on plain values.
pub fn ks_distance_values(values: &[f64], cdf: impl Fn(f64) -> f64) -> Result<f64> {
    let ecdf = EmpiricalCdf::new(values)?;
    let jumps = ecdf.jumps();
    let mut d = cdf(jumps[0].0.next_down()).abs();
    for (idx, &(c, _, at)) in jumps.iter().enumerate() {
        d = d.max((cdf(c) - at).abs());
        if let Some(&(next, _, _)) = jumps.get(idx + 1) {
            d = d.max((cdf(0.5 * (c + next)) - at).abs()).max((cdf(next.next_down()) - at).abs());
        }
    }
    Ok(d.min(1.0))
}

/// Unbiased mean and variance and the moment skewness `m₃/m₂^{3/2}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    pub mean: f64,
    pub var: f64,
    pub skew: f64,
}

pub fn sample_moments(values: &[f64]) -> Result<Moments> {
    let k = values.len();
    if k < 2 {
        return Err(Error::param(format!("moments need at least 2 values, got {k}")));
    }
    let kf = k as f64;
    let mean = values.iter().sum::<f64>() / kf;
    let (mut m2, mut m3) = (0.0, 0.0);
    for x in values {
        let d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    let var = m2 / (kf - 1.0);
    let (m2, m3) = (m2 / kf, m3 / kf);
    let skew = if m2 > 0.0 { m3 / m2.powf(1.5) } else { 0.0 };
    Ok(Moments { mean, var, skew })
}

/// The comparison record written by the `compare` command.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub n: usize,
    pub mean: f64,
    pub var: f64,
    pub skew: f64,
    pub ks: f64,
    pub seed: Option<u64>,
}

impl Summary {
    pub fn new(values: &[f64], ks: f64, seed: Option<u64>) -> Result<Self> {
        let m = sample_moments(values)?;
        Ok(Summary { n: values.len(), mean: m.mean, var: m.var, skew: m.skew, ks, seed })
    }
}

/// Formats with 12 significant digits, trimming trailing zeros.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let s = format!("{:.*e}", 11, x);
    let v: f64 = s.parse().unwrap();
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        let mut out = format!("{v:.decimals$}");
        if out.contains('.') {
            out = out.trim_end_matches('0').trim_end_matches('.').to_string();
        }
        out
    } else {
        s
    }
}
