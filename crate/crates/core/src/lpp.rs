//! The five symmetrized geometric last-passage percolation models and the
//! scalings of their point-to-point values.
//!
//! The weight `w(i, j)` of a cell is drawn from `g(p)`, the geometric law
//! `P(k) = (1 − p)p^k` on `k ∈ {0, 1, 2, …}`, with `p = q` off the special
//! lines and `p = α√q` or `β√q` on them (`g(0)` is the point mass at 0).
//! Cells are never stored: the weight of `(i, j)` is a deterministic
//! function of the sample seed and of the canonical representative of the
//! orbit of `(i, j)` under the model's symmetry group, so mirrored cells
//! carry bit-equal weights and `G` is computed row by row in `O(N)` memory.
//!
//! | model | cells                         | path                    | symmetry                                  | special lines                    |
//! |-------|-------------------------------|-------------------------|-------------------------------------------|----------------------------------|
//! | `□`   | `[1, N]²`                     | `(1,1) ↗ (N,N)`         | none                                      | none                             |
//! | `○`   | `[1, N]²`                     | `(1,1) ↗ (N,N)`         | `(i,j) ~ (j,i)`                           | `i = j`: `α√q`                   |
//! | `◇`   | `[1, N] × [−N, −1]`           | `(1,−N) ↗ (N,−1)`       | `(i,−j) ~ (j,−i)`                         | `i = −j`: `β√q`                  |
//! | `⊡`   | `[−N, N]²`, zero axes         | `(−N,−N) ↗ (N,N)`       | `(i,j) ~ (−i,−j)`                         | none                             |
//! | `⊠`   | `[−N, N]²`, zero axes         | `(−N,−N) ↗ (N,N)`       | `(i,j) ~ (j,i) ~ (−i,−j) ~ (−j,−i)`       | `i = j`: `α√q`; `i = −j`: `β√q`  |

use rand::Rng;

use crate::combinatorics::SymmetryType;
use crate::error::{Error, Result};
use crate::seed::{mix64, split, unit_open0};

/// Full parameterization of one last-passage model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LppSpec {
    pub model: SymmetryType,
    /// Side length `N`.
    pub n: usize,
    pub q: f64,
    /// Diagonal parameter (`○`, `⊠`).
    pub alpha: f64,
    /// Anti-diagonal parameter (`◇`, `⊠`).
    pub beta: f64,
}

impl LppSpec {
    /// A validated spec.
    pub fn new(model: SymmetryType, n: usize, q: f64, alpha: f64, beta: f64) -> Result<Self> {
        let spec = LppSpec { model, n, q, alpha, beta };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.q > 0.0 && self.q < 1.0) {
            return Err(Error::param(format!("q must lie in (0, 1), got {}", self.q)));
        }
        let rq = self.q.sqrt();
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta)] {
            if !(v >= 0.0 && v * rq < 1.0) {
                return Err(Error::param(format!("{name} must satisfy 0 ≤ {name} < 1/√q, got {v}")));
            }
        }
        if self.n == 0 {
            return Err(Error::param("N must be positive"));
        }
        if self.n > 1 << 20 {
            return Err(Error::Size(format!("N = {} exceeds 2^20", self.n)));
        }
        Ok(())
    }

    /// Row and column index ranges `[lo, hi]` of the model's rectangle.
    pub fn index_ranges(&self) -> ((i64, i64), (i64, i64)) {
        let n = self.n as i64;
        match self.model {
            SymmetryType::Plain | SymmetryType::Invol => ((1, n), (1, n)),
            SymmetryType::AntiInvol => ((1, n), (-n, -1)),
            SymmetryType::Signed | SymmetryType::SignedInvol => ((-n, n), (-n, n)),
        }
    }

    /// Canonical representative of the orbit of `(i, j)` and the parameter
    /// of its geometric law (`None` on the zero axes of `⊡`, `⊠`).
    fn cell(&self, i: i64, j: i64) -> Option<((i64, i64), f64)> {
        let q = self.q;
        let rq = q.sqrt();
        match self.model {
            SymmetryType::Plain => Some(((i, j), q)),
            SymmetryType::Invol => {
                let p = if i == j { self.alpha * rq } else { q };
                Some(((i.min(j), i.max(j)), p))
            }
            SymmetryType::AntiInvol => {
                let p = if i == -j { self.beta * rq } else { q };
                Some(((i, j).min((-j, -i)), p))
            }
            SymmetryType::Signed => {
                if i == 0 || j == 0 {
                    return None;
                }
                Some(((i, j).min((-i, -j)), q))
            }
            SymmetryType::SignedInvol => {
                if i == 0 || j == 0 {
                    return None;
                }
                let p = if i == j {
                    self.alpha * rq
                } else if i == -j {
                    self.beta * rq
                } else {
                    q
                };
                Some(([(i, j), (j, i), (-i, -j), (-j, -i)].into_iter().min().unwrap(), p))
            }
        }
    }

    /// The weight `w(i, j)` of the field drawn from `seed`. Cells outside the
    /// model's rectangle are a parameter error.
    pub fn weight(&self, seed: u64, i: i64, j: i64) -> Result<u64> {
        let ((r0, r1), (c0, c1)) = self.index_ranges();
        if !(r0..=r1).contains(&i) || !(c0..=c1).contains(&j) {
            return Err(Error::param(format!("cell ({i}, {j}) is outside the {} rectangle", self.model)));
        }
        Ok(self.weight_unchecked(seed, i, j))
    }

    #[inline]
    fn weight_unchecked(&self, seed: u64, i: i64, j: i64) -> u64 {
        match self.cell(i, j) {
            None => 0,
            Some(((a, b), p)) => {
                let key = ((a as u64) << 32) ^ (b as u32 as u64);
                geometric(p, unit_open0(mix64(split(seed, key))))
            }
        }
    }

    /// The whole field drawn from `seed`, rows in increasing order of the
    /// first index (for tests and small-`N` inspection).
    pub fn weight_field(&self, seed: u64) -> Vec<Vec<u64>> {
        let ((r0, r1), (c0, c1)) = self.index_ranges();
        (r0..=r1).map(|i| (c0..=c1).map(|j| self.weight_unchecked(seed, i, j)).collect()).collect()
    }

    /// `G(N)` of the field drawn from `seed`, by the streaming row recursion
    /// `G(i,j) = w(i,j) + max(G(i−1,j), G(i,j−1))`.
    pub fn g_from_seed(&self, seed: u64) -> u64 {
        let ((r0, r1), (c0, c1)) = self.index_ranges();
        let mut row = vec![0u64; (c1 - c0 + 1) as usize];
        for i in r0..=r1 {
            let mut left = 0u64;
            for (k, j) in (c0..=c1).enumerate() {
                let g = self.weight_unchecked(seed, i, j) + left.max(row[k]);
                row[k] = g;
                left = g;
            }
        }
        row[row.len() - 1]
    }
}

/// `g(p)` by inversion: `⌊ln U / ln p⌋` for `U ∈ (0, 1]`.
#[inline]
fn geometric(p: f64, u: f64) -> u64 {
    if p <= 0.0 {
        return 0;
    }
    (u.ln() / p.ln()).floor() as u64
}

/// Last-passage value of an explicit field (rows top to bottom are
/// increasing first index), path from the first to the last cell.
pub fn last_passage(field: &[Vec<u64>]) -> Result<u64> {
    let width = field.first().map_or(0, Vec::len);
    if width == 0 || field.iter().any(|r| r.len() != width) {
        return Err(Error::param("the field must be a nonempty rectangle"));
    }
    let mut row = vec![0u64; width];
    for r in field {
        let mut left = 0u64;
        for (k, &w) in r.iter().enumerate() {
            let g = w + left.max(row[k]);
            row[k] = g;
            left = g;
        }
    }
    Ok(row[width - 1])
}

/// One draw of `G(N)` for the model; the field seed is taken from `rng`.
pub fn sample_g<R: Rng + ?Sized>(spec: &LppSpec, rng: &mut R) -> Result<u64> {
    spec.validate()?;
    Ok(spec.g_from_seed(rng.next_u64()))
}

/// `η(q) = 2√q/(1 − √q)`.
pub fn eta(q: f64) -> f64 {
    let r = q.sqrt();
    2.0 * r / (1.0 - r)
}

/// `ρ(q) = q^{1/6}(1 + √q)^{1/3}/(1 − √q)`.
pub fn rho(q: f64) -> f64 {
    let r = q.sqrt();
    q.powf(1.0 / 6.0) * (1.0 + r).cbrt() / (1.0 - r)
}

/// Center and scale of `G(N)`: `(ηN, ρN^{1/3})` for `□, ○, ◇` and
/// `(η·2N, 2^{2/3}ρ(2N)^{1/3})` for `⊡, ⊠`.
pub fn lpp_scaling(model: SymmetryType, n: usize, q: f64) -> Result<(f64, f64)> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::param(format!("q must lie in (0, 1), got {q}")));
    }
    let nf = n as f64;
    Ok(if model.is_signed() {
        (eta(q) * 2.0 * nf, 2f64.powf(2.0 / 3.0) * rho(q) * (2.0 * nf).cbrt())
    } else {
        (eta(q) * nf, rho(q) * nf.cbrt())
    })
}

/// The diagonal parameter of the transition regime,
/// `α = 1 − 2w/(ρ(q)N^{1/3})` for `○` and `α = 1 − 2w/(ρ(q)(2N)^{1/3})` for `⊠`.
pub fn transitional_alpha(w: f64, model: SymmetryType, n: usize, q: f64) -> Result<f64> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::param(format!("q must lie in (0, 1), got {q}")));
    }
    let size = match model {
        SymmetryType::Invol => n as f64,
        SymmetryType::SignedInvol => 2.0 * n as f64,
        other => return Err(Error::param(format!("no transition regime for the {other} model"))),
    };
    let alpha = 1.0 - 2.0 * w / (rho(q) * size.cbrt());
    if !(alpha >= 0.0 && alpha * q.sqrt() < 1.0) {
        return Err(Error::param(format!("w = {w} gives α = {alpha}, outside [0, 1/√q)")));
    }
    Ok(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::stream;
    use rand::RngExt;

    const ALL: [SymmetryType; 5] = SymmetryType::ALL;

    fn spec(model: SymmetryType, n: usize) -> LppSpec {
        LppSpec::new(model, n, 0.4, 0.7, 1.2).unwrap()
    }

    /// Maximum over all up/right paths, by explicit enumeration of the
    /// step sequences.
    fn brute_force(field: &[Vec<u64>]) -> u64 {
        let (h, w) = (field.len(), field[0].len());
        let steps = h + w - 2;
        let mut best = 0;
        for mask in 0u64..(1 << steps) {
            if mask.count_ones() as usize != h - 1 {
                continue;
            }
            let (mut r, mut c) = (0, 0);
            let mut s = field[0][0];
            for k in 0..steps {
                if mask >> k & 1 == 1 {
                    r += 1;
                } else {
                    c += 1;
                }
                s += field[r][c];
            }
            best = best.max(s);
        }
        best
    }

    #[test]
    fn worked_examples() {
        assert_eq!(last_passage(&[vec![1, 0], vec![2, 3]]).unwrap(), 6);
        assert_eq!(last_passage(&vec![vec![0; 5]; 5]).unwrap(), 0);
        assert!(last_passage(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn row_recursion_matches_all_paths() {
        for model in ALL {
            for n in 1..=6 {
                if model.is_signed() && n > 3 {
                    continue; // 2N + 1 = 7 cells a side already gives C(12, 6) paths
                }
                let s = spec(model, n);
                for seed in 0..20 {
                    let field = s.weight_field(seed);
                    let g = s.g_from_seed(seed);
                    assert_eq!(g, brute_force(&field), "{model} N = {n} seed {seed}");
                    assert_eq!(g, last_passage(&field).unwrap());
                }
            }
        }
    }

    #[test]
    fn fields_are_exactly_symmetric() {
        let n = 7i64;
        for model in ALL {
            let s = spec(model, n as usize);
            let ((r0, r1), (c0, c1)) = s.index_ranges();
            for seed in [1u64, 99] {
                let w = |i, j| s.weight(seed, i, j).unwrap();
                for i in r0..=r1 {
                    for j in c0..=c1 {
                        let x = w(i, j);
                        match model {
                            SymmetryType::Plain => {}
                            SymmetryType::Invol => assert_eq!(x, w(j, i)),
                            SymmetryType::AntiInvol => assert_eq!(x, w(-j, -i)),
                            SymmetryType::Signed => {
                                assert_eq!(x, w(-i, -j));
                                if i == 0 || j == 0 {
                                    assert_eq!(x, 0);
                                }
                            }
                            SymmetryType::SignedInvol => {
                                assert_eq!(x, w(-i, -j));
                                assert_eq!(x, w(j, i));
                                assert_eq!(x, w(-j, -i));
                                if i == 0 || j == 0 {
                                    assert_eq!(x, 0);
                                }
                            }
                        }
                    }
                }
            }
            assert!(s.weight(0, r1 + 1, c0).is_err());
        }
    }

    #[test]
    fn zero_diagonal_at_alpha_zero() {
        let s = LppSpec::new(SymmetryType::Invol, 30, 0.5, 0.0, 0.0).unwrap();
        let t = LppSpec::new(SymmetryType::SignedInvol, 30, 0.5, 0.0, 0.0).unwrap();
        for seed in 0..10 {
            for i in 1..=30 {
                assert_eq!(s.weight(seed, i, i).unwrap(), 0);
                assert_eq!(t.weight(seed, i, i).unwrap(), 0);
                assert_eq!(t.weight(seed, -i, i).unwrap(), 0);
            }
        }
        let d = LppSpec::new(SymmetryType::AntiInvol, 30, 0.5, 0.0, 0.0).unwrap();
        assert!((1..=30).all(|i| d.weight(3, i, -i).unwrap() == 0));
    }

    #[test]
    fn increasing_a_weight_never_decreases_g() {
        let mut rng = stream(11, 0);
        for model in ALL {
            let s = spec(model, 5);
            for seed in 0..10 {
                let mut field = s.weight_field(seed);
                let g = last_passage(&field).unwrap();
                for _ in 0..10 {
                    let r = rng.random_range(0..field.len());
                    let c = rng.random_range(0..field[0].len());
                    field[r][c] += rng.random_range(1..4);
                    assert!(last_passage(&field).unwrap() >= g);
                }
            }
        }
    }

    #[test]
    fn single_cell_mean() {
        // □, N = 1: G = w(1,1) with mean q/(1 − q) = 1/3 at q = 1/4 and
        // variance q/(1 − q)² = 4/9
        let s = LppSpec::new(SymmetryType::Plain, 1, 0.25, 0.0, 0.0).unwrap();
        let k = 200_000;
        let mut rng = stream(2024, 0);
        let draws: Vec<f64> = (0..k).map(|_| sample_g(&s, &mut rng).unwrap() as f64).collect();
        let mean = draws.iter().sum::<f64>() / k as f64;
        let se = (4.0f64 / 9.0 / k as f64).sqrt();
        assert!((mean - 1.0 / 3.0).abs() < 5.0 * se, "mean {mean}");
        let p0 = draws.iter().filter(|&&x| x == 0.0).count() as f64 / k as f64;
        assert!((p0 - 0.75).abs() < 0.005);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(LppSpec::new(SymmetryType::Plain, 4, 1.0, 0.0, 0.0).is_err());
        assert!(LppSpec::new(SymmetryType::Plain, 4, 0.0, 0.0, 0.0).is_err());
        assert!(LppSpec::new(SymmetryType::Invol, 4, 0.25, 2.0, 0.0).is_err());
        assert!(LppSpec::new(SymmetryType::AntiInvol, 4, 0.25, 0.0, -1.0).is_err());
        assert!(LppSpec::new(SymmetryType::Plain, 0, 0.25, 0.0, 0.0).is_err());
        assert!(LppSpec::new(SymmetryType::Invol, 4, 0.25, 1.99, 0.0).is_ok());
    }

    #[test]
    fn scaling_constants() {
        assert!((eta(0.25) - 2.0).abs() < 1e-15);
        assert!((rho(0.25) - 1.8171).abs() < 1e-4);
        let (c, s) = lpp_scaling(SymmetryType::Signed, 10, 0.25).unwrap();
        assert!((c - 40.0).abs() < 1e-12);
        assert!((s - 2f64.powf(2.0 / 3.0) * rho(0.25) * 20f64.cbrt()).abs() < 1e-12);
        let (c, s) = lpp_scaling(SymmetryType::Plain, 64, 0.25).unwrap();
        assert!((c - 128.0).abs() < 1e-12 && (s - 4.0 * rho(0.25)).abs() < 1e-12);
        assert!(lpp_scaling(SymmetryType::Plain, 64, 1.5).is_err());
    }

    #[test]
    fn transitional_alpha_values() {
        assert_eq!(transitional_alpha(0.0, SymmetryType::Invol, 512, 0.25).unwrap(), 1.0);
        assert!(transitional_alpha(0.5, SymmetryType::SignedInvol, 512, 0.25).unwrap() < 1.0);
        let a = transitional_alpha(1.0, SymmetryType::Invol, 512, 0.25).unwrap();
        assert!((a - 0.8624).abs() < 1e-4, "{a}");
        let b = transitional_alpha(1.0, SymmetryType::SignedInvol, 256, 0.25).unwrap();
        assert_eq!(a, b);
        assert!(transitional_alpha(100.0, SymmetryType::Invol, 8, 0.25).is_err());
        assert!(transitional_alpha(1.0, SymmetryType::Plain, 8, 0.25).is_err());
    }
}
