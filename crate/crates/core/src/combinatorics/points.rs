use rand::{Rng, RngExt};

use crate::error::{Error, Result};

use super::lis::lis_len_by;
use super::symmetry::{EnsembleSpec, SymmetryType};

pub type Point = (f64, f64);

/// A finite point set in `[0,1]²` together with the symmetry it was
/// generated under.
#[derive(Debug, Clone, PartialEq)]
pub struct PointConfig {
    pub points: Vec<Point>,
    pub symmetry: SymmetryType,
}

fn reflect_diag((x, y): Point) -> Point {
    (y, x)
}

fn reflect_anti((x, y): Point) -> Point {
    (1.0 - y, 1.0 - x)
}

fn rotate((x, y): Point) -> Point {
    (1.0 - x, 1.0 - y)
}

impl PointConfig {
    /// Whether the point set is mapped onto itself by the symmetry of its tag.
    pub fn is_symmetric(&self) -> bool {
        let maps: &[fn(Point) -> Point] = match self.symmetry {
            SymmetryType::Plain => &[],
            SymmetryType::Invol => &[reflect_diag],
            SymmetryType::AntiInvol => &[reflect_anti],
            SymmetryType::Signed => &[rotate],
            SymmetryType::SignedInvol => &[reflect_diag, reflect_anti],
        };
        let mut sorted = self.points.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        maps.iter().all(|f| {
            let mut img: Vec<Point> = self.points.iter().map(|&p| f(p)).collect();
            img.sort_by(|a, b| a.partial_cmp(b).unwrap());
            img.iter().zip(&sorted).all(|(a, b)| (a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12)
        })
    }

    /// Checks that x- and y-coordinates are pairwise distinct.
    pub fn check_distinct(&self) -> Result<()> {
        if let Some(v) = first_duplicate(self.points.iter().map(|p| p.0)) {
            return Err(Error::Invariant(format!("duplicate x-coordinate {v}")));
        }
        if let Some(v) = first_duplicate(self.points.iter().map(|p| p.1)) {
            return Err(Error::Invariant(format!("duplicate y-coordinate {v}")));
        }
        Ok(())
    }

    /// The permutation read off the configuration: sort by `x`, rank the `y`s.
    pub fn to_permutation(&self) -> Result<super::Permutation> {
        self.check_distinct()?;
        let mut by_x: Vec<usize> = (0..self.points.len()).collect();
        by_x.sort_by(|&a, &b| self.points[a].0.partial_cmp(&self.points[b].0).unwrap());
        let mut by_y: Vec<usize> = (0..self.points.len()).collect();
        by_y.sort_by(|&a, &b| self.points[a].1.partial_cmp(&self.points[b].1).unwrap());
        let mut y_rank = vec![0; self.points.len()];
        for (r, &i) in by_y.iter().enumerate() {
            y_rank[i] = r;
        }
        Ok(super::Permutation::from_zero_based(by_x.iter().map(|&i| y_rank[i]).collect()))
    }
}

fn first_duplicate(values: impl Iterator<Item = f64>) -> Option<f64> {
    let mut v: Vec<f64> = values.collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v.windows(2).find(|w| w[0] == w[1]).map(|w| w[0])
}

/// Length of the longest up/right chain of points (strict in both coordinates).
pub fn lis_length(config: &PointConfig) -> Result<usize> {
    config.check_distinct()?;
    let mut pts = config.points.clone();
    pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let ys: Vec<f64> = pts.into_iter().map(|p| p.1).collect();
    Ok(lis_len_by(&ys, |a, b| a < b))
}

/// Draws a random configuration following the recipe of `spec.symmetry`.
///
/// Generic points are uniform in the square, boundary points uniform on the
/// diagonal `δ` or the anti-diagonal `δᵗ`; every point is completed by its
/// images under the symmetry. Exact coordinate collisions (probability zero
/// up to rounding) are resolved by redrawing the configuration.
pub fn sample_point_config<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> Result<PointConfig> {
    spec.validate()?;
    loop {
        let config = draw_config(spec, rng);
        if config.check_distinct().is_ok() {
            return Ok(config);
        }
    }
}

fn draw_config<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> PointConfig {
    let mut points = Vec::with_capacity(spec.size());
    let uniform = |rng: &mut R| -> Point { (rng.random::<f64>(), rng.random::<f64>()) };
    match spec.symmetry {
        SymmetryType::Plain => {
            for _ in 0..spec.n {
                points.push(uniform(rng));
            }
        }
        SymmetryType::Invol => {
            for _ in 0..spec.n {
                let p = uniform(rng);
                points.extend([p, reflect_diag(p)]);
            }
            for _ in 0..spec.m {
                let t = rng.random::<f64>();
                points.push((t, t));
            }
        }
        SymmetryType::AntiInvol => {
            for _ in 0..spec.n {
                let p = uniform(rng);
                points.extend([p, reflect_anti(p)]);
            }
            for _ in 0..spec.m {
                let t = rng.random::<f64>();
                points.push((t, 1.0 - t));
            }
        }
        SymmetryType::Signed => {
            for _ in 0..spec.n {
                let p = uniform(rng);
                points.extend([p, rotate(p)]);
            }
        }
        SymmetryType::SignedInvol => {
            for _ in 0..spec.n {
                let p = uniform(rng);
                points.extend([p, reflect_diag(p), reflect_anti(p), rotate(p)]);
            }
            for _ in 0..spec.m_plus {
                let t = rng.random::<f64>();
                points.extend([(t, t), (1.0 - t, 1.0 - t)]);
            }
            for _ in 0..spec.m_minus {
                let t = rng.random::<f64>();
                points.extend([(t, 1.0 - t), (1.0 - t, t)]);
            }
        }
    }
    PointConfig { points, symmetry: spec.symmetry }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::Permutation;
    use crate::seed::stream;

    #[test]
    fn lis_of_figure_configuration() {
        let perm = Permutation::new(vec![5, 1, 3, 2, 4]).unwrap();
        let config = PointConfig { points: perm.to_points(), symmetry: SymmetryType::Plain };
        assert_eq!(lis_length(&config).unwrap(), 3);
        assert_eq!(config.to_permutation().unwrap(), perm);
    }

    #[test]
    fn duplicate_coordinates_are_rejected() {
        let config = PointConfig { points: vec![(0.2, 0.3), (0.2, 0.7)], symmetry: SymmetryType::Plain };
        assert!(matches!(lis_length(&config), Err(Error::Invariant(_))));
        let config = PointConfig { points: vec![(0.1, 0.5), (0.2, 0.5)], symmetry: SymmetryType::Plain };
        assert!(lis_length(&config).is_err());
    }

    #[test]
    fn sampling_edge_cases() {
        let mut rng = stream(1, 0);
        let c = sample_point_config(&EnsembleSpec::plain(0), &mut rng).unwrap();
        assert!(c.points.is_empty());

        let c = sample_point_config(&EnsembleSpec::invol(0, 3), &mut rng).unwrap();
        assert_eq!(c.points.len(), 3);
        assert!(c.points.iter().all(|p| p.0 == p.1));
        assert_eq!(lis_length(&c).unwrap(), 3);

        for i in 0..50 {
            let mut rng = stream(2, i);
            let c = sample_point_config(&EnsembleSpec::signed(1), &mut rng).unwrap();
            assert_eq!(c.points.len(), 2);
            let l = lis_length(&c).unwrap();
            assert!(l == 1 || l == 2);
        }

        let bad = EnsembleSpec::raw(SymmetryType::Plain, 2, 1, 0, 0);
        assert!(sample_point_config(&bad, &mut rng).is_err());
    }

    #[test]
    fn configurations_are_symmetric_and_read_off_the_right_ensemble() {
        let specs = [
            EnsembleSpec::plain(6),
            EnsembleSpec::invol(4, 3),
            EnsembleSpec::anti_invol(4, 3),
            EnsembleSpec::signed(5),
            EnsembleSpec::signed_invol(2, 2, 1),
        ];
        for (k, spec) in specs.iter().enumerate() {
            for i in 0..20 {
                let mut rng = stream(k as u64, i);
                let c = sample_point_config(spec, &mut rng).unwrap();
                assert_eq!(c.points.len(), spec.size());
                assert!(c.is_symmetric(), "{spec:?}");
                let p = c.to_permutation().unwrap();
                assert_eq!(p.lis(), lis_length(&c).unwrap());
                match spec.symmetry {
                    SymmetryType::Plain => {}
                    SymmetryType::Invol => {
                        assert!(p.is_involution());
                        assert_eq!(p.fp_count(), spec.m);
                    }
                    SymmetryType::AntiInvol => {
                        assert!(p.is_anti_involution());
                        assert_eq!(p.ifp_count(), spec.m);
                    }
                    SymmetryType::Signed => assert!(p.commutes_with_reversal()),
                    SymmetryType::SignedInvol => {
                        assert!(p.is_involution() && p.commutes_with_reversal());
                        assert_eq!(p.fp_count(), 2 * spec.m_plus);
                        assert_eq!(p.ifp_count(), 2 * spec.m_minus);
                    }
                }
            }
        }
    }
}
