use crate::error::{Error, Result};

use super::lis::lis_len;

/// A permutation of `{1, …, N}` stored as its one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Validates that `images` is a bijection of `{1, …, N}`.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Invariant(format!("{images:?} is not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-based images.
    pub(crate) fn from_zero_based(images0: Vec<usize>) -> Self {
        Self::from_images_unchecked(images0.into_iter().map(|v| v + 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// `ι(x) = N + 1 − x`.
    pub fn reversal(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `π(x)` for `x ∈ 1..=N`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    /// Number of fixed points `π(x) = x`.
    pub fn fp_count(&self) -> usize {
        self.images.iter().enumerate().filter(|&(i, &v)| v == i + 1).count()
    }

    /// Number of negated points `π(x) = N + 1 − x`.
    pub fn ifp_count(&self) -> usize {
        let n = self.len();
        self.images.iter().enumerate().filter(|&(i, &v)| v == n - i).count()
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| self.images[v - 1] == i + 1)
    }

    /// `π = ι π ι`, i.e. `π(N+1−x) = N+1−π(x)`.
    pub fn commutes_with_reversal(&self) -> bool {
        let n = self.len();
        self.images.iter().enumerate().all(|(i, &v)| self.images[n - 1 - i] == n + 1 - v)
    }

    /// `π = ι π⁻¹ ι`.
    pub fn is_anti_involution(&self) -> bool {
        // π = ιπ⁻¹ι  ⟺  πι is an involution
        self.compose(&Permutation::reversal(self.len())).is_involution()
    }

    /// Longest increasing subsequence by patience sorting.
    pub fn lis(&self) -> usize {
        lis_len(&self.images)
    }

    /// Longest decreasing subsequence.
    pub fn lds(&self) -> usize {
        let rev: Vec<usize> = self.images.iter().map(|&v| self.len() + 1 - v).collect();
        lis_len(&rev)
    }

    /// The points `(i/(N+1), π(i)/(N+1))` of the permutation in the unit square.
    pub fn to_points(&self) -> Vec<(f64, f64)> {
        let d = (self.len() + 1) as f64;
        self.images.iter().enumerate().map(|(i, &v)| ((i + 1) as f64 / d, v as f64 / d)).collect()
    }

    /// All permutations of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((1..=n).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut a = cur.clone();
            if next_permutation(&mut a) {
                next = Some(a);
            }
            Some(Permutation { images: cur })
        })
    }

    /// All involutions of `1..=n` with exactly `fixed` fixed points (any
    /// number if `None`), in a deterministic order.
    pub fn involutions(n: usize, fixed: Option<usize>) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut images = vec![0; n];
        involutions_rec(&mut images, 0, fixed, &mut out);
        out
    }
}

fn involutions_rec(images: &mut [usize], start: usize, fixed: Option<usize>, out: &mut Vec<Permutation>) {
    let n = images.len();
    let Some(i) = (start..n).find(|&i| images[i] == 0) else {
        if fixed.is_none_or(|f| f == 0) {
            out.push(Permutation { images: images.to_vec() });
        }
        return;
    };
    let remaining = images[i..].iter().filter(|&&v| v == 0).count();
    // i is a fixed point
    if let Some(f) = fixed {
        if f > 0 {
            images[i] = i + 1;
            involutions_rec(images, i + 1, Some(f - 1), out);
            images[i] = 0;
        }
        if remaining <= f {
            return;
        }
    } else {
        images[i] = i + 1;
        involutions_rec(images, i + 1, None, out);
        images[i] = 0;
    }
    // i is paired with a later free j
    for j in i + 1..n {
        if images[j] == 0 {
            images[i] = j + 1;
            images[j] = i + 1;
            involutions_rec(images, i + 1, fixed, out);
            images[i] = 0;
            images[j] = 0;
        }
    }
}

/// Advances `a` to the next permutation in lexicographic order; false at the end.
pub(crate) fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::super::lis::lis_brute_force;
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
    }

    #[test]
    fn lis_examples() {
        assert_eq!(p(&[5, 1, 3, 2, 4]).lis(), 3);
        assert_eq!(Permutation::identity(4).lis(), 4);
        assert_eq!(p(&[3, 2, 1]).lis(), 1);
        assert_eq!(p(&[2, 1]).lis(), 1);
        assert_eq!(Permutation::identity(0).lis(), 0);
    }

    #[test]
    fn fixed_and_negated_points() {
        for n in 0..7 {
            let id = Permutation::identity(n);
            assert_eq!(id.fp_count(), n);
            assert_eq!(id.ifp_count(), n % 2);
        }
        let t = p(&[2, 1]);
        assert_eq!((t.fp_count(), t.ifp_count()), (0, 2));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(0).count(), 1);
        assert_eq!(Permutation::all(4).count(), 24);
        assert_eq!(Permutation::all(6).count(), 720);
    }

    #[test]
    fn patience_matches_brute_force_exhaustively() {
        for n in 0..=8 {
            for perm in Permutation::all(n) {
                assert_eq!(perm.lis(), lis_brute_force(perm.images()), "{perm:?}");
            }
        }
    }

    #[test]
    fn involution_enumeration() {
        let counts = [1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496];
        for (n, &c) in counts.iter().enumerate() {
            let all = Permutation::involutions(n, None);
            assert_eq!(all.len(), c);
            assert!(all.iter().all(Permutation::is_involution));
            let by_fp: usize = (0..=n).map(|m| Permutation::involutions(n, Some(m)).len()).sum();
            assert_eq!(by_fp, c);
        }
        // perfect matchings of 4 points
        assert_eq!(Permutation::involutions(4, Some(0)).len(), 3);
        assert!(Permutation::involutions(5, Some(2)).iter().all(|p| p.fp_count() == 2));
        assert!(Permutation::involutions(4, Some(1)).is_empty());
    }

    #[test]
    fn inverse_and_compose() {
        let a = p(&[3, 1, 4, 2]);
        assert_eq!(a.compose(&a.inverse()), Permutation::identity(4));
        assert!(p(&[2, 1, 3]).is_involution());
        assert!(!a.is_involution());
    }
}
