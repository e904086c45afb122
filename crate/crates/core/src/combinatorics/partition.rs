use std::fmt;

use crate::error::{Error, Result};

/// An integer partition `λ = (λ₁ ≥ λ₂ ≥ … > 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates that the parts are positive and weakly decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invariant(format!("{parts:?} is not a partition")));
        }
        Ok(Partition { parts })
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ| = Σ λᵢ`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ₁`, the length of the first row (0 for the empty partition).
    pub fn first_row(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The transposed partition `λ'`.
    pub fn conjugate(&self) -> Partition {
        let cols = (1..=self.first_row()).map(|j| self.parts.iter().take_while(|&&p| p >= j).count());
        Partition { parts: cols.collect() }
    }

    /// Number of columns of odd length.
    pub fn odd_columns(&self) -> usize {
        // column j has length #{i : λᵢ ≥ j}; parity changes only at row ends
        self.conjugate().parts.iter().filter(|&&c| c % 2 == 1).count()
    }

    /// Number of rows of odd length.
    pub fn odd_rows(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Calls `f` on every partition of `n` with all parts `≤ max_part`, in
/// reverse-lexicographic order (`(n)` first, `(1ⁿ)` last).
pub fn for_each_partition(n: usize, max_part: usize, mut f: impl FnMut(&Partition)) {
    let mut current = Partition::default();
    recurse(n, max_part.min(n), &mut current, &mut f);
}

fn recurse(rest: usize, max_part: usize, current: &mut Partition, f: &mut impl FnMut(&Partition)) {
    if rest == 0 {
        f(current);
        return;
    }
    for p in (1..=max_part.min(rest)).rev() {
        current.parts.push(p);
        recurse(rest - p, p, current, f);
        current.parts.pop();
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition(n, n, |p| out.push(p.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        // p(n) for n = 0..=12
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &e) in expected.iter().enumerate() {
            let ps = partitions(n);
            assert_eq!(ps.len(), e);
            assert!(ps.iter().all(|p| p.size() == n));
        }
    }

    #[test]
    fn reverse_lex_order() {
        let ps: Vec<Vec<usize>> = partitions(4).into_iter().map(|p| p.parts).collect();
        assert_eq!(ps, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        for w in partitions(9).windows(2) {
            assert!(w[0].parts > w[1].parts);
        }
    }

    #[test]
    fn max_part_restriction() {
        let mut count = 0;
        for_each_partition(6, 2, |p| {
            assert!(p.first_row() <= 2);
            count += 1;
        });
        assert_eq!(count, 4);
    }

    #[test]
    fn conjugate_and_odd_columns() {
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.conjugate().parts(), &[3, 2, 1, 1]);
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(p.odd_columns(), 3);
        assert_eq!(p.odd_rows(), 1);
        assert_eq!(p.to_string(), "(4,2,1)");
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}
