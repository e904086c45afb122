use crate::error::{Error, Result};

use super::partition::Partition;
use super::permutation::Permutation;

/// A Young tableau stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates that `rows` form a standard Young tableau on `1..=n`.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { rows };
        t.check_standard()?;
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_parts_unchecked(self.rows.iter().map(Vec::len).collect())
    }

    /// Shape, row and column strictness, and the entries being exactly `1..=n`.
    pub fn check_standard(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::Invariant(format!("tableau {:?}: {why}", self.rows)));
        if self.rows.iter().any(Vec::is_empty) || self.rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("rows do not form a partition shape");
        }
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for row in &self.rows {
            for &v in row {
                if v == 0 || v > n || seen[v] {
                    return bad("entries are not 1..=n");
                }
                seen[v] = true;
            }
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return bad("row not increasing");
            }
        }
        for w in self.rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return bad("column not increasing");
            }
        }
        Ok(())
    }

    /// Schensted row insertion of `x`; returns the row index where a new box
    /// was created.
    fn insert(&mut self, mut x: usize) -> usize {
        for (r, row) in self.rows.iter_mut().enumerate() {
            let pos = row.partition_point(|&y| y < x);
            if pos == row.len() {
                row.push(x);
                return r;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        self.rows.push(vec![x]);
        self.rows.len() - 1
    }
}

/// Robinson–Schensted correspondence by row insertion: returns the insertion
/// tableau `P(π)` and the recording tableau `Q(π)`.
pub fn rsk(p: &Permutation) -> (Tableau, Tableau) {
    let mut ins = Tableau::default();
    let mut rec = Tableau::default();
    for (t, &v) in p.images().iter().enumerate() {
        let r = ins.insert(v);
        if r == rec.rows.len() {
            rec.rows.push(Vec::new());
        }
        rec.rows[r].push(t + 1);
    }
    (ins, rec)
}
