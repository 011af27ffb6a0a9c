use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A Gelfand-Zetlin pattern: `rows[0]` is the top row, row `i` has `n - i`
/// entries and consecutive rows interlace,
/// `λ_{i-1,j} <= λ_{i,j} <= λ_{i-1,j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GzPattern {
    rows: Vec<Vec<i64>>,
}

impl GzPattern {
    /// Validates shape and interlacing.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        if n == 0 || rows.len() != n {
            return Err(Error::InvalidFace("pattern must have n rows".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n - i {
                return Err(Error::InvalidFace("row length mismatch".into()));
            }
        }
        let p = GzPattern { rows };
        if !p.interlaces() {
            return Err(Error::InvalidFace("rows do not interlace".into()));
        }
        Ok(p)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<i64>>) -> Self {
        GzPattern { rows }
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `λ_{i,j}` with `i` 0-based (row 0 is the top) and `j` 1-based.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j - 1]
    }

    /// The coordinates `λ_{i,j}`, `i >= 1`, flattened row by row.
    pub fn coordinates(&self) -> Vec<i64> {
        self.rows.iter().skip(1).flatten().copied().collect()
    }

    pub fn row_sum(&self, i: usize) -> i64 {
        self.rows[i].iter().sum()
    }

    fn interlaces(&self) -> bool {
        (1..self.n()).all(|i| {
            (1..=self.n() - i).all(|j| {
                let v = self.get(i, j);
                self.get(i - 1, j) <= v && v <= self.get(i - 1, j + 1)
            })
        })
    }
}
