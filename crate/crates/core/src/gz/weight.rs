use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A strictly increasing integer weight `λ_1 < .. < λ_n`, the top row of
/// every pattern in the polytope `P_λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictWeight {
    values: Vec<i64>,
}

impl StrictWeight {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() || values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyDominant(join(&values)));
        }
        Ok(StrictWeight { values })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The top row of `k P_λ = P_{kλ}`; weakly increasing for `k = 0`.
    pub fn dilated(&self, k: i64) -> Vec<i64> {
        self.values.iter().map(|&v| v * k).collect()
    }

    /// `Σ λ_i`, the fixed sum of the top row.
    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }

    /// All strictly increasing weights with entries in `lo..=hi`.
    pub fn grid(n: usize, lo: i64, hi: i64) -> Vec<StrictWeight> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fill_grid(n, lo, hi, &mut cur, &mut out);
        out
    }
}

fn fill_grid(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<StrictWeight>) {
    if cur.len() == n {
        out.push(StrictWeight { values: cur.clone() });
        return;
    }
    let start = cur.last().map_or(lo, |&v| v + 1);
    for v in start..=hi {
        cur.push(v);
        fill_grid(n, lo, hi, cur, out);
        cur.pop();
    }
}

pub(crate) fn join(values: &[i64]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

impl fmt::Display for StrictWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.values))
    }
}

impl FromStr for StrictWeight {
    type Err = Error;

    /// Parses comma-separated integers, e.g. `0,1,2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let values = s
            .split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<core::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::NotStrictlyDominant(s.to_string()))?;
        StrictWeight::new(values)
    }
}
