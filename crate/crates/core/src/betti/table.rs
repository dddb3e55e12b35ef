use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::Result;
use crate::sphere::Triangulation;

use super::sweep::betti_sweep;

/// `beta_{i,j}` for `0 <= i <= n-3`, `0 <= j <= n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedBettiTable {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl GradedBettiTable {
    pub(crate) fn zeros(n: usize) -> Self {
        GradedBettiTable { n, rows: vec![vec![0; n + 1]; n - 2] }
    }

    pub(crate) fn add(&mut self, i: usize, j: usize, value: u64) {
        self.rows[i][j] += value;
    }

    fn set(&mut self, i: usize, j: usize, value: u64) {
        self.rows[i][j] = value;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Zero outside the stored range.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

impl fmt::Display for GradedBettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            writeln!(f, "i={i}: {}", row.iter().join(" "))?;
        }
        Ok(())
    }
}

/// Assembles the graded table from the special Betti numbers:
/// `beta_{0,0} = 1`, `beta_{i-1,i} = b_i`, `beta_{i-2,i} = b_{n-i}` by
/// duality, `beta_{n-3,n} = 1`, everything else zero.
pub fn graded_table(t: &Triangulation) -> Result<GradedBettiTable> {
    let b = betti_sweep(t)?;
    let n = t.n();
    let mut table = GradedBettiTable::zeros(n);
    table.set(0, 0, 1);
    for i in 0..=n - 3 {
        table.set(i, i + 1, b.get(i as i64 + 1) as u64);
        table.set(i, i + 2, b.get(n as i64 - (i as i64 + 2)) as u64);
    }
    table.set(n - 3, n, 1);
    Ok(table)
}
