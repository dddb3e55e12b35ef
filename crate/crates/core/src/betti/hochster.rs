use itertools::Itertools;

use crate::error::{Error, Result};
use crate::sphere::Triangulation;

use super::table::GradedBettiTable;

/// `2^31 - 1`, standing in for characteristic zero.
pub const LARGE_PRIME: u64 = 2_147_483_647;

/// Default vertex cap for the homology route: it runs `2^n` rank computations.
const DEFAULT_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    Two,
    LargePrime,
}

impl Coefficients {
    pub fn modulus(self) -> u64 {
        match self {
            Coefficients::Two => 2,
            Coefficients::LargePrime => LARGE_PRIME,
        }
    }
}

/// Dimensions of `H̃_{-1}, H̃_0, H̃_1, H̃_2` of the subcomplex induced by
/// `subset` (its vertices, induced edges and induced triangles).
pub fn reduced_homology(t: &Triangulation, subset: &[usize], field: Coefficients) -> [u64; 4] {
    let p = field.modulus();
    let mut index = vec![usize::MAX; t.n()];
    for (i, &v) in subset.iter().enumerate() {
        index[v] = i;
    }
    let inside = |v: usize| index[v] != usize::MAX;
    let edges: Vec<[usize; 2]> = t.edges().into_iter().filter(|e| inside(e[0]) && inside(e[1])).collect();
    let triangles: Vec<[usize; 3]> = t.faces().iter().copied().filter(|f| f.iter().all(|&v| inside(v))).collect();

    let minus_one = p - 1;
    // boundary of edges, one row per edge
    let d1: Vec<Vec<u64>> = edges
        .iter()
        .map(|&[a, b]| {
            let mut row = vec![0; subset.len()];
            row[index[a]] = minus_one;
            row[index[b]] = 1;
            row
        })
        .collect();
    let edge_index = |a: usize, b: usize| edges.binary_search(&[a, b]).unwrap();
    let d2: Vec<Vec<u64>> = triangles
        .iter()
        .map(|&[a, b, c]| {
            let mut row = vec![0; edges.len()];
            row[edge_index(b, c)] = 1;
            row[edge_index(a, c)] = minus_one;
            row[edge_index(a, b)] = 1;
            row
        })
        .collect();

    let (c0, c1, c2) = (subset.len() as u64, edges.len() as u64, triangles.len() as u64);
    let r0 = u64::from(c0 > 0);
    let r1 = rank_mod_p(d1, p);
    let r2 = rank_mod_p(d2, p);
    [1 - r0, c0 - r0 - r1, c1 - r1 - r2, c2 - r2]
}

fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> u64 {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - factor * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// `beta_{i,j} = sum over j-subsets W of dim H̃_{j-i-1}(P|_W)`.
pub fn hochster_beta(t: &Triangulation, i: usize, j: usize, field: Coefficients) -> Result<u64> {
    hochster_beta_with(t, i, j, field, DEFAULT_CAP)
}

pub fn hochster_beta_with(t: &Triangulation, i: usize, j: usize, field: Coefficients, cap: usize) -> Result<u64> {
    let n = t.n();
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let q = j as i64 - i as i64 - 1;
    if j > n || !(-1..=2).contains(&q) {
        return Ok(0);
    }
    Ok((0..n).combinations(j).map(|w| reduced_homology(t, &w, field)[(q + 1) as usize]).sum())
}

/// The whole graded table from Hochster's formula, one homology computation
/// per subset.
pub fn hochster_table(t: &Triangulation, field: Coefficients) -> Result<GradedBettiTable> {
    let n = t.n();
    if n > DEFAULT_CAP {
        return Err(Error::CapExceeded { n, cap: DEFAULT_CAP });
    }
    let mut table = GradedBettiTable::zeros(n);
    for j in 0..=n {
        for w in (0..n).combinations(j) {
            let h = reduced_homology(t, &w, field);
            for (slot, &dim) in h.iter().enumerate() {
                if dim == 0 {
                    continue;
                }
                let q = slot as i64 - 1;
                let i = j as i64 - q - 1;
                assert!(i >= 0 && i as usize <= n - 3, "homology outside the table at W = {w:?}");
                table.add(i as usize, j, dim);
            }
        }
    }
    Ok(table)
}

/// Computes the table over both fields and fails on any disagreement.
pub fn hochster_table_both(t: &Triangulation) -> Result<GradedBettiTable> {
    let two = hochster_table(t, Coefficients::Two)?;
    let large = hochster_table(t, Coefficients::LargePrime)?;
    if two != large {
        let n = t.n();
        for j in 0..=n {
            for w in (0..n).combinations(j) {
                if reduced_homology(t, &w, Coefficients::Two) != reduced_homology(t, &w, Coefficients::LargePrime) {
                    return Err(Error::FieldMismatch(w));
                }
            }
        }
    }
    Ok(two)
}
