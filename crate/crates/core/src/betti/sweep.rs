use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sphere::Triangulation;
use crate::union_find::DisjointSets;

/// `b_0, ..., b_n` for a sphere on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BettiVector {
    values: Vec<i64>,
}

impl BettiVector {
    pub fn new(values: Vec<i64>) -> Self {
        assert!(!values.is_empty());
        BettiVector { values }
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    /// `b_k`, zero outside `0..=n`.
    pub fn get(&self, k: i64) -> i64 {
        if k < 0 {
            return 0;
        }
        self.values.get(k as usize).copied().unwrap_or(0)
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `b_{n-k}`.
    pub fn from_top(&self, k: usize) -> i64 {
        self.get(self.n() as i64 - k as i64)
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b: {}", self.values.iter().join(","))
    }
}

impl FromStr for BettiVector {
    type Err = Error;

    /// Accepts `b: v0,...,vn` or the bare comma list.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().strip_prefix("b:").unwrap_or(s).trim();
        let values = body
            .split(',')
            .map(|v| v.trim().parse::<i64>().map_err(|_| Error::Parse { line: 0, message: format!("bad Betti entry `{v}`") }))
            .collect::<Result<Vec<_>>>()?;
        Ok(BettiVector::new(values))
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Largest vertex count accepted; cost is `Θ(2^n · n)`.
    pub max_vertices: usize,
    pub threads: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { max_vertices: 24, threads: 1 }
    }
}

pub fn betti_sweep(t: &Triangulation) -> Result<BettiVector> {
    betti_sweep_with(t, &SweepOptions::default())
}

/// One pass over all `2^n` vertex subsets, accumulating `cc - 1` into the slot
/// of the subset size. Results do not depend on the thread count.
pub fn betti_sweep_with(t: &Triangulation, opts: &SweepOptions) -> Result<BettiVector> {
    let n = t.n();
    let cap = opts.max_vertices.min(40);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let rows = t.adjacency_masks().expect("n <= 40");
    let total = 1u64 << n;
    let chunk_bits = n.saturating_sub(8).min(12);
    let chunk = 1u64 << chunk_bits;
    let chunks = total / chunk;
    let sweep_chunk = |c: u64| {
        let mut acc = vec![0i64; n + 1];
        for mask in c * chunk..(c + 1) * chunk {
            acc[mask.count_ones() as usize] += component_count(mask, &rows) as i64 - 1;
        }
        acc
    };
    let merge = |mut a: Vec<i64>, b: Vec<i64>| {
        a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
        a
    };
    let values = if opts.threads <= 1 {
        (0..chunks).map(sweep_chunk).fold(vec![0; n + 1], merge)
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::Io(e.to_string()))?;
        pool.install(|| (0..chunks).into_par_iter().map(sweep_chunk).reduce(|| vec![0; n + 1], merge))
    };
    Ok(BettiVector::new(values))
}

/// Components of the subgraph induced by `mask`, by repeated neighbourhood
/// expansion on bitmasks.
#[inline]
fn component_count(mask: u64, rows: &[u64]) -> u32 {
    let mut rest = mask;
    let mut count = 0;
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let mut grown = 0;
            let mut f = frontier;
            while f != 0 {
                grown |= rows[f.trailing_zeros() as usize];
                f &= f - 1;
            }
            let next = (comp | grown) & mask;
            frontier = next & !comp;
            comp = next;
        }
        rest &= !comp;
        count += 1;
    }
    count
}

/// `b_k` by enumerating `k`-subsets and merging induced edges with a
/// disjoint-set forest. Independent of [`betti_sweep`].
pub fn betti_bruteforce(t: &Triangulation, k: usize) -> i64 {
    let n = t.n();
    if k > n {
        return 0;
    }
    let edges = t.edges();
    let mut total = 0i64;
    let mut inside = vec![false; n];
    for subset in (0..n).combinations(k) {
        subset.iter().for_each(|&v| inside[v] = true);
        let mut ds = DisjointSets::new(n);
        let mut components = k as i64;
        for &[a, b] in &edges {
            if inside[a] && inside[b] && ds.union(a, b) {
                components -= 1;
            }
        }
        total += components - 1;
        subset.iter().for_each(|&v| inside[v] = false);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> Triangulation {
        let mut faces = Vec::new();
        for i in 0..4 {
            faces.push([i, (i + 1) % 4, 4]);
            faces.push([i, (i + 1) % 4, 5]);
        }
        Triangulation::from_faces(&faces).unwrap()
    }

    #[test]
    fn octahedron_vector() {
        let b = betti_sweep(&octahedron()).unwrap();
        assert_eq!(b.values(), &[-1, 0, 3, 0, 0, 0, 0]);
        assert_eq!(b.to_string(), "b: -1,0,3,0,0,0,0");
        assert_eq!("b: -1,0,3,0,0,0,0".parse::<BettiVector>().unwrap(), b);
    }

    #[test]
    fn threads_do_not_change_result() {
        let t = octahedron();
        let one = betti_sweep(&t).unwrap();
        let many = betti_sweep_with(&t, &SweepOptions { threads: 4, ..Default::default() }).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn cap_is_enforced() {
        let opts = SweepOptions { max_vertices: 5, threads: 1 };
        assert!(matches!(betti_sweep_with(&octahedron(), &opts), Err(Error::CapExceeded { n: 6, cap: 5 })));
    }

    #[test]
    fn bruteforce_matches_on_octahedron() {
        let t = octahedron();
        let b = betti_sweep(&t).unwrap();
        for k in 0..=6 {
            assert_eq!(betti_bruteforce(&t, k), b.get(k as i64));
        }
        assert_eq!(betti_bruteforce(&t, 1), 0);
    }

    #[test]
    fn component_count_on_path_and_gaps() {
        // path 0-1-2 plus isolated 3
        let rows = [0b0010, 0b0101, 0b0010, 0];
        assert_eq!(component_count(0b1111, &rows), 2);
        assert_eq!(component_count(0b0101, &rows), 2);
        assert_eq!(component_count(0, &rows), 0);
    }
}
