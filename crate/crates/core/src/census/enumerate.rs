use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::constructions::{tetrahedron, vertex_split};
use crate::error::{Error, Result};
use crate::parallel::with_threads;
use crate::sphere::{CanonicalCode, Triangulation};

/// Largest vertex count enumerated unless the caller raises the cap.
pub const DEFAULT_CAP: usize = 13;

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub cap: usize,
    /// Worker threads; 0 uses the global pool.
    pub threads: usize,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { cap: DEFAULT_CAP, threads: 0 }
    }
}

/// One representative per isomorphism class on `n` vertices, in canonical
/// labelling, sorted by canonical code.
pub fn enumerate(n: usize) -> Result<Vec<Triangulation>> {
    enumerate_with(n, &EnumerateOptions::default())
}

pub fn enumerate_with(n: usize, opts: &EnumerateOptions) -> Result<Vec<Triangulation>> {
    Ok(enumerate_layers(n, opts)?.pop().unwrap_or_default())
}

/// All layers `4..=max_n`; entry `i` holds the spheres on `i + 4` vertices.
pub fn enumerate_layers(max_n: usize, opts: &EnumerateOptions) -> Result<Vec<Vec<Triangulation>>> {
    if max_n > opts.cap {
        return Err(Error::CapExceeded { n: max_n, cap: opts.cap });
    }
    if max_n < 4 {
        return Err(Error::OutOfRange(format!("spheres need at least 4 vertices, got {max_n}")));
    }
    with_threads(opts.threads, || {
        let mut layers = vec![vec![tetrahedron().canonical_code().decode()?]];
        for _ in 5..=max_n {
            let next = extend_layer(layers.last().unwrap());
            layers.push(next);
        }
        Ok(layers)
    })
}

/// Every vertex split of every parent, deduplicated by canonical code.
pub fn extend_layer(parents: &[Triangulation]) -> Vec<Triangulation> {
    let codes: BTreeSet<CanonicalCode> = parents
        .par_iter()
        .map(|t| {
            let mut local = BTreeSet::new();
            for v in 0..t.n() {
                let d = t.degree(v);
                for i in 0..d {
                    for j in i + 1..d {
                        let child = vertex_split(t, v, i, j).expect("splits with i < j < d are valid");
                        local.insert(child.canonical_code());
                    }
                }
            }
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    codes.into_iter().map(|c| c.decode().expect("own codes decode")).collect()
}
