//! k-belts: chordless k-cycles whose removal disconnects the sphere.
//!
//! A sphere is reducible (a connected sum) exactly when it has a 3-belt, i.e.
//! a triangle of the graph that is not a face.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sphere::Triangulation;

/// A belt as a vertex cycle, normalized to its least rotation/reflection:
/// smallest vertex first, and the second vertex smaller than the last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Belt {
    vertices: Vec<usize>,
}

impl Belt {
    fn normalized(cycle: &[usize]) -> Self {
        let k = cycle.len();
        let m = (0..k).min_by_key(|&i| cycle[i]).unwrap();
        let forward: Vec<usize> = (0..k).map(|i| cycle[(m + i) % k]).collect();
        let backward: Vec<usize> = (0..k).map(|i| cycle[(m + k - i) % k]).collect();
        Belt { vertices: forward.min(backward) }
    }

    pub fn k(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
}

impl fmt::Display for Belt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "belt k={}:", self.k())?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

/// Checks that `cycle` is a belt: consecutive vertices adjacent, no chords,
/// and the complement induces at least two components.
pub fn is_belt(t: &Triangulation, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 || cycle.iter().any(|&v| v >= t.n()) {
        return false;
    }
    let mut seen = vec![false; t.n()];
    for &v in cycle {
        if std::mem::replace(&mut seen[v], true) {
            return false;
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if t.are_adjacent(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    separates(t, cycle)
}

fn separates(t: &Triangulation, set: &[usize]) -> bool {
    let mut inside = vec![false; t.n()];
    for &v in set {
        inside[v] = true;
    }
    let rest: Vec<usize> = (0..t.n()).filter(|&v| !inside[v]).collect();
    t.induced_component_count(&rest) >= 2
}

/// All `k`-belts, each once, in increasing order.
pub fn find_belts(t: &Triangulation, k: usize) -> Result<Vec<Belt>> {
    if k < 3 || k + 2 > t.n() {
        return Err(Error::OutOfRange(format!("belt length must lie in 3..={}, got {k}", t.n().saturating_sub(2))));
    }
    let mut belts = match k {
        3 => three_belts(t),
        4 => four_belts(t),
        _ => general_belts(t, k),
    };
    belts.sort();
    belts.dedup();
    Ok(belts)
}

/// Non-facial triangles.
fn three_belts(t: &Triangulation) -> Vec<Belt> {
    let mut out = Vec::new();
    for a in 0..t.n() {
        for &b in t.rotation(a).iter().filter(|&&b| b > a) {
            for &c in t.rotation(b).iter().filter(|&&c| c > b) {
                if t.are_adjacent(a, c) && !t.has_face(&[a, b, c]) && separates(t, &[a, b, c]) {
                    out.push(Belt { vertices: vec![a, b, c] });
                }
            }
        }
    }
    out
}

/// Each chordless 4-cycle `a b c d` is a non-adjacent pair `{a, c}` with two
/// non-adjacent common neighbours `b, d`.
fn four_belts(t: &Triangulation) -> Vec<Belt> {
    let n = t.n();
    let mut out = Vec::new();
    for a in 0..n {
        for c in a + 1..n {
            if t.are_adjacent(a, c) {
                continue;
            }
            let common: Vec<usize> = t.rotation(a).iter().copied().filter(|&x| t.are_adjacent(x, c)).collect();
            for (i, &b) in common.iter().enumerate() {
                for &d in &common[i + 1..] {
                    if !t.are_adjacent(b, d) && separates(t, &[a, b, c, d]) {
                        out.push(Belt::normalized(&[a, b, c, d]));
                    }
                }
            }
        }
    }
    out
}

/// Depth-first search for chordless cycles whose smallest vertex is the
/// start; each cycle is produced once by requiring `path[1] < path[k-1]`.
fn general_belts(t: &Triangulation, k: usize) -> Vec<Belt> {
    (0..t.n())
        .into_par_iter()
        .flat_map_iter(|s| {
            let mut out = Vec::new();
            let mut path = vec![s];
            extend(t, k, &mut path, &mut out);
            out
        })
        .collect()
}

fn extend(t: &Triangulation, k: usize, path: &mut Vec<usize>, out: &mut Vec<Belt>) {
    let s = path[0];
    let last = *path.last().unwrap();
    if path.len() == k {
        if t.are_adjacent(last, s) && path[1] < path[k - 1] && separates(t, path) {
            out.push(Belt::normalized(path));
        }
        return;
    }
    for &w in t.rotation(last) {
        if w <= s || path.contains(&w) {
            continue;
        }
        let closing = path.len() + 1 == k;
        let chord = path[..path.len() - 1].iter().enumerate().any(|(i, &p)| t.are_adjacent(w, p) && !(i == 0 && closing));
        if chord {
            continue;
        }
        path.push(w);
        extend(t, k, path, out);
        path.pop();
    }
}

/// True iff every triangle of the graph is a face.
pub fn is_irreducible(t: &Triangulation) -> bool {
    three_belts(t).is_empty()
}

/// Number of `k`-belts for every `k` in `3..=n-2`.
pub fn belt_profile(t: &Triangulation) -> BTreeMap<usize, usize> {
    (3..=t.n().saturating_sub(2)).map(|k| (k, find_belts(t, k).map(|b| b.len()).unwrap_or(0))).collect()
}
