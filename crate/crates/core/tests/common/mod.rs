#![allow(dead_code)]

use std::sync::OnceLock;

use itertools::Itertools;
use proptest::prelude::*;
use sphere_rigidity::census::{CensusDatabase, EnumerateOptions};
use sphere_rigidity::constructions::{tetrahedron, vertex_split};
use sphere_rigidity::Triangulation;

/// Census database for `4..=10`, built once per test binary.
pub fn census10() -> &'static CensusDatabase {
    static DB: OnceLock<CensusDatabase> = OnceLock::new();
    DB.get_or_init(|| CensusDatabase::build(10, &EnumerateOptions::default()).unwrap())
}

pub fn layer(n: usize) -> Vec<Triangulation> {
    census10().layer(n).unwrap().iter().map(|r| r.triangulation()).collect()
}

/// Isomorphism by trying every bijection; independent of canonical codes.
pub fn brute_isomorphic(a: &Triangulation, b: &Triangulation) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let target: Vec<[usize; 3]> = b.faces().to_vec();
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    (0..a.n()).permutations(a.n()).any(|p| {
        let mut faces: Vec<[usize; 3]> = a
            .faces()
            .iter()
            .map(|f| {
                let mut g = f.map(|v| p[v]);
                g.sort_unstable();
                g
            })
            .collect();
        faces.sort_unstable();
        faces == target
    })
}

/// A sphere grown from the tetrahedron by a sequence of vertex splits.
/// Each triple picks a vertex and two link positions modulo what exists.
pub fn grow(steps: &[(usize, usize, usize)]) -> Triangulation {
    let mut t = tetrahedron();
    for &(v, a, b) in steps {
        let v = v % t.n();
        let d = t.degree(v);
        let (i, j) = (a % d, b % d);
        let (i, j) = if i == j { (i.min(d - 2), i.min(d - 2) + 1) } else { (i.min(j), i.max(j)) };
        t = vertex_split(&t, v, i, j).unwrap();
    }
    t
}

pub fn sphere_strategy(max_extra: usize) -> impl Strategy<Value = Triangulation> {
    prop::collection::vec((0usize..64, 0usize..64, 0usize..64), 0..=max_extra).prop_map(|s| grow(&s))
}

pub fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}
