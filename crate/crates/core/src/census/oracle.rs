use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::sphere::{CanonicalCode, Face, Triangulation};

/// Largest `n` the brute-force enumeration accepts.
pub const ORACLE_CAP: usize = 8;

/// Independent enumeration by brute force over labelled graphs.
///
/// Vertex 0 is taken to have maximum degree `d`, its neighbours are `1..=d`
/// in link order, so the link cycle `1 2 .. d` is fixed. Every way of adding
/// the remaining `3n - 6 - 2d` edges is tried; a graph is kept when its
/// non-separating triangles form a valid sphere. The result is sorted by
/// canonical code and uses canonical labelling.
pub fn enumerate_oracle(n: usize) -> Result<Vec<Triangulation>> {
    if n > ORACLE_CAP {
        return Err(Error::CapExceeded { n, cap: ORACLE_CAP });
    }
    if n < 4 {
        return Err(Error::OutOfRange(format!("spheres need at least 4 vertices, got {n}")));
    }
    let mut codes = BTreeSet::new();
    for d in 3..n {
        let mut fixed = vec![vec![false; n]; n];
        let link_edge = |a: usize, b: usize, m: &mut Vec<Vec<bool>>| {
            m[a][b] = true;
            m[b][a] = true;
        };
        for v in 1..=d {
            link_edge(0, v, &mut fixed);
            link_edge(v, v % d + 1, &mut fixed);
        }
        let candidates: Vec<(usize, usize)> =
            (1..n).tuple_combinations().filter(|&(a, b): &(usize, usize)| !fixed[a][b]).collect();
        let needed = (3 * n - 6).checked_sub(2 * d);
        let Some(needed) = needed else { continue };
        if needed > candidates.len() {
            continue;
        }
        for chosen in candidates.iter().combinations(needed) {
            let mut adj = fixed.clone();
            for &&(a, b) in &chosen {
                adj[a][b] = true;
                adj[b][a] = true;
            }
            if let Some(t) = sphere_from_graph(&adj, d) {
                codes.insert(t.canonical_code());
            }
        }
    }
    codes.into_iter().map(|c: CanonicalCode| c.decode()).collect()
}

fn sphere_from_graph(adj: &[Vec<bool>], max_degree: usize) -> Option<Triangulation> {
    let n = adj.len();
    let degrees: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&x| x).count()).collect();
    if degrees.iter().any(|&d| d < 3 || d > max_degree) {
        return None;
    }
    let mut faces: Vec<Face> = Vec::new();
    for (a, b, c) in (0..n).tuple_combinations() {
        if adj[a][b] && adj[b][c] && adj[a][c] && complement_connected(adj, [a, b, c]) {
            faces.push([a, b, c]);
            if faces.len() > 2 * n - 4 {
                return None;
            }
        }
    }
    if faces.len() != 2 * n - 4 {
        return None;
    }
    let t = Triangulation::from_faces(&faces).ok()?;
    (t.n() == n && t.edge_count() == adj.iter().flatten().filter(|&&x| x).count() / 2).then_some(t)
}

fn complement_connected(adj: &[Vec<bool>], removed: [usize; 3]) -> bool {
    let n = adj.len();
    let rest: Vec<usize> = (0..n).filter(|v| !removed.contains(v)).collect();
    let mut seen = vec![false; n];
    let mut stack = vec![rest[0]];
    seen[rest[0]] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for &u in &rest {
            if adj[v][u] && !seen[u] {
                seen[u] = true;
                reached += 1;
                stack.push(u);
            }
        }
    }
    reached == rest.len()
}
