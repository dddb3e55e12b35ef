//! Generators with fixed, documented vertex numbering.
//!
//! * `tetrahedron`: faces of `{0,1,2,3}`.
//! * `bipyramid(n)`: equator cycle `0..n-2`, apexes `n-2` and `n-1`. The
//!   octahedron is `bipyramid(6)`.
//! * `icosahedron`: top `0`, upper ring `1..=5`, lower ring `6..=10`, bottom `11`.
//! * `cube`: bottom `0 1 2 3`, top `4 5 6 7` with `i + 4` above `i`.
//! * `dodecahedron`: outer pentagon `0..5`, then rings `5..10`, `10..15`, inner
//!   pentagon `15..20`.
//! * `prism(k)`: bottom `0..k`, top `k..2k` with `k + i` above `i`.
//! * `edge_cut_prism(k)`: bottom `y_i = i`; top `x_i = k + i - 2` for
//!   `2 <= i < k`; the cut edge `x_0 x_1` becomes `p0 = 2k-2`, `q0 = 2k-1`,
//!   `p1 = 2k`, `q1 = 2k+1`.
//! * `semi_bipyramid(n)`: `bipyramid(n-1)` on the cycle `0..n-3` with apexes
//!   `x = n-3`, `y = n-2`; the edge `x 0` is replaced by the vertex `z = n-1`
//!   adjacent to `x, n-4, 0, 1`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sphere::{Face, PolyhedralSphere, Polytope, Triangulation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Platonic {
    T4,
    O6,
    I12,
    C8,
    D20,
}

impl Platonic {
    pub const ALL: [Platonic; 5] = [Platonic::T4, Platonic::O6, Platonic::I12, Platonic::C8, Platonic::D20];

    pub fn build(self) -> Polytope {
        match self {
            Platonic::T4 => Polytope::Simplicial(tetrahedron()),
            Platonic::O6 => Polytope::Simplicial(octahedron()),
            Platonic::I12 => Polytope::Simplicial(icosahedron()),
            Platonic::C8 => Polytope::Polyhedral(cube()),
            Platonic::D20 => Polytope::Polyhedral(dodecahedron()),
        }
    }
}

impl FromStr for Platonic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T4" => Ok(Platonic::T4),
            "O6" => Ok(Platonic::O6),
            "I12" => Ok(Platonic::I12),
            "C8" => Ok(Platonic::C8),
            "D20" => Ok(Platonic::D20),
            _ => Err(Error::UnknownName(s.to_string())),
        }
    }
}

impl fmt::Display for Platonic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Platonic::T4 => "T4",
            Platonic::O6 => "O6",
            Platonic::I12 => "I12",
            Platonic::C8 => "C8",
            Platonic::D20 => "D20",
        };
        f.write_str(s)
    }
}

pub fn platonic(name: &str) -> Result<Polytope> {
    Ok(name.parse::<Platonic>()?.build())
}

pub fn tetrahedron() -> Triangulation {
    Triangulation::from_faces(&[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).expect("tetrahedron")
}

pub fn octahedron() -> Triangulation {
    bipyramid(6).expect("octahedron")
}

pub fn icosahedron() -> Triangulation {
    let mut faces = Vec::new();
    for i in 0..5 {
        let j = (i + 1) % 5;
        let (ui, uj, li, lj) = (1 + i, 1 + j, 6 + i, 6 + j);
        faces.extend([[0, ui, uj], [ui, uj, li], [uj, li, lj], [11, li, lj]]);
    }
    Triangulation::from_faces(&faces).expect("icosahedron")
}

pub fn cube() -> PolyhedralSphere {
    prism(4).expect("cube")
}

pub fn dodecahedron() -> PolyhedralSphere {
    let mut cycles = vec![(0..5).collect::<Vec<_>>(), (15..20).collect()];
    for i in 0..5 {
        let j = (i + 1) % 5;
        let (ai, aj, bi, bj, ci, cj, di, dj) = (i, j, 5 + i, 5 + j, 10 + i, 10 + j, 15 + i, 15 + j);
        cycles.push(vec![ai, aj, bj, ci, bi]);
        cycles.push(vec![ci, bj, cj, dj, di]);
    }
    PolyhedralSphere::from_cycles(&cycles).expect("dodecahedron")
}

/// `B_n`: an `(n-2)`-cycle and two apexes joined to every cycle vertex.
pub fn bipyramid(n: usize) -> Result<Triangulation> {
    if n < 5 {
        return Err(Error::OutOfRange(format!("bipyramid needs n >= 5, got {n}")));
    }
    let m = n - 2;
    let faces: Vec<Face> = (0..m).flat_map(|i| [[i, (i + 1) % m, m], [i, (i + 1) % m, m + 1]]).collect();
    Triangulation::from_faces(&faces)
}

/// Product of a `k`-gon and an interval.
pub fn prism(k: usize) -> Result<PolyhedralSphere> {
    if k < 3 {
        return Err(Error::OutOfRange(format!("prism needs k >= 3, got {k}")));
    }
    let mut cycles = vec![(0..k).collect::<Vec<_>>(), (k..2 * k).collect()];
    for i in 0..k {
        let j = (i + 1) % k;
        cycles.push(vec![i, j, k + j, k + i]);
    }
    PolyhedralSphere::from_cycles(&cycles)
}

/// A prism with one top edge truncated by a new quadrilateral, `k + 3` faces.
pub fn edge_cut_prism(k: usize) -> Result<PolyhedralSphere> {
    if k < 3 {
        return Err(Error::OutOfRange(format!("edge_cut_prism needs k >= 3, got {k}")));
    }
    let y = |i: usize| i;
    let x = |i: usize| k + i - 2;
    let (p0, q0, p1, q1) = (2 * k - 2, 2 * k - 1, 2 * k, 2 * k + 1);
    let mut top = vec![p0, p1];
    top.extend((2..k).map(x));
    let mut cycles = vec![
        (0..k).collect::<Vec<_>>(),
        top,
        vec![p0, q0, q1, p1],
        vec![q0, q1, y(1), y(0)],
        vec![x(k - 1), p0, q0, y(0), y(k - 1)],
        vec![p1, x(2), y(2), y(1), q1],
    ];
    for i in 2..k - 1 {
        cycles.push(vec![x(i), x(i + 1), y(i + 1), y(i)]);
    }
    PolyhedralSphere::from_cycles(&cycles)
}

/// The dual of `edge_cut_prism(n - 3)`, built directly.
pub fn semi_bipyramid(n: usize) -> Result<Triangulation> {
    if n < 8 {
        return Err(Error::OutOfRange(format!("semi_bipyramid needs n >= 8, got {n}")));
    }
    let m = n - 3;
    let (x, y, z) = (m, m + 1, n - 1);
    let mut faces: Vec<Face> = Vec::new();
    for i in 0..m {
        let j = (i + 1) % m;
        faces.push([i, j, y]);
        if i != m - 1 && i != 0 {
            faces.push([i, j, x]);
        }
    }
    faces.extend([[z, x, m - 1], [z, m - 1, 0], [z, 0, 1], [z, 1, x]]);
    Triangulation::from_faces(&faces)
}

/// Cones every face from a new centre vertex `n + f`.
pub fn subdivide_first(p: &PolyhedralSphere) -> Triangulation {
    let n = p.n();
    let mut faces = Vec::new();
    for (f, cycle) in p.faces().iter().enumerate() {
        let c = n + f;
        for k in 0..cycle.len() {
            faces.push([cycle[k], cycle[(k + 1) % cycle.len()], c]);
        }
    }
    Triangulation::from_faces(&faces).expect("coning faces of a sphere gives a sphere")
}

/// Barycentric subdivision: edge midpoints `n..n+E` in sorted edge order,
/// then face centres `n+E..n+E+F`.
pub fn subdivide_second(p: &PolyhedralSphere) -> Triangulation {
    let n = p.n();
    let edges = p.edges();
    let midpoint = |a: usize, b: usize| n + edges.binary_search(&[a.min(b), a.max(b)]).expect("edge");
    let mut faces = Vec::new();
    for (f, cycle) in p.faces().iter().enumerate() {
        let c = n + edges.len() + f;
        for k in 0..cycle.len() {
            let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            let m = midpoint(a, b);
            faces.push([a, m, c]);
            faces.push([m, b, c]);
        }
    }
    Triangulation::from_faces(&faces).expect("barycentric subdivision of a sphere is a sphere")
}

/// Splits `v` with link `u_0 .. u_{d-1}` (its rotation) into `v` and a new
/// vertex `n`: `v` keeps the arc `u_i .. u_j`, the new vertex takes
/// `u_j .. u_i`, and both are joined to `u_i` and `u_j`.
pub fn vertex_split(t: &Triangulation, v: usize, i: usize, j: usize) -> Result<Triangulation> {
    if v >= t.n() {
        return Err(Error::InvalidSplit(format!("vertex {v} does not exist")));
    }
    let link = t.rotation(v);
    let d = link.len();
    if i >= j || j >= d {
        return Err(Error::InvalidSplit(format!("need 0 <= i < j < {d}, got i = {i}, j = {j}")));
    }
    let w = t.n();
    let mut faces: Vec<Face> = t.faces().iter().copied().filter(|f| !f.contains(&v)).collect();
    for s in 0..d {
        let owner = if (i..j).contains(&s) { v } else { w };
        faces.push([owner, link[s], link[(s + 1) % d]]);
    }
    faces.push([v, w, link[i]]);
    faces.push([v, w, link[j]]);
    Triangulation::from_faces(&faces)
}

/// Inverse of [`vertex_split`]: merges `b` into `a` and renumbers the vertices
/// above `b` down by one. The edge must lie in no separating triangle.
pub fn contract_edge(t: &Triangulation, a: usize, b: usize) -> Result<Triangulation> {
    if a == b || a >= t.n() || b >= t.n() || !t.are_adjacent(a, b) {
        return Err(Error::InvalidSplit(format!("{{{a},{b}}} is not an edge")));
    }
    let common = t.rotation(a).iter().filter(|&&u| t.are_adjacent(u, b)).count();
    if common != 2 || t.n() == 4 {
        return Err(Error::InvalidSplit(format!("edge {{{a},{b}}} cannot be contracted")));
    }
    let relabel = |u: usize| {
        let u = if u == b { a } else { u };
        if u > b {
            u - 1
        } else {
            u
        }
    };
    let faces: Vec<Face> = t
        .faces()
        .iter()
        .filter(|f| !(f.contains(&a) && f.contains(&b)))
        .map(|f| f.map(relabel))
        .collect();
    Triangulation::from_faces(&faces)
}

/// Parses `T4`, `O6`, `I12`, `C8`, `D20`, `bipyramid:<n>`, `prism:<k>`,
/// `edge_cut_prism:<k>`, `semi_bipyramid:<n>`, `xi1:<platonic>`, `xi2:<platonic>`.
pub fn construct_named(spec: &str) -> Result<Polytope> {
    let (name, param) = match spec.split_once(':') {
        Some((a, b)) => (a, Some(b)),
        None => (spec, None),
    };
    let number = || -> Result<usize> {
        let p = param.ok_or_else(|| Error::OutOfRange(format!("`{name}` needs a numeric parameter")))?;
        p.parse().map_err(|_| Error::OutOfRange(format!("`{p}` is not a vertex count")))
    };
    let solid = || -> Result<PolyhedralSphere> {
        let p = param.ok_or_else(|| Error::UnknownName(format!("{name}: missing solid")))?;
        Ok(p.parse::<Platonic>()?.build().to_polyhedral())
    };
    match name {
        "bipyramid" => Ok(Polytope::Simplicial(bipyramid(number()?)?)),
        "prism" => Ok(Polytope::Polyhedral(prism(number()?)?)),
        "edge_cut_prism" => Ok(Polytope::Polyhedral(edge_cut_prism(number()?)?)),
        "semi_bipyramid" => Ok(Polytope::Simplicial(semi_bipyramid(number()?)?)),
        "xi1" => Ok(Polytope::Simplicial(subdivide_first(&solid()?))),
        "xi2" => Ok(Polytope::Simplicial(subdivide_second(&solid()?))),
        _ if param.is_none() => platonic(name),
        _ => Err(Error::UnknownName(spec.to_string())),
    }
}

/// A candidate pair from the necessary condition for rigid reducible spheres.
#[derive(Clone, Debug)]
pub struct FamilyPair {
    pub first: String,
    pub second: String,
    pub p1: Triangulation,
    pub p2: Triangulation,
}

/// `P1 # P2` with `P1` in `{T4, O6, I12}` and `P2` in `{T4, O6, I12, ξ1(C8),
/// ξ2(C8), ξ1(D20), ξ2(D20)} ∪ {B_n : 7 <= n <= max_bipyramid}`, listing each
/// unordered pair of regular solids once.
pub fn necessary_family(max_bipyramid: usize) -> Vec<FamilyPair> {
    let regular = [("T4", tetrahedron()), ("O6", octahedron()), ("I12", icosahedron())];
    let mut second: Vec<(String, Triangulation)> =
        regular.iter().map(|(name, t)| (name.to_string(), t.clone())).collect();
    for (name, solid) in [("C8", cube()), ("D20", dodecahedron())] {
        second.push((format!("xi1({name})"), subdivide_first(&solid)));
        second.push((format!("xi2({name})"), subdivide_second(&solid)));
    }
    for n in 7..=max_bipyramid {
        second.push((format!("B{n}"), bipyramid(n).expect("n >= 7")));
    }
    let mut out = Vec::new();
    for (i, (first, p1)) in regular.iter().enumerate() {
        for (j, (name, p2)) in second.iter().enumerate() {
            if j < 3 && j < i {
                continue;
            }
            out.push(FamilyPair { first: first.to_string(), second: name.clone(), p1: p1.clone(), p2: p2.clone() });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_generators_have_expected_sizes() {
        assert_eq!(tetrahedron().faces().len(), 4);
        let i = icosahedron();
        assert_eq!((i.n(), i.faces().len()), (12, 20));
        assert!(i.degrees().iter().all(|&d| d == 5));
        let d = dodecahedron();
        assert_eq!((d.n(), d.face_count()), (20, 12));
        assert!(d.faces().iter().all(|f| f.len() == 5));
        assert_eq!(cube().face_count(), 6);
        assert_eq!(edge_cut_prism(5).unwrap().face_count(), 8);
    }

    #[test]
    fn semi_bipyramid_degrees() {
        let s = semi_bipyramid(8).unwrap();
        let mut deg = s.degrees();
        deg.sort_unstable();
        assert_eq!(deg, vec![4, 4, 4, 4, 5, 5, 5, 5]);
        assert!(semi_bipyramid(7).is_err());
    }

    #[test]
    fn split_and_contract() {
        let t = tetrahedron();
        let s = vertex_split(&t, 0, 0, 1).unwrap();
        assert_eq!(s.n(), 5);
        let back = contract_edge(&s, 0, 4).unwrap();
        assert_eq!(back.canonical_code(), t.canonical_code());
        assert!(vertex_split(&t, 0, 1, 1).is_err());
        assert!(vertex_split(&t, 0, 0, 3).is_err());
    }

    #[test]
    fn names() {
        assert_eq!(construct_named("bipyramid:9").unwrap().n(), 9);
        assert_eq!(construct_named("xi2:D20").unwrap().n(), 62);
        assert_eq!(construct_named("C8").unwrap().n(), 8);
        assert!(matches!(construct_named("Q7"), Err(Error::UnknownName(_))));
        assert!(matches!(construct_named("xi1:Q7"), Err(Error::UnknownName(_))));
        assert!(construct_named("bipyramid:x").is_err());
    }

    #[test]
    fn family_shape() {
        let fam = necessary_family(9);
        let has = |a: &str, b: &str| fam.iter().any(|p| p.first == a && p.second == b);
        assert!(has("T4", "B7"));
        assert!(has("I12", "xi2(D20)"));
        assert!(!has("O6", "T4"));
        assert!(!fam.iter().any(|p| p.first.starts_with('B')));
        assert_eq!(fam.len(), 10 + 9 + 8);
    }
}
