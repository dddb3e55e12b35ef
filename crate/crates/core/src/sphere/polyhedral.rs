use std::collections::HashMap;

use crate::error::{Error, Result};

use super::canonical::{canonical_rotation_code, CanonicalCode};
use super::triangulation::{rotation_from_oriented, Triangulation, MAX_VERTICES};

/// A spherical polyhedral map with polygonal faces (cube, dodecahedron,
/// prisms, ...). Face cycles are stored coherently oriented, each rotated to
/// start at its smallest vertex, in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralSphere {
    n: usize,
    faces: Vec<Vec<usize>>,
    rotation: Vec<Vec<usize>>,
}

impl PolyhedralSphere {
    /// Validates a list of face cycles. Cycles may be given in either
    /// direction; they are reoriented coherently.
    pub fn from_cycles(cycles: &[Vec<usize>]) -> Result<Self> {
        if cycles.is_empty() {
            return Err(Error::NotASphere("no faces".into()));
        }
        let n = 1 + cycles.iter().flatten().copied().max().unwrap_or(0);
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, limit: MAX_VERTICES });
        }
        let mut keys = Vec::with_capacity(cycles.len());
        for c in cycles {
            let mut s = c.clone();
            s.sort_unstable();
            if c.len() < 3 {
                return Err(Error::MalformedFace { face: c.clone(), reason: "fewer than 3 vertices".into() });
            }
            if s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::MalformedFace { face: c.clone(), reason: "repeated vertex".into() });
            }
            keys.push(s);
        }
        let mut check = keys.clone();
        check.sort();
        if let Some(w) = check.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedFace { face: w[0].clone(), reason: "duplicate face".into() });
        }

        let mut edge_faces: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, c) in cycles.iter().enumerate() {
            for k in 0..c.len() {
                let (a, b) = (c[k], c[(k + 1) % c.len()]);
                edge_faces.entry((a.min(b), a.max(b))).or_default().push(i);
            }
        }
        let mut edges: Vec<_> = edge_faces.iter().collect();
        edges.sort_unstable_by_key(|(e, _)| **e);
        for (&(a, b), fs) in &edges {
            if fs.len() != 2 || fs[0] == fs[1] {
                return Err(Error::NotASphere(format!(
                    "edge {{{a},{b}}} lies in {} face(s), expected 2",
                    fs.len()
                )));
            }
        }
        let mut used = vec![false; n];
        for v in cycles.iter().flatten() {
            used[*v] = true;
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::NotASphere(format!("vertex {v} lies in no face")));
        }

        let mut oriented: Vec<Option<Vec<usize>>> = vec![None; cycles.len()];
        oriented[0] = Some(cycles[0].clone());
        let mut queue = vec![0];
        while let Some(f) = queue.pop() {
            let o = oriented[f].clone().unwrap();
            for k in 0..o.len() {
                let (x, y) = (o[k], o[(k + 1) % o.len()]);
                let g = edge_faces[&(x.min(y), x.max(y))].iter().copied().find(|&g| g != f).unwrap();
                match &oriented[g] {
                    None => {
                        let mut c = cycles[g].clone();
                        if directed(&c, x, y) {
                            c.reverse();
                        }
                        oriented[g] = Some(c);
                        queue.push(g);
                    }
                    Some(c) => {
                        if !directed(c, y, x) {
                            return Err(Error::NotASphere("faces cannot be oriented coherently".into()));
                        }
                    }
                }
            }
        }
        let mut faces: Vec<Vec<usize>> = oriented
            .into_iter()
            .collect::<Option<_>>()
            .ok_or_else(|| Error::NotASphere("complex is disconnected".into()))?;
        for f in &mut faces {
            let m = (0..f.len()).min_by_key(|&i| f[i]).unwrap();
            f.rotate_left(m);
        }
        let rotation = rotation_from_oriented(n, &faces)?;
        let euler = n as i64 - edge_faces.len() as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::NotASphere(format!("Euler characteristic is {euler}, expected 2")));
        }
        Ok(PolyhedralSphere { n, faces, rotation })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn edge_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `[u, v]` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<[usize; 2]> {
        let mut out = Vec::new();
        for (v, nbrs) in self.rotation.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&u| u > v).map(|&u| [v, u]));
        }
        out.sort_unstable();
        out
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn is_simplicial(&self) -> bool {
        self.faces.iter().all(|f| f.len() == 3)
    }

    pub fn to_triangulation(&self) -> Result<Triangulation> {
        if let Some(f) = self.faces.iter().find(|f| f.len() != 3) {
            return Err(Error::NotSimplicial(f.len()));
        }
        let faces: Vec<[usize; 3]> = self.faces.iter().map(|f| [f[0], f[1], f[2]]).collect();
        Triangulation::from_faces(&faces)
    }

    /// The dual map: one vertex per face (numbered in face order), one face per
    /// original vertex listing the surrounding faces in rotation order.
    pub fn dual(&self) -> PolyhedralSphere {
        let mut face_of: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            for k in 0..f.len() {
                face_of.insert((f[k], f[(k + 1) % f.len()]), i);
            }
        }
        let cycles: Vec<Vec<usize>> = self
            .rotation
            .iter()
            .enumerate()
            .map(|(v, nbrs)| nbrs.iter().map(|&u| face_of[&(v, u)]).collect())
            .collect();
        PolyhedralSphere::from_cycles(&cycles).expect("dual of a polyhedral sphere is a polyhedral sphere")
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_rotation_code(&self.rotation).0
    }
}

impl From<&Triangulation> for PolyhedralSphere {
    fn from(t: &Triangulation) -> Self {
        let cycles: Vec<Vec<usize>> = t.oriented_faces().iter().map(|f| f.to_vec()).collect();
        PolyhedralSphere::from_cycles(&cycles).expect("a triangulation is a polyhedral sphere")
    }
}

fn directed(c: &[usize], x: usize, y: usize) -> bool {
    (0..c.len()).any(|k| c[k] == x && c[(k + 1) % c.len()] == y)
}
