use std::collections::HashMap;

use crate::error::{Error, Result};

use super::canonical::{canonical_rotation_code, CanonicalCode};

/// Largest vertex count accepted anywhere: canonical codes store labels as bytes.
pub const MAX_VERTICES: usize = 254;

/// A triangle given by three vertex ids.
pub type Face = [usize; 3];

/// A validated simplicial 2-sphere on vertices `0..n`.
///
/// Construction checks every sphere invariant, so a value of this type always
/// satisfies: `|faces| = 2n - 4`, `|edges| = 3n - 6`, every edge lies in exactly
/// two faces, every vertex link is one simple cycle, and the complex is
/// connected with Euler characteristic 2. Triangulated 2-spheres with `n >= 4`
/// are 3-connected, so no separate connectivity-3 test is made.
///
/// The rotation system (cyclic neighbour order around each vertex, coherently
/// oriented) is derived once and cached.
///
/// Equality compares vertex count and face set; the orientation chosen for
/// the rotation system does not take part.
#[derive(Clone, Debug)]
pub struct Triangulation {
    n: usize,
    /// Sorted triples, sorted lexicographically.
    faces: Vec<Face>,
    /// `oriented[i]` is `faces[i]` with a coherent cyclic orientation.
    oriented: Vec<Face>,
    rotation: Vec<Vec<usize>>,
    /// Row-major adjacency bitsets, `words` u64 per row.
    adjacency: Vec<u64>,
    words: usize,
}

impl PartialEq for Triangulation {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.faces == other.faces
    }
}

impl Eq for Triangulation {}

impl Triangulation {
    /// Builds and validates a triangulation from a list of vertex triples.
    /// The vertex count is `1 + max id`.
    pub fn from_faces(faces: &[Face]) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::NotASphere("no faces".into()));
        }
        let n = 1 + faces.iter().flatten().copied().max().unwrap_or(0);
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, limit: MAX_VERTICES });
        }
        let mut sorted = Vec::with_capacity(faces.len());
        for f in faces {
            if f[0] == f[1] || f[1] == f[2] || f[0] == f[2] {
                return Err(Error::MalformedFace {
                    face: f.to_vec(),
                    reason: "repeated vertex".into(),
                });
            }
            let mut s = *f;
            s.sort_unstable();
            sorted.push(s);
        }
        let mut check = sorted.clone();
        check.sort_unstable();
        if let Some(w) = check.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::MalformedFace { face: w[0].to_vec(), reason: "duplicate face".into() });
        }
        if n < 4 {
            return Err(Error::NotASphere(format!("only {n} vertices")));
        }

        let mut edge_faces: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, f) in sorted.iter().enumerate() {
            for (a, b) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
                edge_faces.entry((a, b)).or_default().push(i);
            }
        }
        let mut edges: Vec<_> = edge_faces.iter().collect();
        edges.sort_unstable_by_key(|(e, _)| **e);
        for (&(a, b), fs) in &edges {
            if fs.len() != 2 {
                return Err(Error::NotASphere(format!(
                    "edge {{{a},{b}}} lies in {} face(s), expected 2",
                    fs.len()
                )));
            }
        }
        let mut used = vec![false; n];
        for v in sorted.iter().flatten() {
            used[*v] = true;
        }
        if let Some(v) = used.iter().position(|u| !u) {
            return Err(Error::NotASphere(format!("vertex {v} lies in no face")));
        }

        let oriented = orient(&sorted, &edge_faces)?;
        let rotation = rotation_from_oriented(n, &oriented)?;

        let euler = n as i64 - edge_faces.len() as i64 + sorted.len() as i64;
        if euler != 2 {
            return Err(Error::NotASphere(format!("Euler characteristic is {euler}, expected 2")));
        }

        let mut pairs: Vec<(Face, Face)> = sorted.into_iter().zip(oriented).collect();
        pairs.sort_unstable();
        let (faces, oriented) = pairs.into_iter().unzip();

        let words = n.div_ceil(64);
        let mut adjacency = vec![0u64; n * words];
        for (v, nbrs) in rotation.iter().enumerate() {
            for &u in nbrs {
                adjacency[v * words + u / 64] |= 1 << (u % 64);
            }
        }
        Ok(Triangulation { n, faces, oriented, rotation, adjacency, words })
    }

    /// Builds a triangulation from a rotation system: every pair of
    /// cyclically consecutive neighbours of a vertex spans a face.
    pub fn from_rotation(rotation: &[Vec<usize>]) -> Result<Self> {
        let mut faces = Vec::new();
        for (v, nbrs) in rotation.iter().enumerate() {
            for (i, &a) in nbrs.iter().enumerate() {
                let b = nbrs[(i + 1) % nbrs.len()];
                let mut f = [v, a, b];
                f.sort_unstable();
                faces.push(f);
            }
        }
        faces.sort_unstable();
        faces.dedup();
        let t = Self::from_faces(&faces)?;
        if t.n != rotation.len() {
            return Err(Error::NotASphere("rotation system has isolated vertices".into()));
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Faces as sorted triples, in lexicographic order.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Faces with a coherent orientation, parallel to [`Self::faces`].
    pub fn oriented_faces(&self) -> &[Face] {
        &self.oriented
    }

    /// Cyclic neighbour order around `v`, starting at its smallest neighbour.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotation_system(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rotation.iter().map(Vec::len).collect()
    }

    pub fn edge_count(&self) -> usize {
        3 * self.n - 6
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Edges as `[u, v]` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<[usize; 2]> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (v, nbrs) in self.rotation.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&u| u > v).map(|&u| [v, u]));
        }
        out.sort_unstable();
        out
    }

    /// Neighbour bitmasks, one per vertex. Only available for `n <= 64`.
    pub fn adjacency_masks(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| self.adjacency.clone())
    }

    pub fn has_face(&self, face: &Face) -> bool {
        let mut f = *face;
        f.sort_unstable();
        self.faces.binary_search(&f).is_ok()
    }

    /// Number of connected components of the subgraph induced by `subset`.
    /// Zero for the empty set.
    pub fn induced_component_count(&self, subset: &[usize]) -> usize {
        let mut inside = vec![false; self.n];
        for &v in subset {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = Vec::new();
        let mut count = 0;
        for &s in subset {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &u in &self.rotation[v] {
                    if inside[u] && !seen[u] {
                        seen[u] = true;
                        stack.push(u);
                    }
                }
            }
        }
        count
    }

    /// Relabels vertices: `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let faces: Vec<Face> = self.faces.iter().map(|f| [perm[f[0]], perm[f[1]], perm[f[2]]]).collect();
        Self::from_faces(&faces)
    }

    pub fn canonical_code(&self) -> CanonicalCode {
        canonical_rotation_code(&self.rotation).0
    }

    /// The representative of this isomorphism class whose labels follow the
    /// canonical traversal. Isomorphic inputs give identical outputs.
    pub fn canonical_form(&self) -> Self {
        let (_, labels) = canonical_rotation_code(&self.rotation);
        self.relabel(&labels).expect("relabeling preserves validity")
    }
}

/// Isomorphism (reflections included) via canonical codes.
pub fn are_isomorphic(a: &Triangulation, b: &Triangulation) -> bool {
    a.n == b.n && a.faces.len() == b.faces.len() && a.canonical_code() == b.canonical_code()
}

fn orient(faces: &[Face], edge_faces: &HashMap<(usize, usize), Vec<usize>>) -> Result<Vec<Face>> {
    let mut oriented: Vec<Option<Face>> = vec![None; faces.len()];
    oriented[0] = Some(faces[0]);
    let mut queue = vec![0];
    while let Some(f) = queue.pop() {
        let o = oriented[f].unwrap();
        for k in 0..3 {
            let (x, y) = (o[k], o[(k + 1) % 3]);
            let key = (x.min(y), x.max(y));
            let g = edge_faces[&key].iter().copied().find(|&g| g != f).unwrap();
            match oriented[g] {
                None => {
                    let z = faces[g].iter().copied().find(|&z| z != x && z != y).unwrap();
                    oriented[g] = Some([y, x, z]);
                    queue.push(g);
                }
                Some(og) => {
                    if !has_directed_edge(&og, y, x) {
                        return Err(Error::NotASphere("faces cannot be oriented coherently".into()));
                    }
                }
            }
        }
    }
    oriented
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::NotASphere("complex is disconnected".into()))
}

fn has_directed_edge(f: &[usize], x: usize, y: usize) -> bool {
    (0..f.len()).any(|k| f[k] == x && f[(k + 1) % f.len()] == y)
}

/// Derives the neighbour cycle of every vertex from coherently oriented
/// polygons. A corner `p -> v -> q` contributes the step `q -> p` around `v`.
pub(crate) fn rotation_from_oriented<F: AsRef<[usize]>>(n: usize, oriented: &[F]) -> Result<Vec<Vec<usize>>> {
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for face in oriented {
        let f = face.as_ref();
        let len = f.len();
        for k in 0..len {
            let (p, v, q) = (f[(k + len - 1) % len], f[k], f[(k + 1) % len]);
            succ[v].push((q, p));
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for (v, steps) in succ.iter_mut().enumerate() {
        steps.sort_unstable();
        if steps.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::NotASphere(format!("link of vertex {v} is not a single cycle")));
        }
        let start = steps[0].0;
        let mut cycle = vec![start];
        let mut cur = start;
        loop {
            let next = match steps.binary_search_by_key(&cur, |s| s.0) {
                Ok(i) => steps[i].1,
                Err(_) => return Err(Error::NotASphere(format!("link of vertex {v} is not a cycle"))),
            };
            if next == start {
                break;
            }
            if cycle.len() > steps.len() {
                return Err(Error::NotASphere(format!("link of vertex {v} is not a single cycle")));
            }
            cycle.push(next);
            cur = next;
        }
        if cycle.len() != steps.len() {
            return Err(Error::NotASphere(format!("link of vertex {v} is not a single cycle")));
        }
        rotation.push(cycle);
    }
    Ok(rotation)
}
