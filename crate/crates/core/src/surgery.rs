//! Connected sums, splitting along 3-belts, and decomposition into
//! irreducible summands.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::belts::{find_belts, is_belt};
use crate::error::{Error, Result};
use crate::sphere::{CanonicalCode, Face, Triangulation};

/// The six bijections of a 3-set, indexed `0..6`.
pub const MATCHINGS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// How two spheres are glued: `face1[i]` is identified with
/// `face2[MATCHINGS[matching][i]]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Gluing {
    pub face1: Face,
    pub face2: Face,
    pub matching: usize,
}

impl Gluing {
    pub fn new(face1: Face, face2: Face, matching: usize) -> Self {
        Gluing { face1, face2, matching }
    }
}

/// Removes the two glued faces and identifies their vertices. Vertices of
/// `p1` keep their ids; the remaining vertices of `p2` follow as
/// `n1, n1 + 1, ...` in increasing order.
pub fn connected_sum(p1: &Triangulation, p2: &Triangulation, g: &Gluing) -> Result<Triangulation> {
    let perm = MATCHINGS.get(g.matching).ok_or_else(|| Error::InvalidGluing(format!("matching index {} is not in 0..6", g.matching)))?;
    if !p1.has_face(&g.face1) {
        return Err(Error::InvalidGluing(format!("{:?} is not a face of the first summand", g.face1)));
    }
    if !p2.has_face(&g.face2) {
        return Err(Error::InvalidGluing(format!("{:?} is not a face of the second summand", g.face2)));
    }
    let mut image = vec![usize::MAX; p2.n()];
    for i in 0..3 {
        image[g.face2[perm[i]]] = g.face1[i];
    }
    let mut next = p1.n();
    for slot in image.iter_mut().filter(|x| **x == usize::MAX) {
        *slot = next;
        next += 1;
    }
    let mut f1 = g.face1;
    f1.sort_unstable();
    let mut f2 = g.face2;
    f2.sort_unstable();
    let mut faces: Vec<Face> = p1.faces().iter().copied().filter(|f| *f != f1).collect();
    faces.extend(p2.faces().iter().filter(|f| **f != f2).map(|f| f.map(|v| image[v])));
    Triangulation::from_faces(&faces)
}

/// Every connected sum up to isomorphism, in canonical labelling, sorted by
/// canonical code.
pub fn all_connected_sums(p1: &Triangulation, p2: &Triangulation) -> Vec<Triangulation> {
    all_connected_sum_codes(p1, p2)
        .into_iter()
        .map(|c| c.decode().expect("codes of valid sums decode"))
        .collect()
}

/// Canonical codes of every connected sum, sorted.
pub fn all_connected_sum_codes(p1: &Triangulation, p2: &Triangulation) -> Vec<CanonicalCode> {
    let pairs: Vec<(Face, Face)> =
        p1.faces().iter().flat_map(|&a| p2.faces().iter().map(move |&b| (a, b))).collect();
    let codes: BTreeSet<CanonicalCode> = pairs
        .par_iter()
        .flat_map_iter(|&(a, b)| {
            (0..6).map(move |m| {
                connected_sum(p1, p2, &Gluing::new(a, b, m)).expect("gluing along faces is valid").canonical_code()
            })
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    codes.into_iter().collect()
}

/// Cuts along a 3-belt. Both parts carry the belt triangle as a face with the
/// belt vertices relabelled `0, 1, 2` in increasing order; the remaining
/// vertices follow in increasing order. The part containing the smallest
/// non-belt vertex comes first.
pub fn split(t: &Triangulation, belt: &[usize]) -> Result<(Triangulation, Triangulation)> {
    if belt.len() != 3 || !is_belt(t, belt) {
        return Err(Error::NotABelt(belt.to_vec()));
    }
    let mut b = [belt[0], belt[1], belt[2]];
    b.sort_unstable();
    let n = t.n();
    let mut side = vec![usize::MAX; n];
    for &v in &b {
        side[v] = 2;
    }
    let mut sides = 0;
    for s in 0..n {
        if side[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        side[s] = sides;
        while let Some(v) = stack.pop() {
            for &u in t.rotation(v) {
                if side[u] == usize::MAX {
                    side[u] = sides;
                    stack.push(u);
                }
            }
        }
        sides += 1;
    }
    debug_assert_eq!(sides, 2, "a 3-belt has exactly two sides");
    let part = |which: usize| {
        let mut label = vec![usize::MAX; n];
        for (i, &v) in b.iter().enumerate() {
            label[v] = i;
        }
        let mut next = 3;
        for v in 0..n {
            if side[v] == which {
                label[v] = next;
                next += 1;
            }
        }
        let mut faces: Vec<Face> = t
            .faces()
            .iter()
            .filter(|f| f.iter().all(|&v| side[v] == which || side[v] == 2))
            .map(|f| f.map(|v| label[v]))
            .collect();
        faces.push([0, 1, 2]);
        Triangulation::from_faces(&faces)
    };
    Ok((part(0)?, part(1)?))
}

/// Binary record of the splits performed by [`decompose`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DecompositionTree {
    Leaf { code: CanonicalCode, n: usize },
    Split { belt: Vec<usize>, n: usize, parts: Box<[DecompositionTree; 2]> },
}

impl DecompositionTree {
    /// Leaf codes, sorted.
    pub fn leaves(&self) -> Vec<CanonicalCode> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out.sort();
        out
    }

    fn collect_leaves(&self, out: &mut Vec<CanonicalCode>) {
        match self {
            DecompositionTree::Leaf { code, .. } => out.push(code.clone()),
            DecompositionTree::Split { parts, .. } => parts.iter().for_each(|p| p.collect_leaves(out)),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 1,
            DecompositionTree::Split { parts, .. } => parts.iter().map(DecompositionTree::leaf_count).sum(),
        }
    }
}

/// Splits at the lexicographically least 3-belt until every part is
/// irreducible.
pub fn decompose(t: &Triangulation) -> DecompositionTree {
    let belts = find_belts(t, 3).unwrap_or_default();
    match belts.first() {
        None => DecompositionTree::Leaf { code: t.canonical_code(), n: t.n() },
        Some(belt) => {
            let (a, b) = split(t, belt.vertices()).expect("found belts split");
            DecompositionTree::Split {
                belt: belt.vertices().to_vec(),
                n: t.n(),
                parts: Box::new([decompose(&a), decompose(&b)]),
            }
        }
    }
}

/// Leaf multisets reachable by every possible order of 3-belt choices.
/// Exponential; meant for small spheres.
pub fn leaf_multisets_all_orders(t: &Triangulation) -> BTreeSet<Vec<CanonicalCode>> {
    let mut memo = BTreeMap::new();
    all_orders(t, &mut memo)
}

fn all_orders(
    t: &Triangulation,
    memo: &mut BTreeMap<CanonicalCode, BTreeSet<Vec<CanonicalCode>>>,
) -> BTreeSet<Vec<CanonicalCode>> {
    let code = t.canonical_code();
    if let Some(found) = memo.get(&code) {
        return found.clone();
    }
    let belts = find_belts(t, 3).unwrap_or_default();
    let mut result = BTreeSet::new();
    if belts.is_empty() {
        result.insert(vec![code.clone()]);
    }
    for belt in &belts {
        let (a, b) = split(t, belt.vertices()).expect("found belts split");
        let left = all_orders(&a, memo);
        let right = all_orders(&b, memo);
        for l in &left {
            for r in &right {
                let mut m: Vec<CanonicalCode> = l.iter().chain(r).cloned().collect();
                m.sort();
                result.insert(m);
            }
        }
    }
    memo.insert(code, result.clone());
    result
}
