//! Canonical codes for rotation systems.
//!
//! A 3-connected planar map has a unique embedding up to reflection, so a
//! breadth-first code of its rotation system, minimised over every starting
//! directed edge and both orientations, is a complete isomorphism invariant.
//!
//! Code layout: `[n, block_1, 0, block_2, 0, ..., block_n, 0]` where block `k`
//! lists the labels of the neighbours of the vertex labelled `k`, in rotation
//! order starting from the neighbour through which it was discovered. Labels
//! are assigned in discovery order starting at 1.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

use super::triangulation::Triangulation;

/// Byte string identifying a map up to isomorphism (reflections included).
/// Codes order by vertex count first because byte 0 is `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn vertex_count(&self) -> usize {
        self.0.first().copied().unwrap_or(0) as usize
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        hex::decode(s).map(CanonicalCode).map_err(|e| Error::InvalidCode(e.to_string()))
    }

    /// Rebuilds the triangulation in canonical labelling (label `k` becomes
    /// vertex `k - 1`).
    pub fn decode(&self) -> Result<Triangulation> {
        let rotation = self.decode_rotation()?;
        Triangulation::from_rotation(&rotation)
    }

    fn decode_rotation(&self) -> Result<Vec<Vec<usize>>> {
        let (&n, body) = self.0.split_first().ok_or_else(|| Error::InvalidCode("empty code".into()))?;
        let n = n as usize;
        if body.last() != Some(&0) {
            return Err(Error::InvalidCode("code does not end with a separator".into()));
        }
        let blocks: Vec<&[u8]> = body[..body.len() - 1].split(|&b| b == 0).collect();
        if blocks.len() != n {
            return Err(Error::InvalidCode(format!("expected {n} blocks, found {}", blocks.len())));
        }
        blocks
            .iter()
            .map(|blk| {
                blk.iter()
                    .map(|&l| {
                        let l = l as usize;
                        if l == 0 || l > n {
                            Err(Error::InvalidCode(format!("label {l} out of range")))
                        } else {
                            Ok(l - 1)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Decodes and re-encodes, failing unless the code is the canonical code
    /// of the triangulation it describes.
    pub fn decode_verified(&self) -> Result<Triangulation> {
        let t = self.decode()?;
        if &t.canonical_code() != self {
            return Err(Error::InvalidCode("code is not in canonical form".into()));
        }
        Ok(t)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

struct Scratch {
    label: Vec<u8>,
    parent: Vec<usize>,
    queue: Vec<usize>,
    out: Vec<u8>,
}

/// Returns the minimal code and, for each vertex, its 0-based canonical label.
pub(crate) fn canonical_rotation_code(rotation: &[Vec<usize>]) -> (CanonicalCode, Vec<usize>) {
    let n = rotation.len();
    assert!(n < 255, "canonical codes support at most 254 vertices");
    // Only directed edges with the lexicographically least (deg tail, deg head)
    // may start a traversal; the restriction is isomorphism invariant.
    let key = |v: usize, w: usize| (rotation[v].len(), rotation[w].len());
    let best_key = (0..n)
        .flat_map(|v| rotation[v].iter().map(move |&w| (v, w)))
        .map(|(v, w)| key(v, w))
        .min()
        .expect("non-empty rotation system");

    let mut scratch =
        Scratch { label: vec![0; n], parent: vec![0; n], queue: Vec::with_capacity(n), out: Vec::new() };
    let mut best: Vec<u8> = Vec::new();
    let mut best_labels: Vec<u8> = Vec::new();
    for v in 0..n {
        for &w in &rotation[v] {
            if key(v, w) != best_key {
                continue;
            }
            for forward in [true, false] {
                let improved = traverse(rotation, v, w, forward, &mut scratch, (!best.is_empty()).then_some(&best[..]));
                if improved {
                    std::mem::swap(&mut best, &mut scratch.out);
                    best_labels.clone_from(&scratch.label);
                }
            }
        }
    }
    let labels = best_labels.iter().map(|&l| l as usize - 1).collect();
    (CanonicalCode(best), labels)
}

/// Writes the traversal code into `scratch.out`. Returns true when the code is
/// strictly smaller than `best` (or `best` is absent); aborts early otherwise.
fn traverse(
    rotation: &[Vec<usize>],
    start: usize,
    first: usize,
    forward: bool,
    s: &mut Scratch,
    best: Option<&[u8]>,
) -> bool {
    let n = rotation.len();
    s.label.iter_mut().for_each(|l| *l = 0);
    s.queue.clear();
    s.out.clear();
    let mut ord = if best.is_some() { Ordering::Equal } else { Ordering::Less };

    macro_rules! emit {
        ($b:expr) => {{
            let b: u8 = $b;
            if ord == Ordering::Equal {
                match b.cmp(&best.unwrap()[s.out.len()]) {
                    Ordering::Greater => return false,
                    Ordering::Less => ord = Ordering::Less,
                    Ordering::Equal => {}
                }
            }
            s.out.push(b);
        }};
    }

    emit!(n as u8);
    s.label[start] = 1;
    s.parent[start] = first;
    s.queue.push(start);
    let mut next_label = 2u8;
    let mut head = 0;
    while head < s.queue.len() {
        let u = s.queue[head];
        head += 1;
        let nbrs = &rotation[u];
        let d = nbrs.len();
        let pos = nbrs.iter().position(|&x| x == s.parent[u]).expect("parent is a neighbour");
        for t in 0..d {
            let idx = if forward { (pos + t) % d } else { (pos + d - t) % d };
            let x = nbrs[idx];
            if s.label[x] == 0 {
                s.label[x] = next_label;
                next_label += 1;
                s.parent[x] = u;
                s.queue.push(x);
            }
            emit!(s.label[x]);
        }
        emit!(0);
    }
    ord == Ordering::Less
}
