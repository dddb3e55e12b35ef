use serde::Serialize;

use crate::error::{Error, Result};

use super::triangulation::{Face, Triangulation};

/// Sorted (descending) degrees of the three vertices of a face.
pub type FaceType = [usize; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryClass {
    /// All faces share one type `(x, x, x)`.
    Regular,
    /// All faces share one type, not of the form `(x, x, x)`.
    FaceTransitiveNotRegular,
    NotFaceTransitive,
}

impl SymmetryClass {
    pub fn is_face_transitive(self) -> bool {
        self != SymmetryClass::NotFaceTransitive
    }
}

pub fn face_type(t: &Triangulation, face: &Face) -> Result<FaceType> {
    if !t.has_face(face) {
        return Err(Error::FaceNotPresent(*face));
    }
    let mut ty = face.map(|v| t.degree(v));
    ty.sort_unstable_by(|a, b| b.cmp(a));
    Ok(ty)
}

pub fn symmetry_class(t: &Triangulation) -> SymmetryClass {
    let first = face_type(t, &t.faces()[0]).unwrap();
    if t.faces().iter().any(|f| face_type(t, f).unwrap() != first) {
        SymmetryClass::NotFaceTransitive
    } else if first[0] == first[2] {
        SymmetryClass::Regular
    } else {
        SymmetryClass::FaceTransitiveNotRegular
    }
}
