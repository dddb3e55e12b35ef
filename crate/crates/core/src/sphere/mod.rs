//! Simplicial and polyhedral 2-spheres: validation, duality, canonical codes
//! and isomorphism.

mod canonical;
pub mod format;
mod polyhedral;
mod symmetry;
mod triangulation;

pub use canonical::CanonicalCode;
pub use polyhedral::PolyhedralSphere;
pub use symmetry::{face_type, symmetry_class, FaceType, SymmetryClass};
pub use triangulation::{are_isomorphic, Face, Triangulation, MAX_VERTICES};

use crate::error::Result;

/// Either kind of sphere, as read from a polytope file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Polytope {
    Simplicial(Triangulation),
    Polyhedral(PolyhedralSphere),
}

impl Polytope {
    pub fn n(&self) -> usize {
        match self {
            Polytope::Simplicial(t) => t.n(),
            Polytope::Polyhedral(p) => p.n(),
        }
    }

    pub fn as_triangulation(&self) -> Option<&Triangulation> {
        match self {
            Polytope::Simplicial(t) => Some(t),
            Polytope::Polyhedral(_) => None,
        }
    }

    pub fn as_polyhedral(&self) -> Option<&PolyhedralSphere> {
        match self {
            Polytope::Polyhedral(p) => Some(p),
            Polytope::Simplicial(_) => None,
        }
    }

    pub fn to_polyhedral(&self) -> PolyhedralSphere {
        match self {
            Polytope::Simplicial(t) => PolyhedralSphere::from(t),
            Polytope::Polyhedral(p) => p.clone(),
        }
    }

    /// Converts to a triangulation when every face is a triangle.
    pub fn to_triangulation(&self) -> Result<Triangulation> {
        match self {
            Polytope::Simplicial(t) => Ok(t.clone()),
            Polytope::Polyhedral(p) => p.to_triangulation(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Polytope::Simplicial(t) => format::write_triangulation(t),
            Polytope::Polyhedral(p) => format::write_polyhedral(p),
        }
    }
}

/// Dual of a triangulation or polyhedral sphere.
pub fn dual(p: &PolyhedralSphere) -> PolyhedralSphere {
    p.dual()
}
