//! Exact combinatorics of simplicial 2-spheres, i.e. boundary complexes of
//! 3-dimensional simplicial polytopes.
//!
//! The crate is organised around a validated [`Triangulation`] type:
//!
//! * [`sphere`]: triangulations, polyhedral spheres, duality, canonical codes.
//! * [`betti`]: special graded Betti numbers `b_k`, the full graded table via
//!   Hochster's formula, and closed forms for bipyramids and connected sums.
//! * [`belts`]: k-belts and reducibility.
//! * [`surgery`]: connected sums, splitting along 3-belts, decomposition.
//! * [`constructions`]: Platonic solids, bipyramids, prisms, subdivisions.
//! * [`census`]: isomorph-free enumeration, rigidity classification and
//!   machine checks of the structural results about `b_{n-4}`.

pub mod belts;
pub mod betti;
pub mod census;
pub mod combinatorics;
pub mod constructions;
pub mod error;
pub mod sphere;
pub mod surgery;
mod parallel;
mod union_find;

pub use error::{Error, Result};
pub use sphere::{CanonicalCode, Face, PolyhedralSphere, Polytope, Triangulation};
