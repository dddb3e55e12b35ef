//! Isomorph-free enumeration of sphere triangulations, a persistent census
//! database, rigidity classification and exhaustive checks of the structural
//! results about `b_{n-3}` and `b_{n-4}`.

mod db;
mod enumerate;
mod oracle;
mod rigidity;
mod verify;

pub use db::{CensusDatabase, CensusRecord};
pub use enumerate::{enumerate, enumerate_layers, enumerate_with, extend_layer, EnumerateOptions, DEFAULT_CAP};
pub use oracle::{enumerate_oracle, ORACLE_CAP};
pub use rigidity::{classify_rigidity, BettiClass, RigidityReport};
pub use verify::{
    verify_theorems, ClaimResult, ClaimStatus, VerificationReport, Witness, CLAIM_IDS, REFERENCE_IRREDUCIBLE_BN4,
};
