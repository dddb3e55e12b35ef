use std::collections::BTreeMap;

use serde::Serialize;

use crate::betti::{vertices_from_b2, BettiVector};
use crate::error::Result;
use crate::sphere::CanonicalCode;

use super::db::CensusDatabase;

/// Spheres sharing one Betti vector.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiClass {
    pub betti: BettiVector,
    pub members: Vec<CanonicalCode>,
}

impl BettiClass {
    pub fn is_rigid(&self) -> bool {
        self.members.len() == 1
    }
}

/// Partition of one census layer by Betti vector. A sphere is rigid when its
/// class is a singleton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigidityReport {
    pub n: usize,
    pub classes: Vec<BettiClass>,
}

impl RigidityReport {
    pub fn class_of(&self, code: &CanonicalCode) -> Option<&BettiClass> {
        self.classes.iter().find(|c| c.members.contains(code))
    }

    /// `None` when the code is not in this layer.
    pub fn is_rigid(&self, code: &CanonicalCode) -> Option<bool> {
        self.class_of(code).map(BettiClass::is_rigid)
    }

    pub fn rigid(&self) -> Vec<&CanonicalCode> {
        self.classes.iter().filter(|c| c.is_rigid()).map(|c| &c.members[0]).collect()
    }
}

/// Groups the `n`-vertex layer by Betti vector. Classes are sorted by vector,
/// members by code.
pub fn classify_rigidity(db: &CensusDatabase, n: usize) -> Result<RigidityReport> {
    let mut groups: BTreeMap<&BettiVector, Vec<CanonicalCode>> = BTreeMap::new();
    for r in db.layer(n)? {
        groups.entry(&r.betti).or_default().push(r.code.clone());
    }
    let classes = groups
        .into_iter()
        .map(|(betti, mut members)| {
            // b_2 fixes n, so a class can never mix vertex counts
            assert_eq!(vertices_from_b2(betti.get(2)).ok(), Some(n));
            members.sort();
            BettiClass { betti: betti.clone(), members }
        })
        .collect();
    Ok(RigidityReport { n, classes })
}
