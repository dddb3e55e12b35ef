use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::belts::find_belts;
use crate::betti::{betti_sweep, bound_f, bound_multi, bound_second, multiway_bn4, vertices_from_b2};
use crate::constructions::{
    bipyramid, cube, dodecahedron, icosahedron, octahedron, semi_bipyramid, subdivide_first, subdivide_second,
    tetrahedron,
};
use crate::error::{Error, Result};
use crate::sphere::{symmetry_class, CanonicalCode, SymmetryClass, Triangulation};
use crate::surgery::{all_connected_sum_codes, all_connected_sums, connected_sum, decompose, Gluing};

use super::db::{CensusDatabase, CensusRecord};
use super::rigidity::{classify_rigidity, RigidityReport};

pub const CLAIM_IDS: [&str; 13] = [
    "b2-determines-n",
    "belt3-equals-sum-length",
    "belt4-equals-bn4-irreducible",
    "irreducible-bn4-maximum",
    "irreducible-bn4-second",
    "multiway-bn4-formula",
    "multi-sum-bn4-bound",
    "irreducible-catalog",
    "named-rigid-polytopes",
    "long-sums-not-rigid",
    "rigid-reducible-family",
    "rigid-sum-unique",
    "unique-sum-face-types",
];

/// Published multisets of `b_{n-4}` over irreducible spheres, `n = 4..=9`.
pub const REFERENCE_IRREDUCIBLE_BN4: [(usize, &[i64]); 6] =
    [(4, &[-1]), (5, &[]), (6, &[3]), (7, &[5]), (8, &[9, 5]), (9, &[14, 12, 8, 6, 3])];

/// Largest summand vertex total used by `unique-sum-face-types`.
const FACE_TYPE_PAIR_LIMIT: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Verified,
    Violated,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Verified => "verified",
            ClaimStatus::Violated => "violated",
        })
    }
}

/// A concrete sphere backing a violation (or, for catalog discrepancies, a
/// member of the surplus).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: usize,
    pub code: String,
    pub note: String,
}

impl Witness {
    fn new(code: &CanonicalCode, note: impl Into<String>) -> Self {
        Witness { n: code.vertex_count(), code: code.to_hex(), note: note.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub n_min: usize,
    pub n_max: usize,
    pub status: ClaimStatus,
    pub summary: String,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claims: Vec<ClaimResult>,
}

impl VerificationReport {
    pub fn all_verified(&self) -> bool {
        self.claims.iter().all(|c| c.status == ClaimStatus::Verified)
    }

    pub fn get(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.claims {
            writeln!(f, "claim {} n={}..{}: {}: {}", c.id, c.n_min, c.n_max, c.status, c.summary)?;
            for w in &c.witnesses {
                writeln!(f, "  witness n={} code={}: {}", w.n, w.code, w.note)?;
            }
        }
        Ok(())
    }
}

/// Runs the requested claims over the census layers `n_min..=n_max`. Every
/// layer in the range must be complete.
pub fn verify_theorems(db: &CensusDatabase, n_min: usize, n_max: usize, claims: &[&str]) -> Result<VerificationReport> {
    if let Some(bad) = claims.iter().find(|c| !CLAIM_IDS.contains(c)) {
        return Err(Error::UnknownName(bad.to_string()));
    }
    for n in n_min..=n_max {
        db.layer(n)?;
    }
    let ctx = Context::new(db, n_min, n_max)?;
    let claims = claims
        .iter()
        .map(|&id| {
            let mut out = Outcome::default();
            match id {
                "b2-determines-n" => ctx.b2_determines_n(&mut out),
                "belt3-equals-sum-length" => ctx.belt3(&mut out),
                "belt4-equals-bn4-irreducible" => ctx.belt4(&mut out),
                "irreducible-bn4-maximum" => ctx.maximum(&mut out),
                "irreducible-bn4-second" => ctx.second(&mut out),
                "multiway-bn4-formula" => ctx.multiway(&mut out),
                "multi-sum-bn4-bound" => ctx.multi_bound(&mut out),
                "irreducible-catalog" => ctx.catalog(&mut out),
                "named-rigid-polytopes" => ctx.named_rigid(&mut out),
                "long-sums-not-rigid" => ctx.long_sums(&mut out),
                "rigid-reducible-family" => ctx.family(&mut out),
                "rigid-sum-unique" => ctx.rigid_unique(&mut out),
                "unique-sum-face-types" => ctx.face_types(&mut out),
                _ => unreachable!(),
            }
            let (lo, hi) = out.range.unwrap_or((n_min, n_max));
            ClaimResult {
                id: id.to_string(),
                n_min: lo,
                n_max: hi,
                status: if out.violated { ClaimStatus::Violated } else { ClaimStatus::Verified },
                summary: out.notes.join("; "),
                witnesses: out.witnesses,
            }
        })
        .collect();
    Ok(VerificationReport { claims })
}

#[derive(Default)]
struct Outcome {
    violated: bool,
    notes: Vec<String>,
    witnesses: Vec<Witness>,
    range: Option<(usize, usize)>,
}

impl Outcome {
    fn fail(&mut self, code: &CanonicalCode, note: impl Into<String>) {
        self.violated = true;
        self.witnesses.push(Witness::new(code, note));
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

struct Context<'a> {
    db: &'a CensusDatabase,
    lo: usize,
    hi: usize,
    rigidity: BTreeMap<usize, RigidityReport>,
    t4: CanonicalCode,
    o6: CanonicalCode,
    i12: CanonicalCode,
    stacked6: CanonicalCode,
}

impl<'a> Context<'a> {
    fn new(db: &'a CensusDatabase, lo: usize, hi: usize) -> Result<Self> {
        let rigidity = (lo..=hi).map(|n| Ok((n, classify_rigidity(db, n)?))).collect::<Result<_>>()?;
        let t4 = tetrahedron();
        let b5 = bipyramid(5)?;
        let stacked6 = connected_sum(&b5, &t4, &Gluing::new(b5.faces()[0], t4.faces()[0], 0))?.canonical_code();
        Ok(Context {
            db,
            lo,
            hi,
            rigidity,
            t4: t4.canonical_code(),
            o6: octahedron().canonical_code(),
            i12: icosahedron().canonical_code(),
            stacked6,
        })
    }

    fn records(&self) -> impl Iterator<Item = &'a CensusRecord> + '_ {
        (self.lo..=self.hi).flat_map(|n| self.db.layer(n).expect("checked layers").iter())
    }

    fn class_size(&self, r: &CensusRecord) -> usize {
        self.rigidity[&r.n].class_of(&r.code).map_or(0, |c| c.members.len())
    }

    /// `b_{n-4}` of a summand, from the census when present.
    fn leaf_bn4(&self, code: &CanonicalCode) -> i64 {
        match self.db.find(code) {
            Some(r) => r.b_from_top(4),
            None => betti_sweep(&code.decode().expect("leaf codes decode")).expect("small leaf").from_top(4),
        }
    }

    fn is_bipyramid(code: &CanonicalCode) -> bool {
        let n = code.vertex_count();
        n >= 5 && bipyramid(n).map(|b| &b.canonical_code() == code).unwrap_or(false)
    }

    fn b2_determines_n(&self, out: &mut Outcome) {
        let mut checked = 0;
        for r in self.records() {
            checked += 1;
            if vertices_from_b2(r.betti.get(2)).ok() != Some(r.n) {
                out.fail(&r.code, format!("b2 = {} does not give n = {}", r.betti.get(2), r.n));
            }
        }
        out.note(format!("{checked} spheres checked"));
    }

    fn belt3(&self, out: &mut Outcome) {
        let mut checked = 0;
        for r in self.records() {
            checked += 1;
            let t = r.triangulation();
            let belts = find_belts(&t, 3).map_or(0, |b| b.len()) as i64;
            let leaves = decompose(&t).leaf_count() as i64;
            if belts != r.b_from_top(3) || leaves != belts + 1 {
                out.fail(&r.code, format!("3-belts {belts}, leaves {leaves}, b_(n-3) = {}", r.b_from_top(3)));
            }
        }
        out.note(format!("{checked} spheres checked"));
    }

    fn belt4(&self, out: &mut Outcome) {
        let mut checked = 0;
        for r in self.records().filter(|r| r.irreducible && r.n >= 6) {
            checked += 1;
            let belts = find_belts(&r.triangulation(), 4).expect("n >= 6").len() as i64;
            if belts != r.b_from_top(4) {
                out.fail(&r.code, format!("4-belts {belts}, b_(n-4) = {}", r.b_from_top(4)));
            }
        }
        out.note(format!("{checked} irreducible spheres checked"));
    }

    fn maximum(&self, out: &mut Outcome) {
        for n in self.lo..=self.hi {
            let irr: Vec<&CensusRecord> = self.db.layer(n).unwrap().iter().filter(|r| r.irreducible).collect();
            let Some(max) = irr.iter().map(|r| r.b_from_top(4)).max() else {
                out.note(format!("n={n}: no irreducible spheres"));
                continue;
            };
            let expected = bound_f(n).expect("n >= 4");
            let extremal = if n == 4 { self.t4.clone() } else { bipyramid(n).unwrap().canonical_code() };
            let at_max: Vec<&CensusRecord> = irr.iter().copied().filter(|r| r.b_from_top(4) == max).collect();
            out.note(format!("n={n}: max {max}, bound {expected}, attained by {}", at_max.len()));
            if max != expected {
                for r in &at_max {
                    out.fail(&r.code, format!("b_(n-4) = {max} but the bound is {expected}"));
                }
            }
            for r in at_max.iter().filter(|r| r.code != extremal) {
                out.fail(&r.code, "attains the maximum but is not the bipyramid");
            }
        }
    }

    fn second(&self, out: &mut Outcome) {
        for n in self.lo.max(5)..=self.hi {
            let bip = bipyramid(n).unwrap().canonical_code();
            let rest: Vec<&CensusRecord> =
                self.db.layer(n).unwrap().iter().filter(|r| r.irreducible && r.code != bip).collect();
            let Some(max) = rest.iter().map(|r| r.b_from_top(4)).max() else {
                out.note(format!("n={n}: no irreducible non-bipyramids"));
                continue;
            };
            let bound = bound_second(n).expect("n >= 4");
            out.note(format!("n={n}: max {max}, bound {bound}"));
            let semi = (n >= 8).then(|| semi_bipyramid(n).unwrap().canonical_code());
            for r in &rest {
                let v = r.b_from_top(4);
                if v > bound {
                    out.fail(&r.code, format!("b_(n-4) = {v} exceeds {bound} by {}", v - bound));
                } else if v == bound && Some(&r.code) != semi.as_ref() {
                    out.fail(&r.code, format!("attains {bound} but is not the semi-bipyramid"));
                }
            }
            if let Some(semi) = semi {
                match rest.iter().find(|r| r.code == semi) {
                    Some(r) if r.b_from_top(4) == bound => {}
                    Some(r) => out.fail(&r.code, format!("semi-bipyramid has b_(n-4) = {}", r.b_from_top(4))),
                    None => out.fail(&semi, "semi-bipyramid is not an irreducible census member"),
                }
            }
        }
    }

    fn multiway(&self, out: &mut Outcome) {
        let mut checked = 0;
        for r in self.records().filter(|r| !r.irreducible) {
            checked += 1;
            let values: Vec<i64> = r.leaves.iter().map(|c| self.leaf_bn4(c)).collect();
            let predicted = multiway_bn4(&values, r.n);
            if predicted != r.b_from_top(4) {
                out.fail(&r.code, format!("formula gives {predicted}, sweep gives {}", r.b_from_top(4)));
            }
        }
        out.note(format!("{checked} reducible spheres checked"));
    }

    fn multi_bound(&self, out: &mut Outcome) {
        let mut checked = 0;
        let mut equal = 0;
        for r in self.records().filter(|r| !r.irreducible && r.leaves.len() + 4 <= r.n) {
            checked += 1;
            let l = r.leaves.len();
            let bound = bound_multi(r.n, l).expect("l <= n - 4");
            let value = r.b_from_top(4);
            let tetrahedra = r.leaves.iter().filter(|c| **c == self.t4).count();
            let extremal = tetrahedra == l - 1 && r.leaves.iter().any(|c| c.vertex_count() >= 6 && Self::is_bipyramid(c));
            if value > bound {
                out.fail(&r.code, format!("b_(n-4) = {value} exceeds {bound} with {l} summands"));
            } else if (value == bound) != extremal {
                out.fail(&r.code, format!("equality {} but bipyramid-plus-tetrahedra {}", value == bound, extremal));
            }
            equal += usize::from(value == bound);
        }
        out.note(format!("{checked} sums with l <= n-4 checked, {equal} attain the bound"));
    }

    fn catalog(&self, out: &mut Outcome) {
        let (lo, hi) = (self.lo.max(4), self.hi.min(9));
        out.range = Some((lo, hi));
        for &(n, reference) in REFERENCE_IRREDUCIBLE_BN4.iter().filter(|(n, _)| (lo..=hi).contains(n)) {
            let irr: Vec<&CensusRecord> = self.db.layer(n).unwrap().iter().filter(|r| r.irreducible).collect();
            let computed: Vec<i64> = irr.iter().map(|r| r.b_from_top(4)).sorted().rev().collect();
            let counts = |vals: &[i64]| vals.iter().copied().counts();
            let (have, want) = (counts(&computed), counts(reference));
            let keys: BTreeSet<i64> = have.keys().chain(want.keys()).copied().collect();
            let mut diffs = Vec::new();
            for v in keys.into_iter().rev() {
                let d = *have.get(&v).unwrap_or(&0) as i64 - *want.get(&v).unwrap_or(&0) as i64;
                if d != 0 {
                    diffs.push(format!("{v}:{d:+}"));
                    for r in irr.iter().filter(|r| d > 0 && r.b_from_top(4) == v) {
                        out.fail(&r.code, format!("b_(n-4) = {v} computed more often than listed ({d:+})"));
                    }
                    if d < 0 {
                        out.violated = true;
                        // reducible spheres of minimum degree 4 are the likely source of a surplus listing
                        for r in self.db.layer(n).unwrap().iter().filter(|r| {
                            !r.irreducible && r.b_from_top(4) == v && r.triangulation().degrees().iter().all(|&x| x >= 4)
                        }) {
                            out.witnesses.push(Witness::new(
                                &r.code,
                                format!("listed value {v} is attained only by this reducible sphere with {} summands", r.leaves.len()),
                            ));
                        }
                    }
                }
            }
            let listed = reference.iter().join(",");
            let found = computed.iter().join(",");
            if diffs.is_empty() {
                out.note(format!("n={n}: {} irreducible, {{{found}}} as listed", irr.len()));
            } else {
                out.note(format!(
                    "n={n}: computed {{{found}}} vs listed {{{listed}}}, signed discrepancy {}",
                    diffs.join(" ")
                ));
            }
        }
    }

    fn named_rigid(&self, out: &mut Outcome) {
        let t4 = tetrahedron();
        let o6 = octahedron();
        let mut named: Vec<(String, Vec<Triangulation>)> = Vec::new();
        for n in 5..=self.hi {
            named.push((format!("B{n}"), vec![bipyramid(n).unwrap()]));
        }
        for n in 8..=self.hi {
            named.push((format!("semi{n}"), vec![semi_bipyramid(n).unwrap()]));
        }
        named.push(("T4#T4".into(), all_connected_sums(&t4, &t4)));
        named.push(("T4#T4#T4".into(), vec![self.stacked6.decode().unwrap()]));
        named.push(("T4#O6".into(), all_connected_sums(&t4, &o6)));
        named.push(("O6#O6".into(), all_connected_sums(&o6, &o6)));
        for n in 6..self.hi {
            named.push((format!("T4#B{n}"), all_connected_sums(&t4, &bipyramid(n).unwrap())));
        }
        for n in 6..=self.hi.saturating_sub(3) {
            named.push((format!("O6#B{n}"), all_connected_sums(&o6, &bipyramid(n).unwrap())));
        }
        named.push(("I12".into(), vec![icosahedron()]));
        let mut checked = Vec::new();
        for (name, spheres) in named {
            let in_range: Vec<&Triangulation> = spheres.iter().filter(|t| (self.lo..=self.hi).contains(&t.n())).collect();
            if in_range.is_empty() {
                continue;
            }
            for t in in_range {
                let code = t.canonical_code();
                match self.rigidity[&t.n()].class_of(&code) {
                    Some(c) if c.is_rigid() => {}
                    Some(c) => out.fail(&code, format!("{name} shares its Betti vector with {} others", c.members.len() - 1)),
                    None => out.fail(&code, format!("{name} is missing from the census")),
                }
            }
            checked.push(name);
        }
        out.note(format!("checked {}", checked.join(", ")));
    }

    fn long_sums(&self, out: &mut Outcome) {
        let mut checked = 0;
        for r in self.records().filter(|r| r.leaves.len() >= 3 && r.code != self.stacked6) {
            checked += 1;
            if self.class_size(r) < 2 {
                out.fail(&r.code, format!("{} summands but rigid", r.leaves.len()));
            }
        }
        out.note(format!("{checked} sums of at least 3 irreducibles checked"));
    }

    fn rigid_reducible(&self) -> Vec<&'a CensusRecord> {
        self.records().filter(|r| !r.irreducible && self.class_size(r) == 1).collect()
    }

    fn family(&self, out: &mut Outcome) {
        let regular = [self.t4.clone(), self.o6.clone(), self.i12.clone()];
        let mut second: BTreeSet<CanonicalCode> = regular.iter().cloned().collect();
        for solid in [cube(), dodecahedron()] {
            second.insert(subdivide_first(&solid).canonical_code());
            second.insert(subdivide_second(&solid).canonical_code());
        }
        for m in 7..=self.hi {
            second.insert(bipyramid(m).unwrap().canonical_code());
        }
        let rigid = self.rigid_reducible();
        for r in &rigid {
            let ok = r.code == self.stacked6
                || (r.leaves.len() == 2
                    && ((regular.contains(&r.leaves[0]) && second.contains(&r.leaves[1]))
                        || (regular.contains(&r.leaves[1]) && second.contains(&r.leaves[0]))));
            if !ok {
                out.fail(&r.code, format!("rigid sum of {} summands outside the candidate family", r.leaves.len()));
            }
        }
        out.note(format!("{} rigid reducible spheres checked", rigid.len()));
    }

    fn rigid_unique(&self, out: &mut Outcome) {
        let rigid = self.rigid_reducible();
        let mut checked = 0;
        for r in rigid.iter().filter(|r| r.leaves.len() == 2) {
            checked += 1;
            let a = r.leaves[0].decode().unwrap();
            let b = r.leaves[1].decode().unwrap();
            let sums = all_connected_sum_codes(&a, &b);
            if sums != [r.code.clone()] {
                out.fail(&r.code, format!("rigid, yet its summands glue into {} classes", sums.len()));
            }
        }
        out.note(format!("{checked} rigid two-summand spheres checked"));
    }

    fn face_types(&self, out: &mut Outcome) {
        let mut gens: Vec<(String, Triangulation)> =
            vec![("T4".into(), tetrahedron()), ("O6".into(), octahedron()), ("I12".into(), icosahedron())];
        for n in 7..=FACE_TYPE_PAIR_LIMIT - 4 {
            gens.push((format!("B{n}"), bipyramid(n).unwrap()));
        }
        for n in 8..=FACE_TYPE_PAIR_LIMIT - 4 {
            gens.push((format!("semi{n}"), semi_bipyramid(n).unwrap()));
        }
        let classes: Vec<SymmetryClass> = gens.iter().map(|(_, t)| symmetry_class(t)).collect();
        let (mut pairs, mut unique, mut converse_holds, mut converse_pairs) = (0, 0, 0, 0);
        for i in 0..gens.len() {
            for j in i..gens.len() {
                if gens[i].1.n() + gens[j].1.n() > FACE_TYPE_PAIR_LIMIT {
                    continue;
                }
                pairs += 1;
                let sums = all_connected_sum_codes(&gens[i].1, &gens[j].1);
                let (ci, cj) = (classes[i], classes[j]);
                let typed = (ci == SymmetryClass::Regular && cj.is_face_transitive())
                    || (cj == SymmetryClass::Regular && ci.is_face_transitive());
                if typed {
                    converse_pairs += 1;
                    converse_holds += usize::from(sums.len() == 1);
                }
                if sums.len() == 1 {
                    unique += 1;
                    if !typed {
                        out.fail(&sums[0], format!("{}#{} is unique without a regular/face-transitive pair", gens[i].0, gens[j].0));
                    }
                }
            }
        }
        out.range = Some((8, FACE_TYPE_PAIR_LIMIT));
        out.note(format!(
            "{pairs} generator pairs, {unique} with a unique sum; regular with face-transitive gave a unique sum in {converse_holds} of {converse_pairs}"
        ));
    }
}
