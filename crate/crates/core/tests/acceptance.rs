//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use itertools::Itertools;
use sphere_rigidity::belts::is_irreducible;
use sphere_rigidity::betti::*;
use sphere_rigidity::census::*;
use sphere_rigidity::combinatorics::{binomial, delta};
use sphere_rigidity::constructions::*;
use sphere_rigidity::surgery::{all_connected_sums, connected_sum, Gluing};
use sphere_rigidity::{CanonicalCode, Triangulation};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn betti(t: &Triangulation) -> BettiVector {
    betti_sweep(t).expect("within sweep cap")
}

fn layer(db: &CensusDatabase, n: usize) -> Vec<Triangulation> {
    db.layer(n).expect("complete layer").iter().map(CensusRecord::triangulation).collect()
}

fn stacked_six() -> Triangulation {
    let t4 = tetrahedron();
    let b5 = bipyramid(5).unwrap();
    connected_sum(&b5, &t4, &Gluing::new(b5.faces()[0], [0, 1, 2], 0)).unwrap()
}

fn irreducible_catalog(db: &CensusDatabase) -> Check {
    let counts: Vec<usize> = (4..=9).map(|n| db.layer(n).unwrap().iter().filter(|r| r.irreducible).count()).collect();
    let expected_counts = [1, 0, 1, 1, 2, 5];
    let multisets: BTreeMap<usize, Vec<i64>> = (4..=9)
        .map(|n| {
            let vals = db.layer(n).unwrap().iter().filter(|r| r.irreducible).map(|r| r.b_from_top(4)).sorted().rev();
            (n, vals.collect())
        })
        .collect();
    let listed: [(usize, &[i64]); 5] = [(4, &[-1]), (5, &[]), (6, &[3]), (7, &[5]), (8, &[9, 5])];
    for (n, want) in listed {
        ensure(multisets[&n] == want, || format!("n={n}: computed {:?}, listed {want:?}", multisets[&n]))?;
    }
    ensure(counts[..5] == expected_counts[..5], || format!("irreducible counts n=4..8: {:?}", &counts[..5]))?;
    let nine: Vec<&CensusRecord> = db.layer(9).unwrap().iter().filter(|r| r.irreducible).collect();
    let max = nine.iter().map(|r| r.b_from_top(4)).max().unwrap();
    let at_max: Vec<_> = nine.iter().filter(|r| r.b_from_top(4) == max).collect();
    ensure(max == 14 && at_max.len() == 1 && at_max[0].code == bipyramid(9).unwrap().canonical_code(), || {
        format!("n=9 maximum {max} attained {} times", at_max.len())
    })?;
    let report = verify_theorems(db, 9, 9, &["irreducible-catalog"]).unwrap();
    let claim = report.get("irreducible-catalog").unwrap();
    println!("  n=9 discrepancy report: {}", claim.summary);
    for w in &claim.witnesses {
        println!("    witness n={} code={}: {}", w.n, w.code, w.note);
    }
    Ok(format!(
        "counts n=4..9 {:?} (listed {:?}); n=4..8 multisets as listed; n=9 {:?} with max 14 only at B9",
        counts, expected_counts, multisets[&9]
    ))
}

fn bipyramid_closed_form() -> Check {
    for n in 5..=14 {
        let v = betti(&bipyramid(n).unwrap());
        for k in 0..=n - 3 {
            let formula = bipyramid_b(n, k).unwrap();
            ensure(formula == v.get(k as i64), || format!("n={n} k={k}: formula {formula}, sweep {}", v.get(k as i64)))?;
        }
    }
    Ok("n=5..14, every k <= n-3".into())
}

/// All gluings of all pairs from the n <= 8 census (which contains T4, O6 and
/// B5..B8), plus chained sums of up to four irreducibles with n <= 12.
fn gluing_independence(db: &CensusDatabase) -> Check {
    let summands: Vec<Triangulation> = (4..=8).flat_map(|n| layer(db, n)).collect();
    let vectors: Vec<BettiVector> = summands.iter().map(betti).collect();
    let irreducible: Vec<bool> = summands.iter().map(|t| t.n() == 4 || is_irreducible(t)).collect();
    let mut sums = 0usize;
    let mut swept: BTreeMap<CanonicalCode, BettiVector> = BTreeMap::new();
    let mut eq4 = 0usize;
    for i in 0..summands.len() {
        for j in i..summands.len() {
            let (p, q) = (&summands[i], &summands[j]);
            let expected = connected_sum_vector(&vectors[i], p.n(), &vectors[j], q.n(), 3);
            let n = p.n() + q.n() - 3;
            for &f1 in p.faces() {
                for &f2 in q.faces() {
                    for m in 0..6 {
                        let s = connected_sum(p, q, &Gluing::new(f1, f2, m)).unwrap();
                        let code = s.canonical_code();
                        let v = swept.entry(code).or_insert_with(|| betti(&s));
                        sums += 1;
                        ensure(*v == expected, || format!("{} # {} gluing {f1:?} {f2:?} {m}", i, j))?;
                    }
                }
            }
            // two-summand specialization with an irreducible second summand
            for (a, b, second_irreducible) in [(i, j, irreducible[j]), (j, i, irreducible[i])] {
                if !second_irreducible || n > 12 {
                    continue;
                }
                let (ba, bb) = (&vectors[a], &vectors[b]);
                let (n1, n2) = (summands[a].n() as i64, summands[b].n() as i64);
                let value = ba.get(n1 - 4) + bb.get(n2 - 4) + (n2 - 3) * ba.get(n1 - 3) + (n as i64 - 3);
                ensure(value == expected.get(n as i64 - 4), || format!("two-summand b_(n-4) for {a} # {b}"))?;
                eq4 += 1;
            }
        }
    }

    let irr: Vec<(Triangulation, i64)> = summands
        .iter()
        .zip(&vectors)
        .zip(&irreducible)
        .filter(|(_, &irr)| irr)
        .map(|((t, v), _)| (t.clone(), v.from_top(4)))
        .collect();
    let mut chained = 0usize;
    let mut frontier: Vec<(Triangulation, Vec<i64>)> = irr.iter().map(|(t, b)| (t.clone(), vec![*b])).collect();
    for _ in 2..=4 {
        let mut next: BTreeMap<(CanonicalCode, Vec<i64>), Triangulation> = BTreeMap::new();
        for (q, parts) in &frontier {
            for (p, b) in &irr {
                if q.n() + p.n() - 3 > 12 {
                    continue;
                }
                for s in all_connected_sums(q, p) {
                    let mut key = parts.clone();
                    key.push(*b);
                    key.sort_unstable();
                    next.entry((s.canonical_code(), key)).or_insert(s);
                }
            }
        }
        for ((_, parts), s) in &next {
            let v = betti(s);
            let n = s.n();
            ensure(multiway_bn4(parts, n) == v.from_top(4), || format!("multiway formula on n={n} sum of {parts:?}"))?;
            ensure(v.from_top(3) == parts.len() as i64 - 1, || format!("b_(n-3) on n={n} sum of {parts:?}"))?;
            chained += 1;
        }
        frontier = next.into_iter().map(|((_, parts), s)| (s, parts)).collect();
    }
    Ok(format!(
        "{sums} gluings ({} distinct spheres) match the sum formula; {eq4} two-summand checks; {chained} chained sums with l <= 4",
        swept.len()
    ))
}

fn hochster_duality(db: &CensusDatabase) -> Check {
    let mut checked = 0;
    for n in 4..=7 {
        for t in layer(db, n) {
            let b = betti(&t);
            for field in [Coefficients::Two, Coefficients::LargePrime] {
                let table = hochster_table(&t, field).map_err(|e| e.to_string())?;
                let beta = |i: usize, j: usize| table.get(i, j) as i64;
                for i in 1..=n - 2 {
                    ensure(beta(i - 1, i) == b.get(i as i64), || format!("beta_(i-1,i) at n={n} i={i}"))?;
                }
                for i in 2..=n - 1 {
                    ensure(beta(i - 2, i) == b.get((n - i) as i64), || format!("beta_(i-2,i) at n={n} i={i}"))?;
                }
                ensure(beta(n - 3, n) == 1, || format!("beta_(n-3,n) at n={n}"))?;
                for i in 0..=n {
                    for j in i + 3..n {
                        ensure(beta(i, j) == 0, || format!("beta_({i},{j}) at n={n}"))?;
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (sphere, field) tables for n=4..7"))
}

fn maximum_bound(db: &CensusDatabase) -> Check {
    let mut notes = Vec::new();
    for n in 4..=10 {
        let irr: Vec<&CensusRecord> = db.layer(n).unwrap().iter().filter(|r| r.irreducible).collect();
        let Some(max) = irr.iter().map(|r| r.b_from_top(4)).max() else {
            notes.push(format!("n={n} vacuous"));
            continue;
        };
        let bound = bound_f(n).unwrap();
        let extremal = if n == 4 { tetrahedron() } else { bipyramid(n).unwrap() }.canonical_code();
        let at_max: Vec<_> = irr.iter().filter(|r| r.b_from_top(4) == max).collect();
        ensure(max == bound, || format!("n={n}: max {max}, bound {bound}"))?;
        ensure(at_max.len() == 1 && at_max[0].code == extremal, || format!("n={n}: maximum not unique to the bipyramid"))?;
        notes.push(format!("n={n} {max}"));
    }
    Ok(notes.join(", "))
}

fn named_rigidity(db: &CensusDatabase) -> Check {
    let reports: BTreeMap<usize, RigidityReport> = (4..=12).map(|n| (n, classify_rigidity(db, n).unwrap())).collect();
    let t4 = tetrahedron();
    let o6 = octahedron();
    let mut named: Vec<(String, Vec<Triangulation>)> = Vec::new();
    for n in 5..=12 {
        named.push((format!("B{n}"), vec![bipyramid(n).unwrap()]));
    }
    for n in 8..=12 {
        named.push((format!("semi{n}"), vec![semi_bipyramid(n).unwrap()]));
    }
    named.push(("T4#T4".into(), all_connected_sums(&t4, &t4)));
    named.push(("T4#T4#T4".into(), vec![stacked_six()]));
    named.push(("T4#O6".into(), all_connected_sums(&t4, &o6)));
    named.push(("O6#O6".into(), all_connected_sums(&o6, &o6)));
    for n in 6..=11 {
        named.push((format!("T4#B{n}"), all_connected_sums(&t4, &bipyramid(n).unwrap())));
    }
    for n in 6..=9 {
        named.push((format!("O6#B{n}"), all_connected_sums(&o6, &bipyramid(n).unwrap())));
    }
    named.push(("I12".into(), vec![icosahedron()]));
    let count = named.len();
    for (name, spheres) in named {
        for t in spheres {
            let rigid = reports[&t.n()].is_rigid(&t.canonical_code());
            ensure(rigid == Some(true), || format!("{name} (n={}) rigid = {rigid:?}", t.n()))?;
        }
    }
    Ok(format!("{count} named spheres rigid in their census layer"))
}

fn long_sums_not_rigid(db: &CensusDatabase) -> Check {
    let stacked = stacked_six().canonical_code();
    let mut checked = 0;
    for n in 7..=10 {
        let report = classify_rigidity(db, n).unwrap();
        for r in db.layer(n).unwrap().iter().filter(|r| r.leaves.len() >= 3 && r.code != stacked) {
            let size = report.class_of(&r.code).map_or(0, |c| c.members.len());
            ensure(size >= 2, || format!("n={n} code {} with {} summands is rigid", r.code, r.leaves.len()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} sums of at least three irreducibles, n=7..10"))
}

fn b2_determines_n(db: &CensusDatabase) -> Check {
    let mut checked = 0;
    for n in 4..=10 {
        for r in db.layer(n).unwrap() {
            let got = vertices_from_b2(r.betti.get(2)).map_err(|e| e.to_string())?;
            ensure(got == n, || format!("code {}: b2 gives {got}", r.code))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} census spheres, n=4..10"))
}

fn subdivisions() -> Check {
    let solid = |p: Platonic| p.build().to_polyhedral();
    let same = |a: Triangulation, b: Triangulation| a.canonical_code() == b.canonical_code();
    ensure(same(subdivide_second(&solid(Platonic::T4)), subdivide_first(&solid(Platonic::C8))), || "xi2(T4) vs xi1(C8)".into())?;
    ensure(same(subdivide_second(&solid(Platonic::C8)), subdivide_second(&solid(Platonic::O6))), || "xi2(C8) vs xi2(O6)".into())?;
    ensure(same(subdivide_second(&solid(Platonic::D20)), subdivide_second(&solid(Platonic::I12))), || "xi2(D20) vs xi2(I12)".into())?;
    for p in [Platonic::T4, Platonic::O6, Platonic::I12] {
        ensure(!is_irreducible(&subdivide_first(&solid(p))), || format!("xi1({p}) is irreducible"))?;
    }
    Ok("three identities by canonical code; xi1 of T4, O6, I12 reducible".into())
}

fn census_integrity(db: &CensusDatabase) -> Check {
    let mut counts = Vec::new();
    for n in 4..=ORACLE_CAP {
        let fast: BTreeSet<CanonicalCode> = enumerate(n).unwrap().iter().map(Triangulation::canonical_code).collect();
        let slow: BTreeSet<CanonicalCode> = enumerate_oracle(n).unwrap().iter().map(Triangulation::canonical_code).collect();
        ensure(fast == slow, || format!("n={n}: enumeration {} vs oracle {}", fast.len(), slow.len()))?;
        counts.push(fast.len());
    }
    ensure(counts == [1, 1, 2, 5, 14], || format!("counts {counts:?}"))?;
    let again = CensusDatabase::build(12, &EnumerateOptions { threads: 0, ..Default::default() }).unwrap();
    ensure(again.to_text() == db.to_text(), || "rebuilt database differs".into())?;
    Ok(format!("oracle counts {counts:?}; independent n<=12 builds byte-identical"))
}

fn f(n: i64) -> i64 {
    bound_f(n as usize).unwrap()
}

fn compositions(parts: usize, total: i64) -> Vec<Vec<i64>> {
    if parts == 1 {
        return if total >= 4 { vec![vec![total]] } else { vec![] };
    }
    (4..=total - 4 * (parts as i64 - 1))
        .flat_map(|first| {
            compositions(parts - 1, total - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn sum_bound_arithmetic(db: &CensusDatabase) -> Check {
    for n in 5..=30i64 {
        for m in n..=30 {
            let ok = if (m, n) == (6, 6) {
                f(m) + f(n) < f(m + 2) + f(n - 2)
            } else {
                f(m) + f(n) < f(m + 1) + f(n - 1)
            };
            ensure(ok, || format!("exchange inequality at m={m} n={n}"))?;
        }
    }
    let mut sequences = 0;
    for n in 4..=14i64 {
        for l in 1..=5usize {
            let li = l as i64;
            let bound = binomial(n - 2, 2) as i64 - n * li + li * (li + 3) / 2 + delta(li, n - 5);
            for c in compositions(l, n + 3 * (li - 1)) {
                let s: i64 = c.iter().map(|&x| f(x)).sum();
                let extremal = c.iter().filter(|&&x| x == 4).count() + 1 >= l && c.contains(&(n - li + 1));
                ensure(s <= bound && (s == bound) == extremal, || format!("n={n} sequence {c:?}: {s} vs {bound}"))?;
                sequences += 1;
            }
        }
    }
    let report = verify_theorems(db, 4, 10, &["multi-sum-bn4-bound"]).unwrap();
    let claim = report.get("multi-sum-bn4-bound").unwrap();
    ensure(claim.status == ClaimStatus::Verified, || claim.summary.clone())?;
    Ok(format!("exchange inequality m,n <= 30; {sequences} sequences n<=14, l<=5; sums n<=10: {}", claim.summary))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let db = CensusDatabase::build(12, &EnumerateOptions { threads: 1, ..Default::default() }).expect("census to 12");
    println!("census n=4..12 built: {} spheres in {:.1?}", db.records().len(), start.elapsed());

    let criteria: Vec<(&str, Box<dyn Fn() -> Check + '_>)> = vec![
        ("irreducible catalog n=4..9", Box::new(|| irreducible_catalog(&db))),
        ("bipyramid closed form", Box::new(bipyramid_closed_form)),
        ("gluing independence", Box::new(|| gluing_independence(&db))),
        ("graded table duality", Box::new(|| hochster_duality(&db))),
        ("irreducible maximum", Box::new(|| maximum_bound(&db))),
        ("named rigid spheres", Box::new(|| named_rigidity(&db))),
        ("long sums not rigid", Box::new(|| long_sums_not_rigid(&db))),
        ("b2 determines n", Box::new(|| b2_determines_n(&db))),
        ("subdivision identities", Box::new(subdivisions)),
        ("census integrity", Box::new(|| census_integrity(&db))),
        ("sum bound arithmetic", Box::new(|| sum_bound_arithmetic(&db))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = check();
        let elapsed = t.elapsed();
        match result {
            Ok(detail) => println!("PASS {:>2} {name} ({elapsed:.1?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({elapsed:.1?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
