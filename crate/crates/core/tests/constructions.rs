mod common;

use common::*;
use proptest::prelude::*;
use sphere_rigidity::belts::{find_belts, is_irreducible};
use sphere_rigidity::betti::{betti_sweep, bound_second};
use sphere_rigidity::constructions::*;
use sphere_rigidity::sphere::are_isomorphic;
use sphere_rigidity::{Error, PolyhedralSphere, Triangulation};

fn dual_triangulation(p: &PolyhedralSphere) -> Triangulation {
    p.dual().to_triangulation().unwrap()
}

#[test]
fn platonic_sizes() {
    let sizes: Vec<(usize, usize)> = Platonic::ALL
        .iter()
        .map(|p| {
            let s = p.build().to_polyhedral();
            (s.n(), s.face_count())
        })
        .collect();
    assert_eq!(sizes, vec![(4, 4), (6, 8), (12, 20), (8, 6), (20, 12)]);
    assert!(matches!(platonic("X9"), Err(Error::UnknownName(_))));
    assert_eq!("I12".parse::<Platonic>().unwrap().to_string(), "I12");
}

#[test]
fn bipyramid_is_dual_prism() {
    for n in 5..=14 {
        let b = bipyramid(n).unwrap();
        assert!(are_isomorphic(&b, &dual_triangulation(&prism(n - 2).unwrap())));
        let mut deg = b.degrees();
        deg.sort_unstable();
        let mut expected = vec![4; n - 2];
        expected.extend([n - 2, n - 2]);
        expected.sort_unstable();
        assert_eq!(deg, expected);
    }
    assert!(bipyramid(4).is_err());
}

#[test]
fn semi_bipyramid_is_dual_edge_cut_prism() {
    for n in 8..=14 {
        let s = semi_bipyramid(n).unwrap();
        assert_eq!(s.n(), n);
        assert!(are_isomorphic(&s, &dual_triangulation(&edge_cut_prism(n - 3).unwrap())));
    }
    assert!(semi_bipyramid(7).is_err());
}

#[test]
fn semi_bipyramid_reaches_second_bound() {
    for n in 8..=14 {
        let s = semi_bipyramid(n).unwrap();
        assert!(is_irreducible(&s));
        assert_eq!(betti_sweep(&s).unwrap().from_top(4), bound_second(n).unwrap());
    }
}

/// Removes the edge from `apex` to equator vertex `c` of `B_{n-1}` and
/// inserts a degree-4 vertex adjacent to `apex`, `c` and both neighbours of `c`.
fn insert_on_apex_edge(b: &Triangulation, apex: usize, c: usize) -> Triangulation {
    let ring = b.rotation(apex);
    let pos = ring.iter().position(|&x| x == c).unwrap();
    let d = ring.len();
    let (prev, next) = (ring[(pos + d - 1) % d], ring[(pos + 1) % d]);
    let z = b.n();
    let mut faces: Vec<[usize; 3]> =
        b.faces().iter().copied().filter(|f| !(f.contains(&apex) && f.contains(&c))).collect();
    faces.extend([[z, apex, prev], [z, prev, c], [z, c, next], [z, next, apex]]);
    Triangulation::from_faces(&faces).unwrap()
}

#[test]
fn semi_bipyramid_apex_edge_choice() {
    for n in 8..=12 {
        let expected = semi_bipyramid(n).unwrap().canonical_code();
        let b = bipyramid(n - 1).unwrap();
        for apex in (0..b.n()).filter(|&v| b.degree(v) == n - 3) {
            for &c in b.rotation(apex) {
                assert_eq!(insert_on_apex_edge(&b, apex, c).canonical_code(), expected, "n={n} apex={apex} c={c}");
            }
        }
    }
}

#[test]
fn subdivision_counts() {
    for p in Platonic::ALL {
        let s = p.build().to_polyhedral();
        let x1 = subdivide_first(&s);
        assert_eq!(x1.n(), s.n() + s.face_count());
        let x2 = subdivide_second(&s);
        assert_eq!(x2.n(), s.n() + s.edge_count() + s.face_count());
        assert_eq!(x2.faces().len(), 4 * s.edge_count());
    }
}

#[test]
fn subdivision_identities() {
    let solid = |p: Platonic| p.build().to_polyhedral();
    let (t4, o6, i12, c8, d20) =
        (solid(Platonic::T4), solid(Platonic::O6), solid(Platonic::I12), solid(Platonic::C8), solid(Platonic::D20));
    assert!(are_isomorphic(&subdivide_second(&t4), &subdivide_first(&c8)));
    assert!(are_isomorphic(&subdivide_second(&c8), &subdivide_second(&o6)));
    assert!(are_isomorphic(&subdivide_second(&d20), &subdivide_second(&i12)));
    for s in [&t4, &o6, &i12] {
        assert!(!is_irreducible(&subdivide_first(s)));
    }
    assert!(is_irreducible(&subdivide_first(&c8)));
}

#[test]
fn tetrahedron_splits_give_the_five_vertex_bipyramid() {
    let t4 = tetrahedron();
    let b5 = bipyramid(5).unwrap();
    for v in 0..4 {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert!(are_isomorphic(&vertex_split(&t4, v, i, j).unwrap(), &b5));
        }
    }
    let o6 = octahedron();
    let splits: Vec<_> = (0..5)
        .flat_map(|v| {
            let d = b5.degree(v);
            (0..d).flat_map(move |i| (i + 1..d).map(move |j| (v, i, j)))
        })
        .map(|(v, i, j)| vertex_split(&b5, v, i, j).unwrap())
        .collect();
    assert!(splits.iter().any(|s| are_isomorphic(s, &o6)));
    assert!(matches!(vertex_split(&t4, 0, 2, 1), Err(Error::InvalidSplit(_))));
}

#[test]
fn named_constructions() {
    assert_eq!(construct_named("bipyramid:9").unwrap().n(), 9);
    assert_eq!(construct_named("prism:5").unwrap().n(), 10);
    assert_eq!(construct_named("xi2:C8").unwrap().n(), 26);
    assert_eq!(construct_named("D20").unwrap().n(), 20);
    assert!(matches!(construct_named("wedge:4"), Err(Error::UnknownName(_))));
    assert!(construct_named("bipyramid:x").is_err());
}

#[test]
fn family_lists_pairs_once() {
    let family = necessary_family(9);
    assert_eq!(family.len(), 27);
    assert!(family.iter().all(|p| p.p1.n() >= 4 && p.p2.n() >= 4));
    assert_eq!(family.iter().filter(|p| p.first == "O6" && p.second == "T4").count(), 0);
    assert_eq!(family.iter().filter(|p| p.first == "T4" && p.second == "O6").count(), 1);
}

#[test]
fn splits_of_nine_vertex_spheres_reach_every_ten_vertex_sphere() {
    let ten: Vec<_> = layer(10).iter().map(Triangulation::canonical_code).collect();
    let mut reached = std::collections::BTreeSet::new();
    for t in layer(9) {
        for v in 0..t.n() {
            let d = t.degree(v);
            for i in 0..d {
                for j in i + 1..d {
                    reached.insert(vertex_split(&t, v, i, j).unwrap().canonical_code());
                }
            }
        }
    }
    assert_eq!(reached.into_iter().collect::<Vec<_>>(), {
        let mut s = ten;
        s.sort();
        s
    });
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn contract_undoes_split(t in sphere_strategy(6), v in 0usize..64, a in 0usize..64, b in 0usize..64) {
        let v = v % t.n();
        let d = t.degree(v);
        let (i, j) = (a % d, b % d);
        prop_assume!(i != j);
        let s = vertex_split(&t, v, i.min(j), i.max(j)).unwrap();
        prop_assert_eq!(s.n(), t.n() + 1);
        let back = contract_edge(&s, v, t.n()).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn contracting_a_separating_triangle_edge_fails(t in sphere_strategy(6)) {
        prop_assume!(t.n() >= 5);
        for belt in find_belts(&t, 3).unwrap() {
            let [a, b] = [belt.vertices()[0], belt.vertices()[1]];
            prop_assert!(contract_edge(&t, a, b).is_err());
        }
    }
}
