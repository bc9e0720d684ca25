mod common;

use common::*;
use knotcert::iso::are_isomorphic;
use knotcert::knot::{count_homs, FiniteGroup, GroupPresentation};
use knotcert::shelling::{find_shelling, is_constructible, Constructibility, ShellingResult};
use knotcert::{Face, SimplicialComplex};

fn small_pool() -> Vec<SimplicialComplex> {
    let mut r = rng(7);
    let mut pool = Vec::new();
    for i in 0..150 {
        let dim = 1 + i % 3;
        pool.push(random_complex(&mut r, dim, dim as u32 + 4, 6));
    }
    pool
}

#[test]
fn shelling_agrees_with_all_orders() {
    let mut shellable = 0;
    for c in small_pool() {
        let expected = brute_force_shellable(&c);
        match find_shelling(&c, 100_000) {
            ShellingResult::Shellable(cert) => {
                assert!(expected, "{c:?}");
                assert!(cert.verify(&c));
                let order: Vec<Vec<u32>> = cert.order.iter().map(|f| f.vertices().to_vec()).collect();
                assert!(is_shelling_order(&order));
                shellable += 1;
            }
            ShellingResult::NotShellable { .. } => assert!(!expected, "{c:?}"),
            ShellingResult::Unknown { .. } => panic!("budget too small for {c:?}"),
        }
    }
    assert!(shellable > 20 && shellable < 150, "pool is not varied: {shellable}");
}

#[test]
fn not_shellable_has_no_extendable_facet_removal() {
    for c in small_pool() {
        if !matches!(find_shelling(&c, 100_000), ShellingResult::NotShellable { .. }) || c.num_facets() < 2 {
            continue;
        }
        for f in c.facets() {
            let rest = SimplicialComplex::new(c.facets().iter().filter(|g| *g != f).cloned()).unwrap();
            if let ShellingResult::Shellable(cert) = find_shelling(&rest, 100_000) {
                let mut order: Vec<Vec<u32>> = cert.order.iter().map(|g| g.vertices().to_vec()).collect();
                order.push(f.vertices().to_vec());
                assert!(!is_shelling_order(&order));
            }
        }
    }
}

#[test]
fn constructibility_agrees_with_definition() {
    let mut yes = 0;
    for c in small_pool() {
        let expected = brute_force_constructible(&facet_lists(&c));
        match is_constructible(&c, 1_000_000) {
            Constructibility::Yes(tree) => {
                assert!(expected, "{c:?}");
                assert!(tree.verify(&c));
                yes += 1;
            }
            Constructibility::No => assert!(!expected, "{c:?}"),
            Constructibility::Unknown { .. } => panic!("budget too small for {c:?}"),
        }
    }
    assert!(yes > 20);
}

#[test]
fn shellable_implies_constructible() {
    for c in small_pool() {
        if matches!(find_shelling(&c, 100_000), ShellingResult::Shellable(_)) {
            assert_ne!(is_constructible(&c, 1_000_000), Constructibility::No);
        }
    }
}

#[test]
fn tetrahedron_boundary_is_constructible_by_definition() {
    let s = SimplicialComplex::simplex_boundary([1, 2, 3, 4]);
    assert!(brute_force_constructible(&facet_lists(&s)));
    let Constructibility::Yes(tree) = is_constructible(&s, 10_000) else { panic!() };
    assert!(tree.verify(&s));
}

#[test]
fn isomorphism_agrees_with_all_bijections() {
    let mut r = rng(11);
    let mut pool = Vec::new();
    for i in 0..40 {
        let dim = 1 + i % 3;
        let c = random_complex(&mut r, dim, 8, 5);
        let mut perm: Vec<u32> = c.vertices();
        use rand::seq::SliceRandom;
        perm.shuffle(&mut r);
        let map = c.vertices().into_iter().zip(perm).collect();
        pool.push(c.relabel(&map));
        pool.push(c);
    }
    let mut positives = 0;
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i..] {
            if a.dim() != b.dim() {
                continue;
            }
            let expected = brute_force_isomorphic(a, b);
            let got = are_isomorphic(a, b);
            assert_eq!(got.is_some(), expected, "{a:?} vs {b:?}");
            if let Some(map) = got {
                assert_eq!(a.relabel(&map), *b);
                positives += 1;
            }
        }
    }
    assert!(positives >= 80);
}

#[test]
fn trefoil_count_matches_enumeration_of_all_pairs() {
    let trefoil = GroupPresentation::new(2, vec![vec![1, 2, 1, -2, -1, -2]]);
    assert_eq!(brute_force_s3_homs(&trefoil), 12);
    assert_eq!(count_homs(&trefoil, &FiniteGroup::symmetric3(), 8), Ok(12));
    let square = GroupPresentation::new(1, vec![vec![1, 1]]);
    assert_eq!(brute_force_s3_homs(&square), 4);
    assert_eq!(count_homs(&square, &FiniteGroup::symmetric3(), 8), Ok(4));
    assert_eq!(brute_force_s3_homs(&GroupPresentation::new(1, vec![])), 6);
}

#[test]
fn hom_counts_agree_on_random_presentations() {
    let mut r = rng(3);
    let s3 = FiniteGroup::symmetric3();
    for _ in 0..100 {
        let p = random_presentation(&mut r);
        assert_eq!(count_homs(&p, &s3, 8).unwrap() as usize, brute_force_s3_homs(&p), "{p}");
    }
}

#[test]
fn single_facet_removal_shapes() {
    // Brute force confirms the shelling of a 3-ball obtained from a 4-simplex boundary.
    let s = SimplicialComplex::simplex_boundary([1, 2, 3, 4, 5]);
    let ball = SimplicialComplex::new(s.facets().iter().filter(|f| **f != Face::from([1, 2, 3, 4])).cloned()).unwrap();
    assert!(brute_force_shellable(&ball));
    assert!(matches!(find_shelling(&ball, 1000), ShellingResult::Shellable(_)));
}
