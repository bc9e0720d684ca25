mod common;

use common::brute_force_s3_homs;
use knotcert::catalog::{load_entry, CatalogName};
use knotcert::knot::{
    certify_nonconstructible, complement_presentation, count_homs, find_candidate_triangles, Certification,
    FiniteGroup, GroupPresentation, KnotConfig,
};
use knotcert::{Face, SimplicialComplex};
use num_bigint::BigInt;

fn triangle() -> Face {
    Face::from([1, 2, 3])
}

#[test]
fn trefoil_oracle_enumerates_all_36_pairs() {
    // <x, y | x y x = y x y>
    let trefoil = GroupPresentation::new(2, vec![vec![1, 2, 1, -2, -1, -2]]);
    assert_eq!(brute_force_s3_homs(&trefoil), 12);
}

#[test]
fn s13_complement_has_twelve_s3_homs() {
    let s13 = load_entry(CatalogName::S3_13_56);
    let p = complement_presentation(&s13, &triangle(), 1).unwrap();
    let n = count_homs(&p, &FiniteGroup::symmetric3(), 8).unwrap();
    assert_eq!(n, 12);
    assert_eq!(n as usize, brute_force_s3_homs(&p));
    assert_eq!(p.abelianization(), (1, Vec::<BigInt>::new()));
}

#[test]
fn catalog_knots_are_certified_on_123() {
    let cfg = KnotConfig::default();
    for name in [CatalogName::S3_13_56, CatalogName::S3_17_74, CatalogName::B3_12_37_A, CatalogName::B3_12_37_B] {
        let c = load_entry(name);
        let Certification::Certified { witness, sphere, consequences } = certify_nonconstructible(&c, &cfg).unwrap()
        else {
            panic!("{} not certified", name.as_str());
        };
        assert_eq!(witness.cycle, triangle(), "{}", name.as_str());
        assert!(consequences.non_constructible);
        let group = FiniteGroup::builtin(&witness.group).unwrap();
        assert!(witness.check(&sphere, &group));
    }
}

#[test]
fn certificate_is_invariant_under_relabeling() {
    let s13 = load_entry(CatalogName::S3_13_56);
    let shift = s13.vertices().into_iter().map(|v| (v, v + 100)).collect();
    let moved = s13.relabel(&shift);
    let p = complement_presentation(&moved, &Face::from([101, 102, 103]), 1).unwrap();
    let s3 = FiniteGroup::symmetric3();
    assert_eq!(count_homs(&p, &s3, 8).unwrap(), 12);
    assert_eq!(p.abelianization().0, 1);
}

#[test]
fn unknotted_triangle_has_abelian_image_only() {
    // Stellar subdivision of the triangle 123 in the boundary of the 4-simplex
    // leaves an unknotted empty triangle.
    let s = SimplicialComplex::simplex_boundary([1, 2, 3, 4, 5]);
    let sub = SimplicialComplex::new(s.facets().iter().flat_map(|f| {
        if triangle().is_subset(f) {
            triangle().ridges().map(|r| r.union(&f.difference(&triangle())).with(6)).collect::<Vec<_>>()
        } else {
            vec![f.clone()]
        }
    }))
    .unwrap();
    assert!(!sub.has_face(&triangle()));
    assert!(find_candidate_triangles(&sub).contains(&triangle()));
    let p = complement_presentation(&sub, &triangle(), 1).unwrap();
    assert_eq!(p.abelianization(), (1, Vec::<BigInt>::new()));
    assert_eq!(count_homs(&p, &FiniteGroup::symmetric3(), 8).unwrap(), 6);
}
