use knotcert::algebra::{homology, HomologyKind};
use knotcert::bistellar::{parse_trace, reduce, replay, write_trace, FrozenFaces, ReduceConfig};
use knotcert::catalog::{load_entry, CatalogName};
use knotcert::{Face, SimplicialComplex};

fn knot_edges() -> FrozenFaces {
    FrozenFaces::new([Face::from([1, 2]), Face::from([1, 3]), Face::from([2, 3])])
}

fn assert_invariants_along(start: &SimplicialComplex, trace: &[knotcert::bistellar::FlipMove]) {
    let expected = homology(start, HomologyKind::Reduced);
    let chi = start.euler_characteristic();
    let states = replay(start, trace).unwrap();
    let stride = (states.len() / 20).max(1);
    for (i, s) in states.iter().enumerate() {
        assert_eq!(s.euler_characteristic(), chi, "step {i}");
        if i % stride == 0 || i + 1 == states.len() {
            assert_eq!(homology(s, HomologyKind::Reduced), expected, "step {i}");
        }
    }
}

#[test]
fn frozen_knot_survives_reduction() {
    let s17 = load_entry(CatalogName::S3_17_74);
    for seed in 0..3 {
        let cfg = ReduceConfig { budget: 1_000_000, frozen: knot_edges(), ..ReduceConfig::with_seed(seed) };
        let r = reduce(&s17, &cfg);
        let c = &r.complex;
        assert!(c.num_vertices() <= 17);
        for e in knot_edges().faces() {
            assert!(c.has_face(e), "seed {seed} lost {e:?}");
        }
        assert!(!c.has_face(&Face::from([1, 2, 3])));
        assert_eq!(c.pseudomanifold_status(), knotcert::Pseudomanifold::Closed);
        assert_invariants_along(&s17, &r.trace);
    }
}

#[test]
fn unfrozen_reduction_reaches_simplex_boundary() {
    let s17 = load_entry(CatalogName::S3_17_74);
    let r = reduce(&s17, &ReduceConfig::with_seed(0));
    assert!(r.is_simplex_boundary(), "{:?}", r.complex.f_vector());
    assert_invariants_along(&s17, &r.trace);
}

#[test]
fn same_seed_gives_same_trace() {
    let s13 = load_entry(CatalogName::S3_13_56);
    let a = reduce(&s13, &ReduceConfig::with_seed(4));
    let b = reduce(&s13, &ReduceConfig::with_seed(4));
    assert_eq!(a.trace, b.trace);
    assert_eq!(a.complex, b.complex);
}

#[test]
fn trace_file_round_trips() {
    let s13 = load_entry(CatalogName::S3_13_56);
    let cfg = ReduceConfig { frozen: knot_edges(), ..ReduceConfig::with_seed(1) };
    let r = reduce(&s13, &cfg);
    let text = write_trace(&cfg, &r.trace);
    let parsed = parse_trace(&text).unwrap();
    assert_eq!(parsed.moves, r.trace);
    assert_eq!(parsed.frozen_faces(), cfg.frozen);
    assert_eq!(replay(&s13, &parsed.moves).unwrap().last().unwrap(), &r.complex);
}
