//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use common::*;
use knotcert::algebra::{homology, HomologyKind, IntegerMatrix};
use knotcert::bistellar::{admissible_moves, apply_move, reduce, replay, FrozenFaces, ReduceConfig};
use knotcert::catalog::{load_entry, shield_text, thickening_text, CatalogName};
use knotcert::iso::{are_isomorphic, automorphism_group, Permutation};
use knotcert::knot::{
    certify_nonconstructible, complement_presentation, count_homs, Certification, FiniteGroup, GroupPresentation,
    KnotConfig,
};
use knotcert::moves::{cone, family_ball, family_sphere};
use knotcert::recognition::{verify_ball3, verify_sphere, verify_sphere3, RecognitionConfig};
use knotcert::shelling::{find_shelling, free_facets, is_strongly_nonshellable, ShellingResult};
use knotcert::{complex::parse_cplx, Face, SimplicialComplex};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

use CatalogName::*;

fn fvectors() -> Outcome {
    let expected: [(CatalogName, [usize; 4]); 5] = [
        (B3_16_46, [16, 75, 106, 46]),
        (S3_17_74, [17, 91, 148, 74]),
        (S3_13_56, [13, 69, 112, 56]),
        (B3_12_37_A, [12, 58, 84, 37]),
        (B3_12_37_B, [12, 58, 84, 37]),
    ];
    for (name, f) in expected {
        let got = load_entry(name).f_vector();
        ensure!(got.counts() == f, "{}: {got}", name.as_str());
    }
    Ok(())
}

fn boundary() -> Outcome {
    let b = load_entry(B3_16_46).boundary_complex();
    let listed = load_entry(Boundary28);
    ensure!(listed.num_facets() == 28, "listed boundary has {} triangles", listed.num_facets());
    ensure!(b == listed, "boundary has {} triangles", b.num_facets());
    Ok(())
}

fn identities() -> Outcome {
    let b16 = load_entry(B3_16_46);
    let s17 = load_entry(S3_17_74);
    let coned = cone(&load_entry(Boundary28), 17).map_err(|e| e.to_string())?;
    ensure!(b16.union(&coned) == s17 && s17.num_facets() == 46 + 28, "S17 is not B16 plus the cone");
    let b38 = load_entry(B3_12_38);
    let star = load_entry(Star13);
    ensure!(star.num_facets() == 18 && b38.num_facets() == 38, "38 + 18 facet counts");
    ensure!(b38.union(&star) == load_entry(S3_13_56), "S13 is not B38 plus star13");
    let shield = parse_cplx(&shield_text()).map_err(|e| e.to_string())?;
    let thick = parse_cplx(&thickening_text()).map_err(|e| e.to_string())?;
    ensure!(shield.num_facets() == 9 && thick.num_facets() == 37, "9 + 37 split");
    ensure!(shield.union(&thick) == b16, "shield plus thickening differs from B16");
    Ok(())
}

fn recognition() -> Outcome {
    let cfg = RecognitionConfig::default();
    for name in [B3_16_46, B3_12_38, B3_12_37_A, B3_12_37_B] {
        let v = verify_ball3(&load_entry(name), &cfg);
        ensure!(v.is_yes(), "{}: ball3 {}", name.as_str(), v.label());
    }
    let spheres = [
        ("S3_17_74", load_entry(S3_17_74)),
        ("S3_13_56", load_entry(S3_13_56)),
        ("boundary of 4-simplex", SimplicialComplex::simplex_boundary([1, 2, 3, 4, 5])),
    ];
    for (name, s) in spheres {
        let v = verify_sphere3(&s, &cfg);
        ensure!(v.is_yes(), "{name}: sphere3 {}", v.label());
    }
    Ok(())
}

fn free_facet_sets() -> Outcome {
    let cfg = RecognitionConfig::default();
    let free = free_facets(&load_entry(B3_12_38), &cfg).map_err(|e| e.to_string())?;
    ensure!(free == [Face::from([2, 4, 5, 7]), Face::from([3, 4, 6, 10])], "free facets {free:?}");
    for name in [B3_12_37_A, B3_12_37_B] {
        let b = load_entry(name);
        let free = free_facets(&b, &cfg).map_err(|e| e.to_string())?;
        ensure!(free.is_empty(), "{}: free facets {free:?}", name.as_str());
        ensure!(is_strongly_nonshellable(&b, &cfg) == Ok(true), "{} not strongly non-shellable", name.as_str());
        let s = find_shelling(&b, 1_000_000);
        ensure!(!matches!(s, ShellingResult::Shellable(_)), "{} found a shelling", name.as_str());
    }
    Ok(())
}

fn knots() -> Outcome {
    let trefoil = GroupPresentation::new(2, vec![vec![1, 2, 1, -2, -1, -2]]);
    let oracle = brute_force_s3_homs(&trefoil);
    ensure!(oracle == 12, "trefoil oracle gives {oracle}");
    let cfg = KnotConfig::default();
    for name in [S3_13_56, S3_17_74, B3_12_37_A, B3_12_37_B] {
        let c = load_entry(name);
        match certify_nonconstructible(&c, &cfg).map_err(|e| e.to_string())? {
            Certification::Certified { witness, sphere, .. } => {
                ensure!(witness.cycle == Face::from([1, 2, 3]), "{}: cycle {:?}", name.as_str(), witness.cycle);
                let g = FiniteGroup::builtin(&witness.group).map_err(|e| e.to_string())?;
                ensure!(witness.check(&sphere, &g), "{}: witness does not replay", name.as_str());
            }
            other => return Err(format!("{}: {other:?}", name.as_str())),
        }
    }
    let p = complement_presentation(&load_entry(S3_13_56), &Face::from([1, 2, 3]), 1).map_err(|e| e.to_string())?;
    let n = count_homs(&p, &FiniteGroup::symmetric3(), 8).map_err(|e| e.to_string())?;
    ensure!(n > 6 && n as usize == oracle, "S3 hom count {n}");
    Ok(())
}

fn isomorphism() -> Outcome {
    let (a, b) = (load_entry(B3_12_37_A), load_entry(B3_12_37_B));
    ensure!(are_isomorphic(&a, &b).is_none(), "the 37-facet balls are isomorphic");
    ensure!(are_isomorphic(&a.boundary_complex(), &b.boundary_complex()).is_some(), "boundaries differ");
    let mut r = rng(17);
    let mut pool = Vec::new();
    for i in 0..30 {
        let dim = 1 + i % 3;
        let c = random_complex(&mut r, dim, 8, 5);
        let mut perm = c.vertices();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut r);
        let map = c.vertices().into_iter().zip(perm).collect();
        pool.push(c.relabel(&map));
        pool.push(c);
    }
    for (i, x) in pool.iter().enumerate() {
        for y in &pool[i..] {
            let got = are_isomorphic(x, y);
            ensure!(got.is_some() == brute_force_isomorphic(x, y), "disagrees with oracle on {x:?} {y:?}");
            if let Some(map) = got {
                ensure!(x.relabel(&map) == *y, "map is not an isomorphism");
            }
        }
    }
    Ok(())
}

fn symmetry() -> Outcome {
    for name in [B3_16_46, S3_17_74] {
        let order = automorphism_group(&load_entry(name)).order;
        ensure!(order.is_multiple_of(3), "{}: automorphism group order {order}", name.as_str());
    }
    let p = Permutation::from_cycles(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9], &[10, 11, 12], &[13, 14, 15]]);
    ensure!(p.preserves(&load_entry(B3_16_46)), "rotation moves a facet");
    Ok(())
}

fn families() -> Outcome {
    for d in 3..=6 {
        let s = family_sphere(d).map_err(|e| e.to_string())?;
        ensure!(s.dim() == d && s.num_vertices() == d + 10, "family_sphere({d}): {}", s.f_vector());
        let b = family_ball(d).map_err(|e| e.to_string())?;
        ensure!(
            b.dim() == d && b.num_vertices() == d + 9 && b.num_facets() == 37,
            "family_ball({d}): {}",
            b.f_vector()
        );
    }
    let s4 = family_sphere(4).map_err(|e| e.to_string())?;
    let v = verify_sphere(&s4, 4, &RecognitionConfig::default()).map_err(|e| e.to_string())?;
    ensure!(v.is_yes(), "family_sphere(4): {}", v.label());
    Ok(())
}

fn preserved_along(start: &SimplicialComplex, trace: &[knotcert::bistellar::FlipMove]) -> Outcome {
    let h = homology(start, HomologyKind::Reduced);
    let chi = start.euler_characteristic();
    let states = replay(start, trace).map_err(|e| e.to_string())?;
    let stride = (states.len() / 20).max(1);
    for (i, s) in states.iter().enumerate() {
        ensure!(s.euler_characteristic() == chi, "chi changes at step {i}");
        if i % stride == 0 || i + 1 == states.len() {
            ensure!(homology(s, HomologyKind::Reduced) == h, "homology changes at step {i}");
        }
    }
    Ok(())
}

fn bistellar() -> Outcome {
    let s17 = load_entry(S3_17_74);
    let knot = FrozenFaces::new([Face::from([1, 2]), Face::from([1, 3]), Face::from([2, 3])]);
    let rcfg = RecognitionConfig::default();
    for seed in 0..3 {
        let cfg = ReduceConfig { budget: 1_000_000, frozen: knot.clone(), ..ReduceConfig::with_seed(seed) };
        let r = reduce(&s17, &cfg);
        let c = &r.complex;
        ensure!(c.num_vertices() <= 17, "seed {seed}: {} vertices", c.num_vertices());
        ensure!(knot.faces().iter().all(|e| c.has_face(e)), "seed {seed}: knot edge lost");
        ensure!(!c.has_face(&Face::from([1, 2, 3])), "seed {seed}: triangle 123 appeared");
        ensure!(verify_sphere3(c, &rcfg).is_yes(), "seed {seed}: result is not recognized as a 3-sphere");
        preserved_along(&s17, &r.trace)?;
    }
    let r = reduce(&s17, &ReduceConfig::with_seed(0));
    ensure!(r.is_simplex_boundary(), "unfrozen reduction stops at {}", r.complex.f_vector());
    preserved_along(&s17, &r.trace)
}

fn properties() -> Outcome {
    for name in [S3_13_56, S3_17_74] {
        let c = load_entry(name);
        for m in admissible_moves(&c, &FrozenFaces::none()) {
            let back = apply_move(&c, &m).and_then(|f| apply_move(&f, &m.reverse())).map_err(|e| e.to_string())?;
            ensure!(back == c, "{}: {m} is not undone", name.as_str());
        }
    }
    let mut r = rng(2024);
    let s3 = FiniteGroup::symmetric3();
    for _ in 0..100 {
        let p = random_presentation(&mut r);
        ensure!(count_homs(&p, &s3, 8) == count_homs(&p.simplify(), &s3, 8), "Tietze changes the count for {p}");
    }
    for _ in 0..100 {
        let c = random_complex(&mut r, 2, 7, 8);
        if let ShellingResult::Shellable(cert) = find_shelling(&c, 100_000) {
            let order: Vec<Vec<u32>> = cert.order.iter().map(|f| f.vertices().to_vec()).collect();
            ensure!(cert.verify(&c) && is_shelling_order(&order), "shelling does not replay on {c:?}");
        }
    }
    for _ in 0..50 {
        let rows: Vec<Vec<i64>> =
            (0..6).map(|_| (0..6).map(|_| rand::Rng::gen_range(&mut r, -20..=20)).collect()).collect();
        let a = IntegerMatrix::from_rows(&rows);
        let s = a.smith_normal_form_with_transforms();
        let (u, v) = (s.u.as_ref().unwrap(), s.v.as_ref().unwrap());
        ensure!(u.mul(&a).mul(v) == s.d, "U A V differs from D for {rows:?}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("f-vectors of the catalog complexes", fvectors),
        ("boundary of B3_16_46 is the 28 listed triangles", boundary),
        ("catalog identities", identities),
        ("ball and sphere recognition", recognition),
        ("free facets and strong non-shellability", free_facet_sets),
        ("knotted triangle certification", knots),
        ("isomorphism decisions and brute-force agreement", isomorphism),
        ("rotational symmetry", symmetry),
        ("corollary families", families),
        ("bistellar reduction contract", bistellar),
        ("property suites", properties),
    ];
    let mut failed = 0;
    for (i, (desc, check)) in criteria.into_iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {}: PASS {desc}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {desc}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
