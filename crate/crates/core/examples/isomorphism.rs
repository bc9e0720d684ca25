//! Canonical forms, isomorphism tests and automorphism groups.

use knotcert::catalog::{load_entry, CatalogName};
use knotcert::iso::{are_isomorphic, automorphism_group, canonical_form, Permutation};

fn main() {
    let a = load_entry(CatalogName::B3_12_37_A);
    let b = load_entry(CatalogName::B3_12_37_B);
    println!("the two 37-facet balls are isomorphic: {}", are_isomorphic(&a, &b).is_some());
    if let Some(map) = are_isomorphic(&a.boundary_complex(), &b.boundary_complex()) {
        println!("their boundaries are, via {map:?}");
    }

    let ball = load_entry(CatalogName::B3_16_46);
    let auts = automorphism_group(&ball);
    println!("B3_16_46 has {} automorphisms", auts.order);
    for g in &auts.generators {
        println!("  generator {g}");
    }
    let rotation = Permutation::from_cycles(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9], &[10, 11, 12], &[13, 14, 15]]);
    println!("{rotation} preserves it: {}", rotation.preserves(&ball));

    let shifted = ball.relabel(&ball.vertices().into_iter().map(|v| (v, 40 - v)).collect());
    assert_eq!(canonical_form(&shifted).complex, canonical_form(&ball).complex);
    println!("canonical forms agree after relabeling");
}
