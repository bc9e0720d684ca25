//! Integral homology through Smith normal form, and collapsibility of the
//! non-pure contractible complex at the heart of the catalog.

use knotcert::algebra::{homology, is_collapsible, CollapseConfig, HomologyKind, IntegerMatrix};
use knotcert::catalog::{load_entry, CatalogName};
use knotcert::SimplicialComplex;

fn main() {
    let m = IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    println!("invariant factors {:?}", m.smith_normal_form().invariant_factors);

    // A 6-vertex projective plane has 2-torsion in degree one.
    let rp2 = SimplicialComplex::new([
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
        [1, 5, 6],
        [1, 2, 6],
        [2, 3, 5],
        [3, 4, 6],
        [2, 4, 5],
        [3, 5, 6],
        [2, 4, 6],
    ])
    .unwrap();
    println!("RP2: {}", homology(&rp2, HomologyKind::Unreduced));

    let c = load_entry(CatalogName::ComplexC);
    println!("complex C: f-vector {}, reduced homology {}", c.f_vector(), homology(&c, HomologyKind::Reduced));
    println!("collapsible: {}", is_collapsible(&c, CollapseConfig::default()).is_yes());

    let s = load_entry(CatalogName::S3_13_56);
    println!("13-vertex sphere: {}", homology(&s, HomologyKind::Reduced));
}
