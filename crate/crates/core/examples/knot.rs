//! Certify a knotted triangle: complement presentation, Tietze simplification
//! and a non-abelian representation.

use knotcert::catalog::{load_entry, CatalogName};
use knotcert::knot::{
    certify_nonconstructible, complement_presentation, count_homs, raw_complement_presentation, FiniteGroup, KnotConfig,
};
use knotcert::Face;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s13 = load_entry(CatalogName::S3_13_56);
    let cycle = Face::from([1, 2, 3]);

    let raw = raw_complement_presentation(&s13, &cycle, 1);
    println!("edge-path presentation: {} generators, {} relators", raw.generators, raw.relators.len());
    let p = complement_presentation(&s13, &cycle, 1)?;
    println!("simplified: {p}");
    println!("abelianization: {:?}", p.abelianization());
    println!("homomorphisms to S3: {}", count_homs(&p, &FiniteGroup::symmetric3(), 8)?);

    // Group tables can also come from text: the order, then the multiplication table.
    let z3: FiniteGroup = "3\n0 1 2\n1 2 0\n2 0 1\n".parse()?;
    println!("homomorphisms to Z/3: {}", count_homs(&p, &z3, 8)?);

    let ball = load_entry(CatalogName::B3_12_37_B);
    let cert = certify_nonconstructible(&ball, &KnotConfig::default())?;
    if let Some(w) = cert.witness() {
        println!("B3_12_37_b: cycle {} is knotted, images {:?} in {}", w.cycle, w.images, w.group);
    }
    Ok(())
}
