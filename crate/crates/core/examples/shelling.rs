//! Shellings, free facets and the budgeted constructibility search.

use knotcert::catalog::{load_entry, CatalogName};
use knotcert::recognition::RecognitionConfig;
use knotcert::shelling::{find_shelling, free_facets, is_constructible, is_strongly_nonshellable, ShellingResult};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = RecognitionConfig::default();

    let disc = load_entry(CatalogName::Boundary28);
    if let ShellingResult::Shellable(cert) = find_shelling(&disc, 100_000) {
        let order: Vec<String> = cert.order.iter().take(5).map(|f| f.to_string()).collect();
        println!("boundary28 shells, starting {} ...", order.join(" "));
    }
    println!("boundary28 constructible: {}", is_constructible(&disc, 100_000).label());

    let b38 = load_entry(CatalogName::B3_12_38);
    for f in free_facets(&b38, &cfg)? {
        println!("free facet of B3_12_38: {f}");
    }

    let b37 = load_entry(CatalogName::B3_12_37_A);
    println!("B3_12_37_a strongly non-shellable: {}", is_strongly_nonshellable(&b37, &cfg)?);
    println!("exhaustive shelling search: {}", find_shelling(&b37, 1_000_000).label());
    println!("constructibility at a small budget: {}", is_constructible(&b37, 10_000).label());
    Ok(())
}
