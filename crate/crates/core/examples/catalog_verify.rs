//! Check every claim about the embedded complexes and print the report.

use knotcert::catalog::{verify_catalog, CatalogConfig};

fn main() {
    let report = verify_catalog(&CatalogConfig::default());
    print!("{report}");
    let failed: Vec<_> = report.failed().map(|c| c.name.as_str()).collect();
    if failed.is_empty() {
        println!("all {} claims hold", report.claims.len());
    } else {
        println!("failed: {}", failed.join(", "));
        std::process::exit(1);
    }
}
