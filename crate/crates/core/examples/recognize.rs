//! Recognize 3-balls and 3-spheres, and refute a non-sphere with a witness.

use knotcert::catalog::{load_entry, CatalogName};
use knotcert::moves::{cone, one_point_suspension};
use knotcert::recognition::{verify_ball3, verify_sphere, verify_sphere3, RecognitionConfig, Verdict};
use knotcert::SimplicialComplex;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = RecognitionConfig::default();

    let ball = load_entry(CatalogName::B3_12_38);
    if let Verdict::Yes(cert) = verify_ball3(&ball, &cfg) {
        println!(
            "B3_12_38 is a ball: apex {}, {} flips with seed {}",
            cert.apex,
            cert.sphere.trace.len(),
            cert.sphere.seed
        );
    }

    let sphere = load_entry(CatalogName::S3_17_74);
    println!("S3_17_74: {}", verify_sphere3(&sphere, &cfg).label());

    // The suspension of a torus is not a manifold: the two cone points have torus links.
    let torus = SimplicialComplex::new([
        [1, 2, 4],
        [2, 4, 5],
        [2, 3, 5],
        [3, 5, 6],
        [1, 3, 6],
        [1, 4, 6],
        [4, 5, 7],
        [5, 7, 8],
        [5, 6, 8],
        [6, 8, 9],
        [4, 6, 9],
        [4, 7, 9],
        [1, 7, 8],
        [1, 2, 8],
        [2, 8, 9],
        [2, 3, 9],
        [3, 7, 9],
        [1, 3, 7],
    ])?;
    let suspended = cone(&torus, 10)?.union(&cone(&torus, 11)?);
    match verify_sphere3(&suspended, &cfg) {
        Verdict::No(w) => println!("suspended torus: no ({w})"),
        other => println!("suspended torus: {}", other.label()),
    }

    let s4 = one_point_suspension(&sphere, 4, 18)?;
    println!("one-point suspension as a 4-sphere: {}", verify_sphere(&s4, 4, &cfg)?.label());
    Ok(())
}
