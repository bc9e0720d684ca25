//! Higher-dimensional non-constructible spheres and balls from cones and
//! one-point suspensions.

use knotcert::catalog::{load_entry, CatalogName};
use knotcert::moves::{cone, family_ball, family_sphere, one_point_suspension};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let s13 = load_entry(CatalogName::S3_13_56);
    let once = one_point_suspension(&s13, 4, 14)?;
    println!("one-point suspension of S3_13_56 at 4: {}", once.f_vector());
    println!("cone over the 12-vertex ball: {}", cone(&load_entry(CatalogName::B3_12_37_A), 13)?.f_vector());

    for d in 3..=6 {
        let s = family_sphere(d)?;
        let b = family_ball(d)?;
        println!("d={d}: sphere {} / ball {}", s.f_vector(), b.f_vector());
    }
    Ok(())
}
