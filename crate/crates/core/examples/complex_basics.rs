//! Build a complex from facets, inspect it, and round-trip the `.cplx` format.

use knotcert::complex::{parse_cplx, to_cplx_string};
use knotcert::{Face, SimplicialComplex};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // An octahedron: the suspension of a square.
    let octahedron = parse_cplx("# octahedron\n1 2 5\n2 3 5\n3 4 5\n4 1 5\n1 2 6\n2 3 6\n3 4 6\n4 1 6\n")?;
    println!("f-vector {} and euler characteristic {}", octahedron.f_vector(), octahedron.euler_characteristic());
    println!("pseudomanifold: {:?}", octahedron.pseudomanifold_status());

    let link = octahedron.link(&Face::from([5]))?;
    println!("link of 5: {}", to_cplx_string(&link).replace('\n', "; "));

    let disc = octahedron.delete_star(&Face::from([6]))?;
    println!(
        "after deleting the star of 6: {:?} with boundary {}",
        disc.pseudomanifold_status(),
        disc.boundary_complex().f_vector()
    );

    let back = parse_cplx(&to_cplx_string(&octahedron))?;
    assert_eq!(back, octahedron);

    let tetra = SimplicialComplex::simplex_boundary([1, 2, 3, 4]);
    println!("boundary of a tetrahedron: {}", tetra.f_vector());
    Ok(())
}
