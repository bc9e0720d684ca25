//! Construction and certification of knotted, non-constructible simplicial
//! 3-balls and 3-spheres and their higher-dimensional relatives.

pub mod algebra;
pub mod bistellar;
pub mod catalog;
pub mod cli;
pub mod complex;
pub mod iso;
pub mod knot;
pub mod moves;
pub mod recognition;
pub mod shelling;

pub use complex::{FVector, Face, Pseudomanifold, SimplicialComplex, Vertex};
