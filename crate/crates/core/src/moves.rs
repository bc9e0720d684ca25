//! Cones, one-point suspensions, gluing, and the dimension families built
//! from the catalog complexes.

use thiserror::Error;

use crate::catalog::{self, CatalogName};
use crate::complex::{Face, SimplicialComplex, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("vertex {0} already belongs to the complex")]
    VertexClash(Vertex),
    #[error("vertex {0} is not a vertex of the complex")]
    NotAVertex(Vertex),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0} is not a facet of the complex")]
    NotAFacet(Face),
    #[error("family dimension must be at least 3, got {0}")]
    BadDimension(usize),
}

/// `{F ∪ {apex}}` over all facets; raises the dimension by one.
pub fn cone(c: &SimplicialComplex, apex: Vertex) -> Result<SimplicialComplex, MoveError> {
    if apex == 0 || c.vertices().binary_search(&apex).is_ok() {
        return Err(MoveError::VertexClash(apex));
    }
    let facets = c.facets().iter().map(|f| f.with(apex)).collect();
    Ok(SimplicialComplex::from_facets_unchecked(facets, c.dim() + 1))
}

/// One-point suspension over the existing vertex `v` with the new vertex `fresh`:
/// facets through `v` gain `fresh`, every other facet is doubled by `v` and `fresh`.
pub fn one_point_suspension(c: &SimplicialComplex, v: Vertex, fresh: Vertex) -> Result<SimplicialComplex, MoveError> {
    let verts = c.vertices();
    if verts.binary_search(&v).is_err() {
        return Err(MoveError::NotAVertex(v));
    }
    if fresh == 0 || verts.binary_search(&fresh).is_ok() {
        return Err(MoveError::VertexClash(fresh));
    }
    let mut facets = Vec::new();
    for f in c.facets() {
        if f.contains(v) {
            facets.push(f.with(fresh));
        } else {
            facets.push(f.with(v));
            facets.push(f.with(fresh));
        }
    }
    Ok(SimplicialComplex::from_facets_unchecked(facets, c.dim() + 1))
}

/// Union of two complexes of the same dimension.
pub fn glue(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex, MoveError> {
    if a.dim() != b.dim() {
        return Err(MoveError::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(a.union(b))
}

pub fn remove_facet(c: &SimplicialComplex, f: &Face) -> Result<SimplicialComplex, MoveError> {
    if !c.has_facet(f) {
        return Err(MoveError::NotAFacet(f.clone()));
    }
    Ok(c.with_facets(c.facets().iter().filter(|g| *g != f).cloned().collect()))
}

/// Suspension vertex used by [`family_sphere`]: the smallest vertex off the
/// knot `{1,2,3}`, so the knot edges survive unchanged.
fn suspension_vertex(c: &SimplicialComplex) -> Vertex {
    c.vertices().into_iter().find(|v| *v > 3).expect("complex has a vertex off the knot")
}

/// Non-constructible `d`-sphere with `d + 10` vertices: the 13-vertex 3-sphere
/// followed by `d - 3` one-point suspensions.
pub fn family_sphere(d: usize) -> Result<SimplicialComplex, MoveError> {
    if d < 3 {
        return Err(MoveError::BadDimension(d));
    }
    let mut c = catalog::load_entry(CatalogName::S3_13_56);
    for _ in 3..d {
        let v = suspension_vertex(&c);
        c = one_point_suspension(&c, v, c.max_vertex() + 1)?;
    }
    Ok(c)
}

/// Non-constructible `d`-ball with `d + 9` vertices and 37 facets: iterated
/// cones over the first 37-facet ball.
pub fn family_ball(d: usize) -> Result<SimplicialComplex, MoveError> {
    if d < 3 {
        return Err(MoveError::BadDimension(d));
    }
    let mut c = catalog::load_entry(CatalogName::B3_12_37_A);
    for _ in 3..d {
        c = cone(&c, c.max_vertex() + 1)?;
    }
    Ok(c)
}
