//! Recognition of 2- and 3-dimensional balls and spheres, and of 4-spheres.
//!
//! Dimension two is decided exactly. In dimensions three and four a positive
//! answer is certified by a bistellar reduction to the boundary of a simplex;
//! negative answers carry the failed necessary condition; anything else is
//! `Unknown` within the configured flip budget.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{homology, HomologyKind};
use crate::bistellar::{reduce, FlipMove, ReduceConfig};
use crate::complex::{Face, Pseudomanifold, SimplicialComplex, Vertex};
use crate::moves::cone;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecognitionError {
    #[error("expected a {expected}-dimensional complex, got dimension {found}")]
    WrongDimension { expected: usize, found: usize },
    #[error("sphere recognition is not supported in dimension {0}")]
    UnsupportedDimension(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ManifoldStatus {
    Closed,
    WithBoundary,
    No,
}

/// Why a complex is not a sphere or ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    WrongDimension(usize),
    NotPure,
    BadVertexLink(Vertex),
    NotClosed,
    NoBoundary,
    BoundaryNotSphere,
    EulerCharacteristic(i64),
    Homology(String),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::WrongDimension(d) => write!(f, "wrong dimension {d}"),
            Witness::NotPure => write!(f, "not pure"),
            Witness::BadVertexLink(v) => write!(f, "link of vertex {v} is neither a sphere nor a ball as required"),
            Witness::NotClosed => write!(f, "has boundary"),
            Witness::NoBoundary => write!(f, "has no boundary"),
            Witness::BoundaryNotSphere => write!(f, "boundary is not a 2-sphere"),
            Witness::EulerCharacteristic(x) => write!(f, "Euler characteristic {x}"),
            Witness::Homology(h) => write!(f, "homology {h}"),
        }
    }
}

/// A replayable reduction to the boundary of a simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereCertificate {
    pub seed: u64,
    pub trace: Vec<FlipMove>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<C> {
    Yes(C),
    No(Witness),
    Unknown { seeds_tried: usize, flips_used: usize },
}

impl<C> Verdict<C> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Verdict::No(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "yes",
            Verdict::No(_) => "no",
            Verdict::Unknown { .. } => "unknown",
        }
    }

    fn map<D>(self, f: impl FnOnce(C) -> D) -> Verdict<D> {
        match self {
            Verdict::Yes(c) => Verdict::Yes(f(c)),
            Verdict::No(w) => Verdict::No(w),
            Verdict::Unknown { seeds_tried, flips_used } => Verdict::Unknown { seeds_tried, flips_used },
        }
    }
}

/// The ball is certified by the sphere obtained by coning off its boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallCertificate {
    pub apex: Vertex,
    pub sphere: SphereCertificate,
}

#[derive(Clone, Debug)]
pub struct RecognitionConfig {
    /// Accepted flips per reduction attempt.
    pub flip_budget: usize,
    /// One reduction attempt per seed, in order.
    pub seeds: Vec<u64>,
}

impl Default for RecognitionConfig {
    fn default() -> Self {
        RecognitionConfig { flip_budget: 100_000, seeds: vec![0, 1, 2] }
    }
}

fn require_dim(c: &SimplicialComplex, d: usize) -> Result<(), RecognitionError> {
    if c.dim() != d || c.is_empty() {
        return Err(RecognitionError::WrongDimension { expected: d, found: c.dim() });
    }
    Ok(())
}

/// Every vertex link of a 2-complex is a cycle (closed) or a path (boundary).
fn vertex_links_are_1_manifolds(c: &SimplicialComplex, allow_paths: bool) -> bool {
    c.vertices().iter().all(|&v| {
        let link = c.link(&Face::from([v])).expect("vertex is a face");
        let mut degree = std::collections::HashMap::new();
        for e in link.facets() {
            for &w in e.vertices() {
                *degree.entry(w).or_insert(0) += 1;
            }
        }
        let ends = degree.values().filter(|&&d| d == 1).count();
        let ok_degrees = degree.values().all(|&d| d == 1 || d == 2);
        link.is_connected() && ok_degrees && (ends == 0 || (allow_paths && ends == 2))
    })
}

/// Connected closed 2-pseudomanifold with χ = 2 and circle vertex links.
pub fn is_sphere2(c: &SimplicialComplex) -> Result<bool, RecognitionError> {
    require_dim(c, 2)?;
    Ok(c.pseudomanifold_status() == Pseudomanifold::Closed
        && c.euler_characteristic() == 2
        && vertex_links_are_1_manifolds(c, false))
}

/// Connected 2-pseudomanifold with boundary, χ = 1 and a single boundary cycle.
pub fn is_ball2(c: &SimplicialComplex) -> Result<bool, RecognitionError> {
    require_dim(c, 2)?;
    if c.pseudomanifold_status() != Pseudomanifold::WithBoundary || c.euler_characteristic() != 1 {
        return Ok(false);
    }
    let boundary = c.boundary_complex();
    let single_cycle = boundary.is_connected()
        && boundary.num_facets() == boundary.num_vertices()
        && boundary.vertices().iter().all(|&v| boundary.facets().iter().filter(|e| e.contains(v)).count() == 2);
    Ok(single_cycle && vertex_links_are_1_manifolds(c, true))
}

fn first_bad_link(c: &SimplicialComplex, allow_balls: bool) -> Option<Vertex> {
    c.vertices().par_iter().find_map_first(|&v| {
        let link = c.link(&Face::from([v])).expect("vertex is a face");
        let sphere = is_sphere2(&link).unwrap_or(false);
        let ball = allow_balls && !sphere && is_ball2(&link).unwrap_or(false);
        (!sphere && !ball).then_some(v)
    })
}

/// Link condition for combinatorial 3-manifolds.
pub fn combinatorial_manifold3(c: &SimplicialComplex) -> ManifoldStatus {
    if c.dim() != 3 || !c.is_pure() || c.is_empty() || first_bad_link(c, true).is_some() {
        return ManifoldStatus::No;
    }
    if c.boundary_complex().is_empty() {
        ManifoldStatus::Closed
    } else {
        ManifoldStatus::WithBoundary
    }
}

fn reduce_to_simplex_boundary(c: &SimplicialComplex, config: &RecognitionConfig) -> Verdict<SphereCertificate> {
    let mut flips = 0;
    for &seed in &config.seeds {
        let r = reduce(c, &ReduceConfig { budget: config.flip_budget, ..ReduceConfig::with_seed(seed) });
        flips += r.accepted;
        if r.is_simplex_boundary() {
            return Verdict::Yes(SphereCertificate { seed, trace: r.trace });
        }
    }
    Verdict::Unknown { seeds_tried: config.seeds.len(), flips_used: flips }
}

/// Homology check used only once a reduction has stalled.
fn homology_witness(c: &SimplicialComplex, d: usize) -> Option<Witness> {
    let h = homology(c, HomologyKind::Unreduced);
    (!h.is_sphere_like(d)).then(|| Witness::Homology(h.to_string()))
}

pub fn verify_sphere3(c: &SimplicialComplex, config: &RecognitionConfig) -> Verdict<SphereCertificate> {
    if c.dim() != 3 {
        return Verdict::No(Witness::WrongDimension(c.dim()));
    }
    if !c.is_pure() {
        return Verdict::No(Witness::NotPure);
    }
    if let Some(v) = first_bad_link(c, false) {
        return Verdict::No(Witness::BadVertexLink(v));
    }
    let chi = c.euler_characteristic();
    if chi != 0 {
        return Verdict::No(Witness::EulerCharacteristic(chi));
    }
    match reduce_to_simplex_boundary(c, config) {
        Verdict::Unknown { seeds_tried, flips_used } => match homology_witness(c, 3) {
            Some(w) => Verdict::No(w),
            None => Verdict::Unknown { seeds_tried, flips_used },
        },
        v => v,
    }
}

/// The closed complex `C ∪ (apex * ∂C)` with apex `max vertex + 1`.
pub fn cone_off_boundary(c: &SimplicialComplex) -> (SimplicialComplex, Vertex) {
    let apex = c.max_vertex() + 1;
    let coned = cone(&c.boundary_complex(), apex).expect("apex is fresh");
    (c.union(&coned), apex)
}

pub fn verify_ball3(c: &SimplicialComplex, config: &RecognitionConfig) -> Verdict<BallCertificate> {
    if c.dim() != 3 {
        return Verdict::No(Witness::WrongDimension(c.dim()));
    }
    if !c.is_pure() {
        return Verdict::No(Witness::NotPure);
    }
    if let Some(v) = first_bad_link(c, true) {
        return Verdict::No(Witness::BadVertexLink(v));
    }
    let boundary = c.boundary_complex();
    if boundary.is_empty() {
        return Verdict::No(Witness::NoBoundary);
    }
    if !is_sphere2(&boundary).unwrap_or(false) {
        return Verdict::No(Witness::BoundaryNotSphere);
    }
    let (sphere, apex) = cone_off_boundary(c);
    verify_sphere3(&sphere, config).map(|sphere| BallCertificate { apex, sphere })
}

/// Sphere recognition in dimensions 2, 3 and 4.
pub fn verify_sphere(
    c: &SimplicialComplex,
    d: usize,
    config: &RecognitionConfig,
) -> Result<Verdict<SphereCertificate>, RecognitionError> {
    match d {
        2 => {
            require_dim(c, 2)?;
            Ok(if is_sphere2(c)? {
                Verdict::Yes(SphereCertificate { seed: 0, trace: Vec::new() })
            } else {
                Verdict::No(Witness::BadVertexLink(0))
            })
        }
        3 => {
            require_dim(c, 3)?;
            Ok(verify_sphere3(c, config))
        }
        4 => {
            require_dim(c, 4)?;
            Ok(verify_sphere4(c, config))
        }
        _ => Err(RecognitionError::UnsupportedDimension(d)),
    }
}

fn verify_sphere4(c: &SimplicialComplex, config: &RecognitionConfig) -> Verdict<SphereCertificate> {
    if !c.is_pure() {
        return Verdict::No(Witness::NotPure);
    }
    if c.pseudomanifold_status() != Pseudomanifold::Closed {
        return Verdict::No(Witness::NotClosed);
    }
    let links: Vec<(Vertex, Verdict<SphereCertificate>)> = c
        .vertices()
        .par_iter()
        .map(|&v| (v, verify_sphere3(&c.link(&Face::from([v])).expect("vertex is a face"), config)))
        .collect();
    if let Some((v, _)) = links.iter().find(|(_, verdict)| verdict.is_no()) {
        return Verdict::No(Witness::BadVertexLink(*v));
    }
    let chi = c.euler_characteristic();
    if chi != 2 {
        return Verdict::No(Witness::EulerCharacteristic(chi));
    }
    let unknown_links = links.iter().any(|(_, verdict)| !verdict.is_yes());
    match reduce_to_simplex_boundary(c, config) {
        Verdict::Yes(cert) if !unknown_links => Verdict::Yes(cert),
        Verdict::Yes(_) => Verdict::Unknown { seeds_tried: config.seeds.len(), flips_used: 0 },
        Verdict::Unknown { seeds_tried, flips_used } => match homology_witness(c, 4) {
            Some(w) => Verdict::No(w),
            None => Verdict::Unknown { seeds_tried, flips_used },
        },
        v => v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bistellar::replay_final;
    use crate::catalog::{load_entry, CatalogName};

    fn cfg() -> RecognitionConfig {
        RecognitionConfig::default()
    }

    /// 7-vertex torus.
    fn torus() -> SimplicialComplex {
        let mut facets = Vec::new();
        for i in 0..7u32 {
            let v = |k: u32| (i + k) % 7 + 1;
            facets.push(Face::from([v(0), v(1), v(3)]));
            facets.push(Face::from([v(0), v(2), v(3)]));
        }
        SimplicialComplex::new(facets).unwrap()
    }

    #[test]
    fn two_dimensional() {
        assert!(is_sphere2(&SimplicialComplex::simplex_boundary([1, 2, 3, 4])).unwrap());
        assert!(is_ball2(&SimplicialComplex::simplex([1, 2, 3])).unwrap());
        assert!(!is_sphere2(&torus()).unwrap());
        assert_eq!(torus().euler_characteristic(), 0);
        assert_eq!(
            is_sphere2(&SimplicialComplex::simplex([1, 2, 3, 4])),
            Err(RecognitionError::WrongDimension { expected: 2, found: 3 })
        );
    }

    #[test]
    fn link_of_boundary_vertex_is_disc() {
        let b = load_entry(CatalogName::B3_16_46);
        assert!(is_ball2(&b.link(&Face::from([16])).unwrap()).unwrap());
    }

    #[test]
    fn manifold_status() {
        assert_eq!(combinatorial_manifold3(&load_entry(CatalogName::S3_13_56)), ManifoldStatus::Closed);
        assert_eq!(combinatorial_manifold3(&load_entry(CatalogName::B3_12_38)), ManifoldStatus::WithBoundary);
        let glued = SimplicialComplex::new([Face::from([1, 2, 3, 4]), Face::from([1, 2, 5, 6])]).unwrap();
        assert_eq!(combinatorial_manifold3(&glued), ManifoldStatus::No);
    }

    #[test]
    fn spheres_and_balls() {
        let s = SimplicialComplex::simplex_boundary([1, 2, 3, 4, 5]);
        assert_eq!(verify_sphere3(&s, &cfg()), Verdict::Yes(SphereCertificate { seed: 0, trace: vec![] }));
        let Verdict::Yes(cert) = verify_sphere3(&load_entry(CatalogName::S3_13_56), &cfg()) else { panic!() };
        let end = replay_final(&load_entry(CatalogName::S3_13_56), &cert.trace).unwrap();
        assert_eq!(end.num_facets(), 5);
        assert!(verify_ball3(&SimplicialComplex::simplex([1, 2, 3, 4]), &cfg()).is_yes());
        assert!(verify_ball3(&load_entry(CatalogName::B3_12_37_A), &cfg()).is_yes());
        assert_eq!(verify_ball3(&s, &cfg()), Verdict::No(Witness::NoBoundary));
        assert_eq!(verify_sphere3(&load_entry(CatalogName::B3_12_38), &cfg()).label(), "no");
    }

    #[test]
    fn suspended_torus_is_not_a_sphere() {
        let t = torus();
        let s = cone(&t, 8).unwrap().union(&cone(&t, 9).unwrap());
        assert_eq!(verify_sphere(&s, 3, &cfg()).unwrap(), Verdict::No(Witness::BadVertexLink(8)));
    }

    #[test]
    fn four_spheres() {
        let s = SimplicialComplex::simplex_boundary([1, 2, 3, 4, 5, 6]);
        assert!(verify_sphere(&s, 4, &cfg()).unwrap().is_yes());
        assert_eq!(verify_sphere(&s, 5, &cfg()), Err(RecognitionError::UnsupportedDimension(5)));
    }
}
