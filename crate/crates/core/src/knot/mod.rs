//! Knotted triangles: 3-cycles of edges whose triangle is missing and whose
//! complement group has a non-abelian finite quotient. A 3-ball or 3-sphere
//! containing one is not constructible, hence not shellable, and a 3-edge
//! knot cannot be straight.

pub mod complement;
pub mod group;
pub mod presentation;

use rayon::prelude::*;
use thiserror::Error;

use crate::complex::{Face, SimplicialComplex};
use crate::recognition::{combinatorial_manifold3, cone_off_boundary, ManifoldStatus};

pub use complement::{barycentric_subdivision, edge_path_presentation, raw_complement_presentation};
pub use group::{count_homs, find_nonabelian_hom, FiniteGroup, GroupError};
pub use presentation::{GroupPresentation, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotError {
    #[error("{0} is not a cycle of edges with a missing triangle")]
    NotACandidate(Face),
    #[error("not a combinatorial 3-ball or 3-sphere")]
    NotBallOrSphere,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Vertex triples spanning three edges but no triangle, in lexicographic order.
pub fn find_candidate_triangles(c: &SimplicialComplex) -> Vec<Face> {
    if c.dim() < 1 {
        return Vec::new();
    }
    let edges: std::collections::HashSet<&Face> = c.faces(1).iter().collect();
    let verts = c.vertices();
    let mut out = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if !edges.contains(&Face::from([a, b])) {
                continue;
            }
            for &x in &verts[j + 1..] {
                let t = Face::from([a, b, x]);
                if edges.contains(&Face::from([a, x])) && edges.contains(&Face::from([b, x])) && !c.has_face(&t) {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn check_candidate(c: &SimplicialComplex, cycle: &Face) -> Result<(), KnotError> {
    let ok = cycle.len() == 3 && cycle.subfaces(2).iter().all(|e| c.has_face(e)) && !c.has_face(cycle);
    if ok {
        Ok(())
    } else {
        Err(KnotError::NotACandidate(cycle.clone()))
    }
}

/// Simplified presentation of the complement group of `cycle` in the 3-sphere `s`.
pub fn complement_presentation(
    s: &SimplicialComplex,
    cycle: &Face,
    subdivisions: usize,
) -> Result<GroupPresentation, KnotError> {
    check_candidate(s, cycle)?;
    Ok(raw_complement_presentation(s, cycle, subdivisions).simplify())
}

#[derive(Clone, Debug)]
pub struct KnotConfig {
    pub groups: Vec<FiniteGroup>,
    pub subdivisions: usize,
    pub generator_cap: usize,
}

impl Default for KnotConfig {
    fn default() -> Self {
        KnotConfig { groups: FiniteGroup::default_targets(), subdivisions: 1, generator_cap: 8 }
    }
}

/// A knotted 3-cycle together with a non-abelian representation of its
/// complement group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotWitness {
    pub cycle: Face,
    pub subdivisions: usize,
    pub presentation: GroupPresentation,
    pub group: String,
    pub images: Vec<usize>,
}

impl KnotWitness {
    /// Recomputes the presentation in `s` and checks the representation.
    pub fn check(&self, s: &SimplicialComplex, group: &FiniteGroup) -> bool {
        if group.name != self.group {
            return false;
        }
        let Ok(p) = complement_presentation(s, &self.cycle, self.subdivisions) else { return false };
        p == self.presentation
            && group.is_hom(&p, &self.images)
            && self.images.iter().all(|&x| x < group.order())
            && self.images.iter().enumerate().any(|(i, &a)| self.images[i + 1..].iter().any(|&b| !group.commute(a, b)))
    }
}

/// What a knotted triangle implies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Consequences {
    pub non_constructible: bool,
    pub non_shellable: bool,
    pub no_straight_embedding: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certification {
    Certified {
        witness: KnotWitness,
        /// The sphere the complement was taken in; for a ball, the ball with
        /// its boundary coned off.
        sphere: SimplicialComplex,
        consequences: Consequences,
    },
    NoneFound {
        candidates: usize,
    },
}

impl Certification {
    pub fn witness(&self) -> Option<&KnotWitness> {
        match self {
            Certification::Certified { witness, .. } => Some(witness),
            Certification::NoneFound { .. } => None,
        }
    }
}

/// Searches the 3-cycles of `c` in lexicographic order for a knotted one.
pub fn certify_nonconstructible(c: &SimplicialComplex, config: &KnotConfig) -> Result<Certification, KnotError> {
    let sphere = match combinatorial_manifold3(c) {
        ManifoldStatus::Closed => c.clone(),
        ManifoldStatus::WithBoundary => cone_off_boundary(c).0,
        ManifoldStatus::No => return Err(KnotError::NotBallOrSphere),
    };
    let candidates = find_candidate_triangles(c);
    let found = candidates.par_iter().find_map_first(|cycle| knot_witness(&sphere, cycle, config).ok().flatten());
    Ok(match found {
        Some(witness) => Certification::Certified {
            witness,
            sphere,
            consequences: Consequences { non_constructible: true, non_shellable: true, no_straight_embedding: true },
        },
        None => Certification::NoneFound { candidates: candidates.len() },
    })
}

/// Tries the configured groups in order on one cycle.
pub fn knot_witness(
    s: &SimplicialComplex,
    cycle: &Face,
    config: &KnotConfig,
) -> Result<Option<KnotWitness>, KnotError> {
    let p = complement_presentation(s, cycle, config.subdivisions)?;
    if p.generators < 2 || p.generators > config.generator_cap {
        return Ok(None);
    }
    for g in &config.groups {
        if let Some(images) = find_nonabelian_hom(&p, g, config.generator_cap)? {
            return Ok(Some(KnotWitness {
                cycle: cycle.clone(),
                subdivisions: config.subdivisions,
                presentation: p,
                group: g.name.clone(),
                images,
            }));
        }
    }
    Ok(None)
}
