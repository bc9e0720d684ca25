//! Bistellar flips and annealing-driven reduction of closed combinatorial
//! manifolds.
//!
//! A flip `(F, V)` is admissible when `link(F) = ∂V` and `V` is not yet a face.
//! It replaces `F * ∂V` by `V * ∂F`. Subdividing a facet is the special case
//! where `V` is a single fresh vertex.

mod trace;

use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::complex::{Face, SimplicialComplex, Vertex};

pub use trace::{parse_trace, write_trace, TraceFile};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BistellarError {
    #[error("move {0} is not admissible")]
    Inadmissible(FlipMove),
}

/// A bistellar move: `face` is removed together with its star, `coface` is
/// introduced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FlipMove {
    pub face: Face,
    pub coface: Face,
}

impl FlipMove {
    pub fn new(face: impl Into<Face>, coface: impl Into<Face>) -> Self {
        FlipMove { face: face.into(), coface: coface.into() }
    }

    pub fn reverse(&self) -> FlipMove {
        FlipMove { face: self.coface.clone(), coface: self.face.clone() }
    }

    /// Change in the number of facets.
    pub fn facet_delta(&self) -> isize {
        self.face.len() as isize - self.coface.len() as isize
    }
}

impl std::fmt::Display for FlipMove {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {}", self.face, self.coface)
    }
}

/// Faces that a reduction must keep. A move is blocked when it would delete a
/// frozen face, or when its new simplex is spanned entirely by frozen vertices
/// (which would fill in a frozen cycle).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrozenFaces {
    faces: Vec<Face>,
    vertices: Face,
}

impl FrozenFaces {
    pub fn new(faces: impl IntoIterator<Item = Face>) -> Self {
        let mut faces: Vec<Face> = faces.into_iter().filter(|f| !f.is_empty()).collect();
        faces.sort();
        faces.dedup();
        let vertices = Face::new(faces.iter().flat_map(|f| f.vertices().iter().copied()));
        FrozenFaces { faces, vertices }
    }

    pub fn none() -> Self {
        Self::default()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn blocks(&self, m: &FlipMove) -> bool {
        if self.faces.is_empty() {
            return false;
        }
        self.faces.iter().any(|f| m.face.is_subset(f)) || m.coface.is_subset(&self.vertices)
    }
}

/// Mutable facet set with an index from every face to the facets containing it.
#[derive(Clone)]
pub(crate) struct FlipState {
    dim: usize,
    stars: BTreeMap<Face, Vec<Face>>,
    num_facets: usize,
    max_vertex: Vertex,
}

impl FlipState {
    pub(crate) fn new(c: &SimplicialComplex) -> Self {
        let mut s = FlipState { dim: c.dim(), stars: BTreeMap::new(), num_facets: 0, max_vertex: c.max_vertex() };
        for f in c.facets() {
            s.insert(f.clone());
        }
        s
    }

    fn insert(&mut self, f: Face) {
        for k in 1..=f.len() {
            for s in f.subfaces(k) {
                self.stars.entry(s).or_default().push(f.clone());
            }
        }
        self.max_vertex = self.max_vertex.max(*f.vertices().last().unwrap());
        self.num_facets += 1;
    }

    fn remove(&mut self, f: &Face) {
        for k in 1..=f.len() {
            for s in f.subfaces(k) {
                let list = self.stars.get_mut(&s).expect("indexed face");
                list.retain(|g| g != f);
                if list.is_empty() {
                    self.stars.remove(&s);
                }
            }
        }
        self.num_facets -= 1;
    }

    fn num_vertices(&self) -> usize {
        self.stars.keys().filter(|f| f.len() == 1).count()
    }

    fn has_face(&self, f: &Face) -> bool {
        self.stars.contains_key(f)
    }

    /// `V` when `link(F)` is the boundary of a simplex, otherwise `None`.
    fn link_simplex(&self, f: &Face, star: &[Face]) -> Option<Face> {
        let m = self.dim + 2 - f.len();
        if star.len() != m {
            return None;
        }
        let v = Face::new(star.iter().flat_map(|g| g.vertices().iter().copied()).filter(|x| !f.contains(*x)));
        (v.len() == m).then_some(v)
    }

    fn is_admissible(&self, m: &FlipMove) -> bool {
        let Some(star) = self.stars.get(&m.face) else { return false };
        if m.face.len() == self.dim + 1 {
            return m.coface.len() == 1 && !self.has_face(&m.coface);
        }
        self.link_simplex(&m.face, star).as_ref() == Some(&m.coface) && !self.has_face(&m.coface)
    }

    fn moves(&self, frozen: &FrozenFaces, with_subdivisions: bool) -> Vec<FlipMove> {
        let mut out = Vec::new();
        for (f, star) in &self.stars {
            if f.len() == self.dim + 1 {
                if with_subdivisions {
                    let m = FlipMove { face: f.clone(), coface: Face::from([self.max_vertex + 1]) };
                    if !frozen.blocks(&m) {
                        out.push(m);
                    }
                }
                continue;
            }
            if let Some(v) = self.link_simplex(f, star) {
                if !self.has_face(&v) {
                    let m = FlipMove { face: f.clone(), coface: v };
                    if !frozen.blocks(&m) {
                        out.push(m);
                    }
                }
            }
        }
        out
    }

    /// Caller guarantees admissibility.
    fn apply(&mut self, m: &FlipMove) {
        let old: Vec<Face> = self.stars[&m.face].clone();
        for f in &old {
            self.remove(f);
        }
        for u in m.face.vertices() {
            self.insert(m.coface.union(&m.face.without(*u)));
        }
    }

    pub(crate) fn to_complex(&self) -> SimplicialComplex {
        let facets = self.stars.iter().filter(|(f, _)| f.len() == self.dim + 1).map(|(f, _)| f.clone()).collect();
        SimplicialComplex::from_facets_unchecked(facets, self.dim)
    }

    fn score(&self) -> (usize, usize) {
        (self.num_facets, self.num_vertices())
    }
}

/// All admissible flips, sorted, excluding those blocked by `frozen`. Facet
/// subdivisions use the fresh label `max vertex + 1`.
pub fn admissible_moves(c: &SimplicialComplex, frozen: &FrozenFaces) -> Vec<FlipMove> {
    FlipState::new(c).moves(frozen, true)
}

pub fn apply_move(c: &SimplicialComplex, m: &FlipMove) -> Result<SimplicialComplex, BistellarError> {
    let mut state = FlipState::new(c);
    if !state.is_admissible(m) {
        return Err(BistellarError::Inadmissible(m.clone()));
    }
    state.apply(m);
    Ok(state.to_complex())
}

/// Replays a trace, returning every intermediate complex (input first).
pub fn replay(c: &SimplicialComplex, trace: &[FlipMove]) -> Result<Vec<SimplicialComplex>, BistellarError> {
    let mut state = FlipState::new(c);
    let mut out = vec![c.clone()];
    for m in trace {
        if !state.is_admissible(m) {
            return Err(BistellarError::Inadmissible(m.clone()));
        }
        state.apply(m);
        out.push(state.to_complex());
    }
    Ok(out)
}

/// Replays a trace and returns only the final complex.
pub fn replay_final(c: &SimplicialComplex, trace: &[FlipMove]) -> Result<SimplicialComplex, BistellarError> {
    let mut state = FlipState::new(c);
    for m in trace {
        if !state.is_admissible(m) {
            return Err(BistellarError::Inadmissible(m.clone()));
        }
        state.apply(m);
    }
    Ok(state.to_complex())
}

/// Annealing parameters. Facet-decreasing flips are always taken; when none is
/// available a random non-decreasing flip with facet change `Δ` is accepted
/// with probability `exp(-Δ/T)`. `T` starts at `t0` and is multiplied by
/// `cooling` after every step. After `stall_limit` steps without improving the
/// best `(f_d, f_0)` the search returns to the best complex, reheats, and
/// reseeds; it gives up after `max_reheats` consecutive fruitless reheats.
#[derive(Clone, Debug)]
pub struct ReduceConfig {
    pub seed: u64,
    /// Maximum number of accepted flips.
    pub budget: usize,
    pub frozen: FrozenFaces,
    pub t0: f64,
    pub cooling: f64,
    pub stall_limit: usize,
    pub max_reheats: usize,
    /// Number of steps during which the reverse of an accepted uphill flip is forbidden.
    pub tabu: usize,
}

impl Default for ReduceConfig {
    fn default() -> Self {
        ReduceConfig {
            seed: 0,
            budget: 100_000,
            frozen: FrozenFaces::none(),
            t0: 1.0,
            cooling: 0.99,
            stall_limit: 1_500,
            max_reheats: 30,
            tabu: 8,
        }
    }
}

impl ReduceConfig {
    pub fn with_seed(seed: u64) -> Self {
        ReduceConfig { seed, ..Default::default() }
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    /// Best complex found; equals the input after replaying `trace`.
    pub complex: SimplicialComplex,
    pub trace: Vec<FlipMove>,
    /// Accepted flips including those later discarded by a reheat.
    pub accepted: usize,
    pub steps: usize,
    pub reheats: usize,
}

impl Reduction {
    /// Whether the result is the boundary of a simplex.
    pub fn is_simplex_boundary(&self) -> bool {
        let d = self.complex.dim();
        self.complex.num_facets() == d + 2 && self.complex.num_vertices() == d + 2
    }
}

/// Reduces `c` by bistellar flips, minimizing `(f_d, f_0)` lexicographically.
/// Deterministic for a fixed configuration.
pub fn reduce(c: &SimplicialComplex, config: &ReduceConfig) -> Reduction {
    let d = c.dim();
    let mut master = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(master.gen());
    let mut state = FlipState::new(c);
    let mut trace: Vec<FlipMove> = Vec::new();
    let mut best = (state.score(), 0usize, state.clone());
    let mut tabu: Vec<(FlipMove, usize)> = Vec::new();
    let mut temperature = config.t0;
    let (mut accepted, mut steps, mut stall, mut reheats, mut fruitless) = (0, 0, 0, 0, 0);
    let max_steps = config.budget.saturating_mul(20).max(1000);

    while accepted < config.budget && steps < max_steps && state.num_facets > d + 2 {
        steps += 1;
        tabu.retain(|(_, until)| *until > steps);
        let mut moves = state.moves(&config.frozen, false);
        moves.retain(|m| !tabu.iter().any(|(t, _)| t == m));
        if !moves.is_empty() {
            let min_delta = moves.iter().map(FlipMove::facet_delta).min().unwrap();
            let pool: Vec<&FlipMove> = if min_delta < 0 {
                moves.iter().filter(|m| m.facet_delta() == min_delta).collect()
            } else {
                moves.iter().collect()
            };
            let m = (*pool.choose(&mut rng).unwrap()).clone();
            let delta = m.facet_delta();
            let take = delta < 0 || rng.gen::<f64>() < (-(delta as f64) / temperature.max(1e-12)).exp();
            if take {
                state.apply(&m);
                if delta >= 0 {
                    tabu.push((m.reverse(), steps + config.tabu));
                }
                trace.push(m);
                accepted += 1;
            }
        }
        temperature *= config.cooling;

        let score = state.score();
        if score < best.0 {
            best = (score, trace.len(), state.clone());
            stall = 0;
            fruitless = 0;
        } else {
            stall += 1;
        }
        if stall >= config.stall_limit || moves.is_empty() {
            fruitless += 1;
            if fruitless > config.max_reheats {
                break;
            }
            reheats += 1;
            stall = 0;
            state = best.2.clone();
            trace.truncate(best.1);
            tabu.clear();
            temperature = config.t0;
            rng = ChaCha8Rng::seed_from_u64(master.gen());
        }
    }
    if state.score() < best.0 {
        best = (state.score(), trace.len(), state);
    }
    trace.truncate(best.1);
    Reduction { complex: best.2.to_complex(), trace, accepted, steps, reheats }
}

/// Distinct facet-count changes of all admissible moves, mapped to how often
/// each occurs.
pub fn facet_delta_table(c: &SimplicialComplex) -> BTreeMap<isize, usize> {
    let mut out = BTreeMap::new();
    for m in admissible_moves(c, &FrozenFaces::none()) {
        *out.entry(m.facet_delta()).or_insert(0) += 1;
    }
    out
}

/// Vertex sets of the faces touched by the trace, for diagnostics.
pub fn touched_vertices(trace: &[FlipMove]) -> BTreeSet<Vertex> {
    trace.iter().flat_map(|m| m.face.vertices().iter().chain(m.coface.vertices()).copied()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetra_boundary() -> SimplicialComplex {
        SimplicialComplex::simplex_boundary([1, 2, 3, 4])
    }

    #[test]
    fn edge_move_on_tetrahedron_boundary_is_inadmissible() {
        let s = tetra_boundary();
        let moves = admissible_moves(&s, &FrozenFaces::none());
        assert!(!moves.iter().any(|m| m.face == Face::from([1, 2])));
        assert_eq!(moves.iter().filter(|m| m.coface.len() == 1).count(), 4);
        let bad = FlipMove::new([1, 2], [3, 4]);
        assert_eq!(apply_move(&s, &bad), Err(BistellarError::Inadmissible(bad.clone())));
    }

    #[test]
    fn subdivide_and_undo() {
        let s = tetra_boundary();
        let m = FlipMove::new([1, 2, 3], [5]);
        let t = apply_move(&s, &m).unwrap();
        assert_eq!(t.f_vector().0, vec![5, 9, 6]);
        assert_eq!(apply_move(&t, &m.reverse()).unwrap(), s);
    }

    #[test]
    fn frozen_faces_block_moves() {
        let frozen = FrozenFaces::new([Face::from([1, 2])]);
        assert!(frozen.blocks(&FlipMove::new([1, 2], [3, 4, 5])));
        assert!(frozen.blocks(&FlipMove::new([1], [2, 3, 4, 5])));
        assert!(!frozen.blocks(&FlipMove::new([1, 3], [2, 4, 5])));
        assert!(frozen.blocks(&FlipMove::new([3, 4], [1, 2])));
    }

    #[test]
    fn reduce_simplex_boundary_is_noop() {
        let s = SimplicialComplex::simplex_boundary([1, 2, 3, 4, 5]);
        let r = reduce(&s, &ReduceConfig::with_seed(7));
        assert!(r.trace.is_empty());
        assert_eq!(r.complex, s);
        assert!(r.is_simplex_boundary());
    }

    #[test]
    fn reduce_subdivided_sphere() {
        let mut s = SimplicialComplex::simplex_boundary([1, 2, 3, 4, 5]);
        for (f, v) in [([1, 2, 3, 4], 6), ([1, 2, 3, 6], 7), ([2, 3, 4, 5], 8)] {
            s = apply_move(&s, &FlipMove::new(f, [v])).unwrap();
        }
        let r = reduce(&s, &ReduceConfig::with_seed(1));
        assert!(r.is_simplex_boundary());
        assert_eq!(replay_final(&s, &r.trace).unwrap(), r.complex);
    }
}
