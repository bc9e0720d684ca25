//! Pure simplicial complexes given by their facet lists.
//!
//! A [`SimplicialComplex`] is an immutable value: a sorted antichain of
//! [`Face`]s. All faces are derived on demand from the facets and cached per
//! dimension the first time they are requested.

mod io;

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

pub use io::{parse_cplx, parse_cplx_maximal, to_cplx_string};

/// Vertex label. Labels are positive integers.
pub type Vertex = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("empty facet list")]
    Empty,
    #[error("facets have mixed cardinalities ({0} and {1})")]
    NonPure(usize, usize),
    #[error("facet {0} is contained in facet {1}")]
    ContainedFacet(Face, Face),
    #[error("invalid vertex label {0} (labels must be positive)")]
    InvalidVertex(i64),
    #[error("facet {0} repeats a vertex")]
    RepeatedVertex(String),
    #[error("{0} is not a face of the complex")]
    NotAFace(Face),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A simplex, stored as its strictly increasing vertex list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Face(Vec<Vertex>);

impl Face {
    /// Builds a face from arbitrary vertices; the list is sorted and deduplicated.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Face(v)
    }

    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Face(v)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension `|F| - 1`; the empty face has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.0, &other.0);
        while i < a.len() {
            if j == b.len() {
                return false;
            }
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Less => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Face) -> Face {
        Face::new(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    /// `self \ other`.
    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    pub fn with(&self, v: Vertex) -> Face {
        let mut out = self.0.clone();
        if let Err(pos) = out.binary_search(&v) {
            out.insert(pos, v);
        }
        Face(out)
    }

    pub fn without(&self, v: Vertex) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    /// Codimension-one faces, i.e. the facets of the boundary of this simplex.
    pub fn ridges(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Face(v)
        })
    }

    /// All nonempty subsets of the given size.
    pub fn subfaces(&self, size: usize) -> Vec<Face> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(size);
        fn rec(src: &[Vertex], size: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Face>) {
            if cur.len() == size {
                out.push(Face(cur.clone()));
                return;
            }
            let need = size - cur.len();
            for i in start..=src.len().saturating_sub(need) {
                if i >= src.len() {
                    break;
                }
                cur.push(src[i]);
                rec(src, size, i + 1, cur, out);
                cur.pop();
            }
        }
        if size == 0 || size > self.0.len() {
            return out;
        }
        rec(&self.0, size, 0, &mut current, &mut out);
        out
    }

    pub fn map(&self, f: impl Fn(Vertex) -> Vertex) -> Face {
        Face::new(self.0.iter().map(|&v| f(v)))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const N: usize> From<[Vertex; N]> for Face {
    fn from(v: [Vertex; N]) -> Self {
        Face::new(v)
    }
}

impl From<&[Vertex]> for Face {
    fn from(v: &[Vertex]) -> Self {
        Face::new(v.iter().copied())
    }
}

impl From<Vec<Vertex>> for Face {
    fn from(v: Vec<Vertex>) -> Self {
        Face::new(v)
    }
}

/// Face counts `(f_0, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.0.iter().enumerate().map(|(k, &n)| if k % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pseudomanifold {
    Closed,
    WithBoundary,
    No,
}

/// A finite abstract simplicial complex, stored by its facets.
///
/// Complexes built with [`SimplicialComplex::new`] are pure. The non-pure
/// constructor [`SimplicialComplex::from_maximal_faces`] exists for the few
/// mixed-dimensional complexes that only feed into homology computations.
pub struct SimplicialComplex {
    facets: Vec<Face>,
    dim: usize,
    pure: bool,
    faces: OnceLock<Vec<Vec<Face>>>,
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        SimplicialComplex { facets: self.facets.clone(), dim: self.dim, pure: self.pure, faces: self.faces.clone() }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.facets == other.facets && (self.dim == other.dim || self.facets.is_empty() && other.facets.is_empty())
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex").field("dim", &self.dim).field("facets", &self.facets).finish()
    }
}

fn check_vertices(raw: &[i64]) -> Result<Vec<Vertex>, ComplexError> {
    let mut out = Vec::with_capacity(raw.len());
    for &v in raw {
        if v <= 0 || v > Vertex::MAX as i64 {
            return Err(ComplexError::InvalidVertex(v));
        }
        out.push(v as Vertex);
    }
    let mut sorted = out.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != out.len() {
        return Err(ComplexError::RepeatedVertex(format!("{raw:?}")));
    }
    Ok(sorted)
}

impl SimplicialComplex {
    /// Validates a pure facet list. Duplicate facets are collapsed.
    pub fn new<I, F>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: Into<Face>,
    {
        let mut list: Vec<Face> = facets.into_iter().map(Into::into).collect();
        if list.is_empty() {
            return Err(ComplexError::Empty);
        }
        if list.iter().any(|f| f.0.first() == Some(&0)) {
            return Err(ComplexError::InvalidVertex(0));
        }
        let size = list[0].len();
        if size == 0 {
            return Err(ComplexError::Empty);
        }
        if let Some(other) = list.iter().find(|f| f.len() != size) {
            return Err(ComplexError::NonPure(size, other.len()));
        }
        list.sort();
        list.dedup();
        Ok(Self::from_facets_unchecked(list, size - 1))
    }

    /// Parses facets given as raw integers; rejects non-positive labels and
    /// repeated vertices inside a facet.
    pub fn from_raw(facets: &[Vec<i64>]) -> Result<Self, ComplexError> {
        let list = facets.iter().map(|f| check_vertices(f).map(Face::from_sorted)).collect::<Result<Vec<_>, _>>()?;
        Self::new(list)
    }

    /// Builds a possibly non-pure complex from its maximal faces.
    pub fn from_maximal_faces<I, F>(faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: Into<Face>,
    {
        let mut list: Vec<Face> = faces.into_iter().map(Into::into).filter(|f| !f.is_empty()).collect();
        if list.is_empty() {
            return Err(ComplexError::Empty);
        }
        list.sort();
        list.dedup();
        for a in &list {
            if let Some(b) = list.iter().find(|b| *b != a && a.is_subset(b)) {
                return Err(ComplexError::ContainedFacet(a.clone(), b.clone()));
            }
        }
        let dim = list.iter().map(Face::len).max().unwrap() - 1;
        let pure = list.iter().all(|f| f.len() == dim + 1);
        Ok(SimplicialComplex { facets: list, dim, pure, faces: OnceLock::new() })
    }

    /// The complex generated by arbitrary faces: only inclusion-maximal ones are kept.
    pub fn generated_by<I, F>(faces: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: Into<Face>,
    {
        let mut list: Vec<Face> = faces.into_iter().map(Into::into).filter(|f| !f.is_empty()).collect();
        list.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        list.dedup();
        let mut kept: Vec<Face> = Vec::new();
        for f in list {
            if !kept.iter().any(|k| f.is_subset(k)) {
                kept.push(f);
            }
        }
        kept.sort();
        let dim = kept.iter().map(Face::len).max().unwrap_or(1) - 1;
        let pure = kept.iter().all(|f| f.len() == dim + 1);
        SimplicialComplex { facets: kept, dim, pure, faces: OnceLock::new() }
    }

    /// The complex with no facets, tagged with a nominal dimension.
    pub fn empty(dim: usize) -> Self {
        Self::from_facets_unchecked(Vec::new(), dim)
    }

    /// The full simplex on the given vertices.
    pub fn simplex(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let f = Face::new(vertices);
        let d = f.len() - 1;
        Self::from_facets_unchecked(vec![f], d)
    }

    /// The boundary of the simplex on the given vertices.
    pub fn simplex_boundary(vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let f = Face::new(vertices);
        let d = f.len() - 2;
        let mut ridges: Vec<Face> = f.ridges().collect();
        ridges.sort();
        Self::from_facets_unchecked(ridges, d)
    }

    /// Caller guarantees a sorted, deduplicated, pure list of `dim + 1`-sets.
    pub(crate) fn from_facets_unchecked(mut facets: Vec<Face>, dim: usize) -> Self {
        facets.sort();
        facets.dedup();
        debug_assert!(facets.iter().all(|f| f.len() == dim + 1));
        SimplicialComplex { facets, dim, pure: true, faces: OnceLock::new() }
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_pure(&self) -> bool {
        self.pure
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let set: BTreeSet<Vertex> = self.facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        set.into_iter().collect()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices().len()
    }

    pub fn max_vertex(&self) -> Vertex {
        self.facets.iter().flat_map(|f| f.0.iter().copied()).max().unwrap_or(0)
    }

    fn face_table(&self) -> &Vec<Vec<Face>> {
        self.faces.get_or_init(|| {
            let mut per_dim: Vec<BTreeSet<Face>> = vec![BTreeSet::new(); self.dim + 1];
            for f in &self.facets {
                for size in 1..=f.len() {
                    for s in f.subfaces(size) {
                        per_dim[size - 1].insert(s);
                    }
                }
            }
            per_dim.into_iter().map(|s| s.into_iter().collect()).collect()
        })
    }

    /// All faces of dimension `k`, sorted.
    pub fn faces(&self, k: usize) -> &[Face] {
        self.face_table().get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn all_faces(&self) -> impl Iterator<Item = &Face> {
        self.face_table().iter().flatten()
    }

    pub fn has_face(&self, f: &Face) -> bool {
        if f.is_empty() {
            return !self.is_empty();
        }
        self.faces(f.len() - 1).binary_search(f).is_ok()
    }

    pub fn has_facet(&self, f: &Face) -> bool {
        self.facets.binary_search(f).is_ok()
    }

    pub fn f_vector(&self) -> FVector {
        FVector((0..=self.dim).map(|k| self.faces(k).len()).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    fn require_face(&self, f: &Face) -> Result<(), ComplexError> {
        if f.is_empty() || !self.has_face(f) {
            return Err(ComplexError::NotAFace(f.clone()));
        }
        Ok(())
    }

    /// `{G \ F : G facet, F ⊆ G}`. The link of a facet is the empty complex.
    pub fn link(&self, f: &Face) -> Result<SimplicialComplex, ComplexError> {
        self.require_face(f)?;
        let faces: Vec<Face> =
            self.facets.iter().filter(|g| f.is_subset(g)).map(|g| g.difference(f)).filter(|g| !g.is_empty()).collect();
        if self.pure {
            let d = self.dim.saturating_sub(f.len());
            Ok(Self::from_facets_unchecked(faces, d))
        } else {
            Ok(Self::generated_by(faces))
        }
    }

    /// Facets containing `f` (the closed star).
    pub fn star_closed(&self, f: &Face) -> Result<SimplicialComplex, ComplexError> {
        self.require_face(f)?;
        let faces = self.facets.iter().filter(|g| f.is_subset(g)).cloned().collect();
        Ok(self.with_facets(faces))
    }

    /// Facets not containing `f`. May be empty.
    pub fn delete_star(&self, f: &Face) -> Result<SimplicialComplex, ComplexError> {
        self.require_face(f)?;
        let faces = self.facets.iter().filter(|g| !f.is_subset(g)).cloned().collect();
        Ok(self.with_facets(faces))
    }

    /// Same dimension, different facet list (which must be a subset-style
    /// modification of a pure complex).
    pub(crate) fn with_facets(&self, facets: Vec<Face>) -> SimplicialComplex {
        if self.pure {
            Self::from_facets_unchecked(facets, self.dim)
        } else {
            Self::generated_by(facets)
        }
    }

    /// Number of facets containing each ridge.
    pub fn ridge_degrees(&self) -> HashMap<Face, usize> {
        let mut count = HashMap::new();
        for f in &self.facets {
            for r in f.ridges() {
                *count.entry(r).or_insert(0) += 1;
            }
        }
        count
    }

    /// The complex generated by ridges lying in exactly one facet. Empty
    /// exactly when the complex has no boundary.
    pub fn boundary_complex(&self) -> SimplicialComplex {
        if self.dim == 0 {
            return Self::empty(0);
        }
        let ridges: Vec<Face> = self.ridge_degrees().into_iter().filter(|(_, n)| *n == 1).map(|(r, _)| r).collect();
        Self::from_facets_unchecked(ridges, self.dim - 1)
    }

    /// Whether the facet-ridge graph is connected.
    pub fn is_strongly_connected(&self) -> bool {
        if self.facets.len() <= 1 {
            return true;
        }
        let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
        for (i, f) in self.facets.iter().enumerate() {
            for r in f.ridges() {
                by_ridge.entry(r).or_default().push(i);
            }
        }
        let mut seen = vec![false; self.facets.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(i) = queue.pop_front() {
            for r in self.facets[i].ridges() {
                for &j in &by_ridge[&r] {
                    if !seen[j] {
                        seen[j] = true;
                        count += 1;
                        queue.push_back(j);
                    }
                }
            }
        }
        count == self.facets.len()
    }

    /// Whether the 1-skeleton (equivalently the complex) is connected.
    pub fn is_connected(&self) -> bool {
        let verts = self.vertices();
        if verts.len() <= 1 {
            return true;
        }
        let index: HashMap<Vertex, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for f in &self.facets {
            let a = index[&f.0[0]];
            for v in &f.0[1..] {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, index[v]));
                parent[ra] = rb;
            }
        }
        let root = find(&mut parent, 0);
        (0..verts.len()).all(|i| find(&mut parent, i) == root)
    }

    pub fn pseudomanifold_status(&self) -> Pseudomanifold {
        if !self.pure || self.is_empty() || !self.is_strongly_connected() {
            return Pseudomanifold::No;
        }
        if self.dim == 0 {
            return if self.facets.len() == 1 { Pseudomanifold::WithBoundary } else { Pseudomanifold::No };
        }
        let degrees = self.ridge_degrees();
        if degrees.values().any(|&n| n > 2) {
            Pseudomanifold::No
        } else if degrees.values().all(|&n| n == 2) {
            Pseudomanifold::Closed
        } else {
            Pseudomanifold::WithBoundary
        }
    }

    /// Applies a vertex relabeling. Unmapped vertices keep their label; the map
    /// must be injective on the vertex set.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> SimplicialComplex {
        let facets = self.facets.iter().map(|f| f.map(|v| *map.get(&v).unwrap_or(&v))).collect();
        self.with_facets(facets)
    }

    /// Union of facet sets; the result is revalidated as an antichain.
    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let all = self.facets.iter().chain(other.facets.iter()).cloned();
        if self.pure && other.pure && self.dim == other.dim {
            Self::from_facets_unchecked(all.collect(), self.dim)
        } else {
            Self::generated_by(all)
        }
    }
}
