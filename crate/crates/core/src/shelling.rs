//! Shellings, free facets and constructibility.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{homology, HomologyKind};
use crate::complex::{Face, SimplicialComplex, Vertex};
use crate::iso::canonical_form;
use crate::moves::remove_facet;
use crate::recognition::{verify_ball3, RecognitionConfig, Verdict, Witness};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShellingError {
    #[error("not a 3-ball: {0}")]
    NotABall(Witness),
    #[error("ball recognition was inconclusive for {0}")]
    Undecided(String),
}

/// A facet order together with, for every facet after the first, the ridges
/// it shares with the facets before it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingCertificate {
    pub order: Vec<Face>,
    pub ridges: Vec<Vec<Face>>,
}

impl ShellingCertificate {
    /// Checks the order against the definition, independently of the search.
    pub fn verify(&self, c: &SimplicialComplex) -> bool {
        let mut sorted = self.order.clone();
        sorted.sort();
        if sorted != c.facets() || self.ridges.len() + 1 != self.order.len().max(1) {
            return false;
        }
        for (i, f) in self.order.iter().enumerate().skip(1) {
            let earlier = &self.order[..i];
            let shared: Vec<Face> = f.ridges().filter(|r| earlier.iter().any(|g| r.is_subset(g))).collect();
            if shared.is_empty() || shared != self.ridges[i - 1] {
                return false;
            }
            let pure = earlier.iter().all(|g| {
                let meet = f.intersection(g);
                meet.is_empty() || shared.iter().any(|r| meet.is_subset(r))
            });
            if !pure {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingResult {
    Shellable(ShellingCertificate),
    NotShellable { nodes: usize },
    Unknown { nodes: usize },
}

impl ShellingResult {
    pub fn label(&self) -> &'static str {
        match self {
            ShellingResult::Shellable(_) => "shellable",
            ShellingResult::NotShellable { .. } => "not_shellable",
            ShellingResult::Unknown { .. } => "unknown",
        }
    }
}

/// Small fixed-width bitset over facet indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
}

/// Ridge adjacency of a pure complex: `across[i][k]` is the facet sharing the
/// ridge of facet `i` opposite its `k`-th vertex, if any.
struct Adjacency {
    facets: Vec<Face>,
    across: Vec<Vec<Vec<usize>>>,
    meets: Vec<Vec<usize>>,
}

impl Adjacency {
    fn new(facets: &[Face]) -> Self {
        let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
        for (i, f) in facets.iter().enumerate() {
            for r in f.ridges() {
                by_ridge.entry(r).or_default().push(i);
            }
        }
        let across = facets
            .iter()
            .enumerate()
            .map(|(i, f)| {
                f.vertices()
                    .iter()
                    .map(|&v| by_ridge[&f.without(v)].iter().copied().filter(|&j| j != i).collect())
                    .collect()
            })
            .collect();
        let mut by_vertex: HashMap<Vertex, Vec<usize>> = HashMap::new();
        for (i, f) in facets.iter().enumerate() {
            for &v in f.vertices() {
                by_vertex.entry(v).or_default().push(i);
            }
        }
        let meets = facets
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let mut m: Vec<usize> =
                    f.vertices().iter().flat_map(|v| by_vertex[v].iter().copied()).filter(|&j| j != i).collect();
                m.sort_unstable();
                m.dedup();
                m
            })
            .collect();
        Adjacency { facets: facets.to_vec(), across, meets }
    }

    /// Positions `k` such that the ridge opposite vertex `k` of facet `i` is
    /// already covered, or `None` if facet `i` cannot be attached next.
    fn attachable(&self, i: usize, used: &Bits) -> Option<Vec<usize>> {
        let f = &self.facets[i];
        let covered: Vec<usize> = (0..f.len()).filter(|&k| self.across[i][k].iter().any(|&j| used.get(j))).collect();
        if covered.is_empty() {
            return None;
        }
        let ok = self.meets[i].iter().filter(|&&j| used.get(j)).all(|&j| {
            let g = &self.facets[j];
            covered.iter().any(|&k| !g.contains(f.vertices()[k]))
        });
        ok.then_some(covered)
    }
}

struct ShellSearch<'a> {
    adj: &'a Adjacency,
    dead: HashSet<Bits>,
    nodes: usize,
    budget: usize,
    order: Vec<usize>,
    ridges: Vec<Vec<usize>>,
}

enum Outcome {
    Found,
    Dead,
    OutOfBudget,
}

impl ShellSearch<'_> {
    fn extend(&mut self, used: &mut Bits) -> Outcome {
        let n = self.adj.facets.len();
        if self.order.len() == n {
            return Outcome::Found;
        }
        if self.dead.contains(used) {
            return Outcome::Dead;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Outcome::OutOfBudget;
        }
        let mut candidates: Vec<(usize, Vec<usize>)> =
            (0..n).filter(|&i| !used.get(i)).filter_map(|i| self.adj.attachable(i, used).map(|c| (i, c))).collect();
        candidates.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));
        for (i, covered) in candidates {
            used.set(i);
            self.order.push(i);
            self.ridges.push(covered);
            match self.extend(used) {
                Outcome::Found => return Outcome::Found,
                Outcome::OutOfBudget => return Outcome::OutOfBudget,
                Outcome::Dead => {}
            }
            used.clear(i);
            self.order.pop();
            self.ridges.pop();
        }
        self.dead.insert(used.clone());
        Outcome::Dead
    }
}

/// Exhaustive backtracking for a shelling, counted in node expansions.
pub fn find_shelling(c: &SimplicialComplex, budget: usize) -> ShellingResult {
    let adj = Adjacency::new(c.facets());
    let n = adj.facets.len();
    let mut search =
        ShellSearch { adj: &adj, dead: HashSet::new(), nodes: 0, budget, order: Vec::new(), ridges: Vec::new() };
    if n == 0 || !c.is_pure() {
        return ShellingResult::NotShellable { nodes: 0 };
    }
    for first in 0..n {
        let mut used = Bits::new(n);
        used.set(first);
        search.order = vec![first];
        search.ridges.clear();
        match search.extend(&mut used) {
            Outcome::Found => {
                let order: Vec<Face> = search.order.iter().map(|&i| adj.facets[i].clone()).collect();
                let ridges = search
                    .order
                    .iter()
                    .skip(1)
                    .zip(&search.ridges)
                    .map(|(&i, ks)| {
                        let f = &adj.facets[i];
                        let opposite: Vec<Face> = ks.iter().map(|&k| f.without(f.vertices()[k])).collect();
                        f.ridges().filter(|r| opposite.contains(r)).collect()
                    })
                    .collect();
                return ShellingResult::Shellable(ShellingCertificate { order, ridges });
            }
            Outcome::OutOfBudget => return ShellingResult::Unknown { nodes: search.nodes.min(budget) },
            Outcome::Dead => {}
        }
    }
    ShellingResult::NotShellable { nodes: search.nodes }
}

fn require_ball(b: &SimplicialComplex, config: &RecognitionConfig) -> Result<(), ShellingError> {
    match verify_ball3(b, config) {
        Verdict::Yes(_) => Ok(()),
        Verdict::No(w) => Err(ShellingError::NotABall(w)),
        Verdict::Unknown { .. } => Err(ShellingError::Undecided("the input".into())),
    }
}

/// Facets whose removal leaves a 3-ball. A single tetrahedron reports its
/// only facet.
pub fn free_facets(b: &SimplicialComplex, config: &RecognitionConfig) -> Result<Vec<Face>, ShellingError> {
    require_ball(b, config)?;
    if b.num_facets() == 1 {
        return Ok(b.facets().to_vec());
    }
    let verdicts: Vec<(Face, Result<bool, ShellingError>)> = b
        .facets()
        .par_iter()
        .map(|f| {
            let rest = remove_facet(b, f).expect("facet of b");
            let v = match verify_ball3(&rest, config) {
                Verdict::Yes(_) => Ok(true),
                Verdict::No(_) => Ok(false),
                Verdict::Unknown { .. } => Err(ShellingError::Undecided(format!("removal of {f}"))),
            };
            (f.clone(), v)
        })
        .collect();
    let mut free = Vec::new();
    for (f, v) in verdicts {
        if v? {
            free.push(f);
        }
    }
    Ok(free)
}

/// A 3-ball without free facets.
pub fn is_strongly_nonshellable(b: &SimplicialComplex, config: &RecognitionConfig) -> Result<bool, ShellingError> {
    Ok(free_facets(b, config)?.is_empty())
}

/// Witness for constructibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructibilityTree {
    /// A single simplex.
    Simplex(Face),
    /// A nonempty set of points.
    Points(Vec<Face>),
    /// Two constructible parts glued along a constructible complex of one
    /// dimension less.
    Join {
        left: Box<ConstructibilityTree>,
        right: Box<ConstructibilityTree>,
        intersection: SimplicialComplex,
        intersection_tree: Box<ConstructibilityTree>,
    },
}

impl ConstructibilityTree {
    pub fn facets(&self) -> Vec<Face> {
        match self {
            ConstructibilityTree::Simplex(f) => vec![f.clone()],
            ConstructibilityTree::Points(ps) => ps.clone(),
            ConstructibilityTree::Join { left, right, .. } => {
                let mut all = left.facets();
                all.extend(right.facets());
                all.sort();
                all
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            ConstructibilityTree::Join { left, right, intersection_tree, .. } => {
                1 + left.depth().max(right.depth()).max(intersection_tree.depth())
            }
            _ => 0,
        }
    }

    fn relabel(&self, map: &std::collections::BTreeMap<Vertex, Vertex>) -> ConstructibilityTree {
        let m = |f: &Face| f.map(|v| map[&v]);
        match self {
            ConstructibilityTree::Simplex(f) => ConstructibilityTree::Simplex(m(f)),
            ConstructibilityTree::Points(ps) => {
                let mut ps: Vec<Face> = ps.iter().map(m).collect();
                ps.sort();
                ConstructibilityTree::Points(ps)
            }
            ConstructibilityTree::Join { left, right, intersection, intersection_tree } => ConstructibilityTree::Join {
                left: Box::new(left.relabel(map)),
                right: Box::new(right.relabel(map)),
                intersection: intersection.relabel(map),
                intersection_tree: Box::new(intersection_tree.relabel(map)),
            },
        }
    }

    /// Checks the tree against `c` from the definition alone.
    pub fn verify(&self, c: &SimplicialComplex) -> bool {
        if !c.is_pure() || c.is_empty() || self.facets() != c.facets() {
            return false;
        }
        match self {
            ConstructibilityTree::Simplex(_) => c.num_facets() == 1,
            ConstructibilityTree::Points(_) => c.dim() == 0,
            ConstructibilityTree::Join { left, right, intersection, intersection_tree } => {
                let (Ok(a), Ok(b)) = (SimplicialComplex::new(left.facets()), SimplicialComplex::new(right.facets()))
                else {
                    return false;
                };
                let disjoint = a.facets().iter().all(|f| !b.has_facet(f));
                disjoint
                    && a.dim() == c.dim()
                    && b.dim() == c.dim()
                    && c.dim() >= 1
                    && intersection.dim() + 1 == c.dim()
                    && common_faces(&a, &b).as_ref() == Some(intersection)
                    && left.verify(&a)
                    && right.verify(&b)
                    && intersection_tree.verify(intersection)
            }
        }
    }
}

/// The complex of faces common to `a` and `b`, when it is pure of dimension
/// one less than `a`.
fn common_faces(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<SimplicialComplex> {
    let d = a.dim();
    let ridges: Vec<Face> = a.faces(d - 1).iter().filter(|r| b.has_face(r)).cloned().collect();
    if ridges.is_empty() {
        return None;
    }
    let pure = a.facets().iter().all(|f| {
        b.facets().iter().all(|g| {
            let meet = f.intersection(g);
            meet.is_empty() || ridges.iter().any(|r| meet.is_subset(r))
        })
    });
    pure.then(|| SimplicialComplex::new(ridges).expect("nonempty ridge list"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constructibility {
    Yes(ConstructibilityTree),
    No,
    Unknown { nodes: usize },
}

impl Constructibility {
    pub fn label(&self) -> &'static str {
        match self {
            Constructibility::Yes(_) => "yes",
            Constructibility::No => "no",
            Constructibility::Unknown { .. } => "unknown",
        }
    }
}

enum Memo {
    Yes(ConstructibilityTree),
    No,
}

struct ConstructSearch {
    memo: HashMap<Vec<Face>, Memo>,
    nodes: usize,
    budget: usize,
}

impl ConstructSearch {
    fn solve(&mut self, c: &SimplicialComplex) -> Constructibility {
        if c.num_facets() == 1 {
            return Constructibility::Yes(ConstructibilityTree::Simplex(c.facets()[0].clone()));
        }
        if c.dim() == 0 {
            return Constructibility::Yes(ConstructibilityTree::Points(c.facets().to_vec()));
        }
        if !c.is_strongly_connected() || !homology_below_top_vanishes(c) {
            return Constructibility::No;
        }
        let canon = canonical_form(c);
        let key = canon.complex.facets().to_vec();
        let back: std::collections::BTreeMap<Vertex, Vertex> = canon.relabeling.iter().map(|(&a, &b)| (b, a)).collect();
        match self.memo.get(&key) {
            Some(Memo::Yes(t)) => return Constructibility::Yes(t.relabel(&back)),
            Some(Memo::No) => return Constructibility::No,
            None => {}
        }
        let result = self.split(&canon.complex);
        match &result {
            Constructibility::Yes(t) => {
                self.memo.insert(key, Memo::Yes(t.clone()));
            }
            Constructibility::No => {
                self.memo.insert(key, Memo::No);
            }
            Constructibility::Unknown { .. } => {}
        }
        match result {
            Constructibility::Yes(t) => Constructibility::Yes(t.relabel(&back)),
            other => other,
        }
    }

    /// Tries bipartitions by the size of their smaller part, which is grown
    /// as a strongly connected set of facets. Singletons come first, so a
    /// shelling in reverse is found without backtracking.
    fn split(&mut self, c: &SimplicialComplex) -> Constructibility {
        let facets = c.facets();
        let n = facets.len();
        let adj = Adjacency::new(facets);
        let mut incomplete = false;
        let mut tried: HashSet<Vec<usize>> = HashSet::new();
        let mut level: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        for size in 1..=n / 2 {
            if size > 1 {
                level = grow(&adj, &level);
            }
            // Thin interfaces first: peeling a facet off along few ridges is
            // how shellable pieces come apart.
            level.sort_by_key(|part| {
                part.iter().flat_map(|&i| adj.across[i].iter().flatten()).filter(|j| !part.contains(j)).count()
            });
            for part in &level {
                let inside: HashSet<usize> = part.iter().copied().collect();
                let rest: Vec<usize> = (0..n).filter(|i| !inside.contains(i)).collect();
                let key = if 2 * size == n && rest < *part { rest.clone() } else { part.clone() };
                if !tried.insert(key) {
                    continue;
                }
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Constructibility::Unknown { nodes: self.budget };
                }
                let a = SimplicialComplex::new(part.iter().map(|&i| facets[i].clone())).expect("nonempty");
                let b = SimplicialComplex::new(rest.iter().map(|&i| facets[i].clone())).expect("nonempty");
                if !b.is_strongly_connected() {
                    continue;
                }
                let Some(meet) = common_faces(&a, &b) else { continue };
                let mut parts = Vec::with_capacity(3);
                for piece in [&meet, &a, &b] {
                    match self.solve(piece) {
                        Constructibility::Yes(t) => parts.push(t),
                        Constructibility::No => break,
                        Constructibility::Unknown { .. } => {
                            incomplete = true;
                            if self.nodes > self.budget {
                                return Constructibility::Unknown { nodes: self.budget };
                            }
                            break;
                        }
                    }
                }
                if parts.len() == 3 {
                    let right = parts.pop().unwrap();
                    let left = parts.pop().unwrap();
                    let meet_tree = parts.pop().unwrap();
                    return Constructibility::Yes(ConstructibilityTree::Join {
                        left: Box::new(left),
                        right: Box::new(right),
                        intersection: meet,
                        intersection_tree: Box::new(meet_tree),
                    });
                }
            }
        }
        if incomplete {
            Constructibility::Unknown { nodes: self.nodes }
        } else {
            Constructibility::No
        }
    }
}

/// Constructible complexes are homotopy Cohen-Macaulay, so their reduced
/// homology vanishes below the top dimension.
fn homology_below_top_vanishes(c: &SimplicialComplex) -> bool {
    let h = homology(c, HomologyKind::Reduced);
    h.groups.iter().take(c.dim()).all(|g| g.is_trivial())
}

/// Strongly connected facet sets one larger than those in `level`, each once.
fn grow(adj: &Adjacency, level: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut next = Vec::new();
    for set in level {
        let mut ext: Vec<usize> =
            set.iter().flat_map(|&i| adj.across[i].iter().flatten().copied()).filter(|j| !set.contains(j)).collect();
        ext.sort_unstable();
        ext.dedup();
        for j in ext {
            let mut s = set.clone();
            s.push(j);
            s.sort_unstable();
            if seen.insert(s.clone()) {
                next.push(s);
            }
        }
    }
    next
}

/// Budgeted constructibility search, memoized on canonical forms.
pub fn is_constructible(c: &SimplicialComplex, budget: usize) -> Constructibility {
    if c.is_empty() || !c.is_pure() {
        return Constructibility::No;
    }
    let mut search = ConstructSearch { memo: HashMap::new(), nodes: 0, budget };
    search.solve(c)
}
