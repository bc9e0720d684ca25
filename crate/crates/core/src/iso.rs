//! Canonical labeling, isomorphism testing and automorphism groups.
//!
//! Vertices are colored by the f-vector of their link, and the coloring is
//! refined using the colors of facet-mates until it stabilizes. Ties are broken by
//! individualizing vertices one at a time. The automorphism group is built
//! along the first branch as a stabilizer chain, and its generators prune the
//! search for the lexicographically smallest relabeled facet list.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::complex::{Face, SimplicialComplex, Vertex};

/// A vertex permutation, stored as a map that is the identity off its support.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(pub BTreeMap<Vertex, Vertex>);

impl Permutation {
    pub fn apply(&self, v: Vertex) -> Vertex {
        *self.0.get(&v).unwrap_or(&v)
    }

    pub fn from_cycles(cycles: &[&[Vertex]]) -> Self {
        let mut map = BTreeMap::new();
        for cycle in cycles {
            for (i, &v) in cycle.iter().enumerate() {
                map.insert(v, cycle[(i + 1) % cycle.len()]);
            }
        }
        Permutation(map)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|(a, b)| a == b)
    }

    pub fn cycles(&self) -> Vec<Vec<Vertex>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for &start in self.0.keys() {
            if seen.contains(&start) || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen.insert(start);
            let mut v = self.apply(start);
            while v != start {
                seen.insert(v);
                cycle.push(v);
                v = self.apply(v);
            }
            out.push(cycle);
        }
        out
    }

    /// Whether the permutation maps the facet set of `c` onto itself.
    pub fn preserves(&self, c: &SimplicialComplex) -> bool {
        c.relabel(&self.0) == *c
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    pub generators: Vec<Permutation>,
    pub order: u128,
}

#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// The complex relabeled onto `1..=n`.
    pub complex: SimplicialComplex,
    /// Original label to canonical label.
    pub relabeling: BTreeMap<Vertex, Vertex>,
}

/// Index-based view of a complex used by the search.
struct Incidence {
    labels: Vec<Vertex>,
    facets: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
    facet_set: HashSet<Vec<usize>>,
}

impl Incidence {
    fn new(c: &SimplicialComplex) -> Self {
        let labels = c.vertices();
        let index: BTreeMap<Vertex, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let facets: Vec<Vec<usize>> =
            c.facets().iter().map(|f| f.vertices().iter().map(|v| index[v]).collect()).collect();
        let mut incident = vec![Vec::new(); labels.len()];
        for (i, f) in facets.iter().enumerate() {
            for &v in f {
                incident[v].push(i);
            }
        }
        let facet_set = facets.iter().cloned().collect();
        Incidence { labels, facets, incident, facet_set }
    }

    fn n(&self) -> usize {
        self.labels.len()
    }

    fn initial_colors(&self, c: &SimplicialComplex) -> Vec<usize> {
        let invariants: Vec<Vec<usize>> =
            self.labels.iter().map(|&v| c.link(&Face::from([v])).map(|l| l.f_vector().0).unwrap_or_default()).collect();
        rank(&invariants)
    }

    /// Refines until stable; appends one hash per round to `trace`.
    fn refine(&self, mut colors: Vec<usize>, trace: &mut Vec<u64>) -> Vec<usize> {
        let mut classes = count_classes(&colors);
        loop {
            let sigs: Vec<(usize, Vec<Vec<usize>>)> = (0..self.n())
                .map(|v| {
                    let mut around: Vec<Vec<usize>> = self.incident[v]
                        .iter()
                        .map(|&f| {
                            let mut cs: Vec<usize> =
                                self.facets[f].iter().filter(|&&w| w != v).map(|&w| colors[w]).collect();
                            cs.sort_unstable();
                            cs
                        })
                        .collect();
                    around.sort();
                    (colors[v], around)
                })
                .collect();
            let mut sorted: Vec<&(usize, Vec<Vec<usize>>)> = sigs.iter().collect();
            sorted.sort();
            let mut h = DefaultHasher::new();
            sorted.hash(&mut h);
            trace.push(h.finish());
            colors = rank(&sigs);
            let now = count_classes(&colors);
            if now == classes {
                return colors;
            }
            classes = now;
        }
    }

    /// Colors after refining the initial coloring and individualizing `seq` in order.
    fn colors_for(&self, initial: &[usize], seq: &[usize], trace: &mut Vec<u64>) -> Vec<usize> {
        let mut colors = self.refine(initial.to_vec(), trace);
        for &v in seq {
            let split: Vec<usize> = (0..self.n()).map(|w| colors[w] * 2 + usize::from(w != v)).collect();
            colors = self.refine(rank(&split), trace);
        }
        colors
    }

    fn is_automorphism(&self, perm: &[usize]) -> bool {
        self.facets.iter().all(|f| {
            let mut g: Vec<usize> = f.iter().map(|&v| perm[v]).collect();
            g.sort_unstable();
            self.facet_set.contains(&g)
        })
    }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut distinct: Vec<&T> = keys.iter().collect();
    distinct.sort();
    distinct.dedup();
    keys.iter().map(|k| distinct.binary_search(&k).unwrap()).collect()
}

fn count_classes(colors: &[usize]) -> usize {
    colors.iter().collect::<HashSet<_>>().len()
}

/// Vertices of the first color class with more than one member.
fn target_cell(colors: &[usize]) -> Option<Vec<usize>> {
    let mut sizes = BTreeMap::new();
    for &c in colors {
        *sizes.entry(c).or_insert(0) += 1;
    }
    let (&color, _) = sizes.iter().find(|(_, &n)| n > 1)?;
    Some((0..colors.len()).filter(|&v| colors[v] == color).collect())
}

fn orbit_representatives(candidates: &[usize], gens: &[Vec<usize>]) -> Vec<usize> {
    let mut covered = HashSet::new();
    let mut reps = Vec::new();
    for &c in candidates {
        if covered.contains(&c) {
            continue;
        }
        reps.push(c);
        let mut stack = vec![c];
        covered.insert(c);
        while let Some(x) = stack.pop() {
            for g in gens {
                let y = g[x];
                if covered.insert(y) {
                    stack.push(y);
                }
            }
        }
    }
    reps
}

struct Search<'a> {
    inc: &'a Incidence,
    initial: Vec<usize>,
}

impl Search<'_> {
    /// An automorphism mapping `source[i]` to `target[i]` for all `i`, if any.
    fn extend(&self, source: &mut Vec<usize>, target: &mut Vec<usize>) -> Option<Vec<usize>> {
        let (mut ts, mut tt) = (Vec::new(), Vec::new());
        let cs = self.inc.colors_for(&self.initial, source, &mut ts);
        let ct = self.inc.colors_for(&self.initial, target, &mut tt);
        if ts != tt {
            return None;
        }
        match target_cell(&cs) {
            None => {
                let mut by_color = vec![0; cs.len()];
                for (w, &c) in ct.iter().enumerate() {
                    by_color[c] = w;
                }
                let perm: Vec<usize> = cs.iter().map(|&c| by_color[c]).collect();
                self.inc.is_automorphism(&perm).then_some(perm)
            }
            Some(cell) => {
                let x = cell[0];
                let color = cs[x];
                for y in (0..ct.len()).filter(|&y| ct[y] == color) {
                    source.push(x);
                    target.push(y);
                    let found = self.extend(source, target);
                    source.pop();
                    target.pop();
                    if found.is_some() {
                        return found;
                    }
                }
                None
            }
        }
    }

    /// Strong generators along the first branch, and the group order.
    fn automorphisms(&self) -> (Vec<Vec<usize>>, u128) {
        let mut gens: Vec<Vec<usize>> = Vec::new();
        let mut order: u128 = 1;
        let mut base: Vec<usize> = Vec::new();
        loop {
            let colors = self.inc.colors_for(&self.initial, &base, &mut Vec::new());
            let Some(cell) = target_cell(&colors) else { break };
            let b = cell[0];
            let fixing: Vec<Vec<usize>> = gens.iter().filter(|g| base.iter().all(|&p| g[p] == p)).cloned().collect();
            let mut orbit = orbit_of(b, &fixing);
            for &w in &cell {
                if orbit.contains(&w) {
                    continue;
                }
                let mut source: Vec<usize> = base.iter().copied().chain([b]).collect();
                let mut target: Vec<usize> = base.iter().copied().chain([w]).collect();
                if let Some(g) = self.extend(&mut source, &mut target) {
                    gens.push(g);
                    let fixing: Vec<Vec<usize>> =
                        gens.iter().filter(|g| base.iter().all(|&p| g[p] == p)).cloned().collect();
                    orbit = orbit_of(b, &fixing);
                }
            }
            order *= orbit.len() as u128;
            base.push(b);
        }
        (gens, order)
    }

    fn canonical(&self, gens: &[Vec<usize>]) -> Vec<usize> {
        let mut best: Option<(Vec<Vec<usize>>, Vec<usize>)> = None;
        let mut seq = Vec::new();
        self.canonical_rec(&mut seq, gens, &mut best);
        best.expect("search reaches a leaf").1
    }

    fn canonical_rec(
        &self,
        seq: &mut Vec<usize>,
        gens: &[Vec<usize>],
        best: &mut Option<(Vec<Vec<usize>>, Vec<usize>)>,
    ) {
        let colors = self.inc.colors_for(&self.initial, seq, &mut Vec::new());
        match target_cell(&colors) {
            None => {
                let mut image: Vec<Vec<usize>> = self
                    .inc
                    .facets
                    .iter()
                    .map(|f| {
                        let mut g: Vec<usize> = f.iter().map(|&v| colors[v]).collect();
                        g.sort_unstable();
                        g
                    })
                    .collect();
                image.sort();
                if best.as_ref().is_none_or(|(b, _)| image < *b) {
                    *best = Some((image, colors));
                }
            }
            Some(cell) => {
                let fixing: Vec<Vec<usize>> = gens.iter().filter(|g| seq.iter().all(|&p| g[p] == p)).cloned().collect();
                for v in orbit_representatives(&cell, &fixing) {
                    seq.push(v);
                    self.canonical_rec(seq, gens, best);
                    seq.pop();
                }
            }
        }
    }
}

fn orbit_of(b: usize, gens: &[Vec<usize>]) -> HashSet<usize> {
    let mut orbit = HashSet::from([b]);
    let mut stack = vec![b];
    while let Some(x) = stack.pop() {
        for g in gens {
            if orbit.insert(g[x]) {
                stack.push(g[x]);
            }
        }
    }
    orbit
}

fn to_permutation(inc: &Incidence, g: &[usize]) -> Permutation {
    Permutation(inc.labels.iter().enumerate().map(|(i, &v)| (v, inc.labels[g[i]])).collect())
}

pub fn automorphism_group(c: &SimplicialComplex) -> AutomorphismGroup {
    let inc = Incidence::new(c);
    if inc.n() == 0 {
        return AutomorphismGroup { generators: Vec::new(), order: 1 };
    }
    let search = Search { initial: inc.initial_colors(c), inc: &inc };
    let (gens, order) = search.automorphisms();
    AutomorphismGroup { generators: gens.iter().map(|g| to_permutation(&inc, g)).collect(), order }
}

pub fn canonical_form(c: &SimplicialComplex) -> CanonicalForm {
    let inc = Incidence::new(c);
    if inc.n() == 0 {
        return CanonicalForm { complex: c.clone(), relabeling: BTreeMap::new() };
    }
    let search = Search { initial: inc.initial_colors(c), inc: &inc };
    let (gens, _) = search.automorphisms();
    let colors = search.canonical(&gens);
    let relabeling: BTreeMap<Vertex, Vertex> =
        inc.labels.iter().enumerate().map(|(i, &v)| (v, colors[i] as Vertex + 1)).collect();
    CanonicalForm { complex: c.relabel(&relabeling), relabeling }
}

/// A vertex bijection `a -> b` mapping facets onto facets, if one exists.
pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> Option<BTreeMap<Vertex, Vertex>> {
    if a.num_facets() != b.num_facets() || a.num_vertices() != b.num_vertices() || a.f_vector() != b.f_vector() {
        return None;
    }
    let ca = canonical_form(a);
    let cb = canonical_form(b);
    if ca.complex != cb.complex {
        return None;
    }
    let inverse_b: BTreeMap<Vertex, Vertex> = cb.relabeling.iter().map(|(&k, &v)| (v, k)).collect();
    let map: BTreeMap<Vertex, Vertex> = ca.relabeling.iter().map(|(&v, c)| (v, inverse_b[c])).collect();
    (a.relabel(&map) == *b).then_some(map)
}
