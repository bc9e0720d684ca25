//! Elementary collapses through free faces.

use std::collections::BTreeMap;

use crate::complex::{Face, SimplicialComplex};

#[derive(Clone, Copy, Debug)]
pub struct CollapseConfig {
    /// Maximum number of elementary collapses performed across the whole search.
    pub budget: usize,
    /// Number of leading decision points at which alternatives are explored; 0 is greedy.
    pub backtrack_depth: usize,
}

impl Default for CollapseConfig {
    fn default() -> Self {
        CollapseConfig { budget: 1_000_000, backtrack_depth: 0 }
    }
}

/// One elementary collapse: remove `free` and its unique coface `coface`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseStep {
    pub free: Face,
    pub coface: Face,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Collapsibility {
    Yes(Vec<CollapseStep>),
    Unknown { collapses_used: usize },
}

impl Collapsibility {
    pub fn is_yes(&self) -> bool {
        matches!(self, Collapsibility::Yes(_))
    }
}

/// Face set with the number of codimension-one cofaces of each face.
#[derive(Clone)]
struct FaceState {
    cofaces: BTreeMap<Face, usize>,
}

impl FaceState {
    fn new(c: &SimplicialComplex) -> Self {
        let mut cofaces = BTreeMap::new();
        for f in c.all_faces() {
            cofaces.insert(f.clone(), 0);
        }
        for f in c.all_faces() {
            if f.len() > 1 {
                for r in f.ridges() {
                    *cofaces.get_mut(&r).unwrap() += 1;
                }
            }
        }
        FaceState { cofaces }
    }

    /// Free pairs, cofaces of highest dimension first, then lexicographic.
    fn free_pairs(&self) -> Vec<CollapseStep> {
        let mut pairs: Vec<CollapseStep> = self
            .cofaces
            .iter()
            .filter(|(_, &n)| n == 1)
            .map(|(f, _)| {
                let coface = self
                    .cofaces
                    .range(f.clone()..)
                    .chain(self.cofaces.range(..f.clone()))
                    .map(|(g, _)| g)
                    .find(|g| g.len() == f.len() + 1 && f.is_subset(g))
                    .expect("free face has a coface")
                    .clone();
                CollapseStep { free: f.clone(), coface }
            })
            .collect();
        pairs.sort_by(|a, b| {
            b.coface.len().cmp(&a.coface.len()).then_with(|| (&a.free, &a.coface).cmp(&(&b.free, &b.coface)))
        });
        pairs
    }

    fn best_pair(&self) -> Option<CollapseStep> {
        let top = self.cofaces.iter().filter(|(_, &n)| n == 1).map(|(f, _)| f.len()).max()?;
        let free = self.cofaces.iter().find(|(f, &n)| n == 1 && f.len() == top).map(|(f, _)| f.clone())?;
        let coface = self.cofaces.keys().find(|g| g.len() == free.len() + 1 && free.is_subset(g))?.clone();
        Some(CollapseStep { free, coface })
    }

    fn is_free_pair(&self, step: &CollapseStep) -> bool {
        self.cofaces.get(&step.free) == Some(&1)
            && self.cofaces.get(&step.coface) == Some(&0)
            && step.coface.len() == step.free.len() + 1
            && step.free.is_subset(&step.coface)
    }

    fn apply(&mut self, step: &CollapseStep) {
        self.cofaces.remove(&step.free);
        self.cofaces.remove(&step.coface);
        for r in step.coface.ridges() {
            if let Some(n) = self.cofaces.get_mut(&r) {
                *n -= 1;
            }
        }
        if step.free.len() > 1 {
            for r in step.free.ridges() {
                *self.cofaces.get_mut(&r).unwrap() -= 1;
            }
        }
    }

    fn is_point(&self) -> bool {
        self.cofaces.len() == 1
    }
}

/// Greedy collapse with optional bounded backtracking. `Yes` carries a trace
/// ending in a single vertex.
pub fn is_collapsible(c: &SimplicialComplex, config: CollapseConfig) -> Collapsibility {
    if c.is_empty() {
        return Collapsibility::Unknown { collapses_used: 0 };
    }
    let mut used = 0;
    let mut trace = Vec::new();
    if search(FaceState::new(c), config, 0, &mut used, &mut trace) {
        Collapsibility::Yes(trace)
    } else {
        Collapsibility::Unknown { collapses_used: used }
    }
}

fn search(
    mut state: FaceState,
    config: CollapseConfig,
    decisions: usize,
    used: &mut usize,
    trace: &mut Vec<CollapseStep>,
) -> bool {
    loop {
        if state.is_point() {
            return true;
        }
        if *used >= config.budget {
            return false;
        }
        if decisions < config.backtrack_depth {
            let mark = trace.len();
            for step in state.free_pairs() {
                let mut next = state.clone();
                next.apply(&step);
                *used += 1;
                trace.push(step);
                if search(next, config, decisions + 1, used, trace) {
                    return true;
                }
                trace.truncate(mark);
                if *used >= config.budget {
                    return false;
                }
            }
            return false;
        }
        let Some(step) = state.best_pair() else { return false };
        state.apply(&step);
        *used += 1;
        trace.push(step);
    }
}

/// Checks that every step is an elementary collapse at its time and that the
/// result is a single vertex.
pub fn replay_collapse(c: &SimplicialComplex, trace: &[CollapseStep]) -> bool {
    let mut state = FaceState::new(c);
    for step in trace {
        if !state.is_free_pair(step) {
            return false;
        }
        state.apply(step);
    }
    state.is_point()
}
