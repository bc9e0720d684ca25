//! Finite groups given by multiplication tables, and homomorphisms from
//! presented groups into them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use super::presentation::GroupPresentation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed group table: {0}")]
    Parse(String),
    #[error("table does not define a group: {0}")]
    NotAGroup(String),
    #[error("unknown group {0}")]
    UnknownGroup(String),
    #[error("{found} generators exceed the cap of {cap}")]
    TooManyGenerators { found: usize, cap: usize },
}

/// A finite group with elements `0..n` and `mul[a][b] = a·b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    mul: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(name: &str, mul: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = mul.len();
        if n == 0 || mul.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return Err(GroupError::NotAGroup("table is not square over 0..n".into()));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| GroupError::NotAGroup("no identity".into()))?;
        let inv = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul[a][b] == identity && mul[b][a] == identity)
                    .ok_or_else(|| GroupError::NotAGroup(format!("element {a} has no inverse")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(GroupError::NotAGroup(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name: name.to_string(), mul, identity, inv })
    }

    /// Group generated by permutations of `0..k`, elements in lexicographic order.
    pub fn from_permutations(name: &str, gens: &[Vec<usize>]) -> Self {
        let k = gens[0].len();
        let id: Vec<usize> = (0..k).collect();
        let mut elems: BTreeSet<Vec<usize>> = BTreeSet::from([id]);
        let mut frontier: Vec<Vec<usize>> = elems.iter().cloned().collect();
        while let Some(p) = frontier.pop() {
            for g in gens {
                let q: Vec<usize> = (0..k).map(|i| g[p[i]]).collect();
                if elems.insert(q.clone()) {
                    frontier.push(q);
                }
            }
        }
        let list: Vec<Vec<usize>> = elems.into_iter().collect();
        let index = |p: &Vec<usize>| list.binary_search(p).expect("closed under composition");
        // a·b means apply a, then b.
        let mul =
            list.iter().map(|a| list.iter().map(|b| index(&(0..k).map(|i| b[a[i]]).collect())).collect()).collect();
        FiniteGroup::from_table(name, mul).expect("permutation groups are groups")
    }

    pub fn symmetric3() -> Self {
        Self::from_permutations("S3", &[vec![1, 0, 2], vec![1, 2, 0]])
    }

    pub fn alternating4() -> Self {
        Self::from_permutations("A4", &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
    }

    pub fn dihedral4() -> Self {
        Self::from_permutations("D4", &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]])
    }

    pub fn builtin(name: &str) -> Result<Self, GroupError> {
        match name {
            "S3" => Ok(Self::symmetric3()),
            "A4" => Ok(Self::alternating4()),
            "D4" => Ok(Self::dihedral4()),
            other => Err(GroupError::UnknownGroup(other.to_string())),
        }
    }

    pub fn default_targets() -> Vec<FiniteGroup> {
        vec![Self::symmetric3(), Self::alternating4(), Self::dihedral4()]
    }

    /// Parses `n` followed by `n` rows of `n` element indices.
    pub fn parse(name: &str, text: &str) -> Result<Self, GroupError> {
        let mut nums = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace)
            .map(|t| t.parse::<usize>().map_err(|_| GroupError::Parse(format!("bad entry {t:?}"))));
        let n = nums.next().ok_or_else(|| GroupError::Parse("empty input".into()))??;
        let entries: Vec<usize> = nums.collect::<Result<_, _>>()?;
        if entries.len() != n * n {
            return Err(GroupError::Parse(format!("expected {} entries, found {}", n * n, entries.len())));
        }
        Self::from_table(name, entries.chunks(n).map(<[usize]>::to_vec).collect())
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul[a][b] == self.mul[b][a]
    }

    /// Value of a word under generator images.
    pub fn evaluate(&self, word: &[i32], images: &[usize]) -> usize {
        word.iter().fold(self.identity, |acc, &x| {
            let g = images[x.unsigned_abs() as usize - 1];
            self.mul[acc][if x > 0 { g } else { self.inv[g] }]
        })
    }

    /// Whether the images satisfy every relator.
    pub fn is_hom(&self, p: &GroupPresentation, images: &[usize]) -> bool {
        images.len() == p.generators && p.relators.iter().all(|r| self.evaluate(r, images) == self.identity)
    }

    fn is_nonabelian_image(&self, images: &[usize]) -> bool {
        images.iter().enumerate().any(|(i, &a)| images[i + 1..].iter().any(|&b| !self.commute(a, b)))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order())?;
        for row in &self.mul {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for FiniteGroup {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse("G", s)
    }
}

/// Relators bucketed by the last generator they mention, so each is checked
/// as soon as all its letters have images.
fn relators_by_last(p: &GroupPresentation) -> Vec<Vec<&[i32]>> {
    let mut by_last = vec![Vec::new(); p.generators];
    for r in &p.relators {
        if let Some(m) = r.iter().map(|x| x.unsigned_abs() as usize).max() {
            by_last[m - 1].push(r.as_slice());
        }
    }
    by_last
}

struct Enumerator<'a> {
    group: &'a FiniteGroup,
    by_last: Vec<Vec<&'a [i32]>>,
}

impl Enumerator<'_> {
    fn consistent(&self, images: &[usize]) -> bool {
        let k = images.len() - 1;
        self.by_last[k].iter().all(|r| self.group.evaluate(r, images) == self.group.identity)
    }

    fn count(&self, images: &mut Vec<usize>, g: usize) -> u64 {
        if !self.consistent(images) {
            return 0;
        }
        if images.len() == g {
            return 1;
        }
        let mut total = 0;
        for x in 0..self.group.order() {
            images.push(x);
            total += self.count(images, g);
            images.pop();
        }
        total
    }

    fn first_nonabelian(&self, images: &mut Vec<usize>, g: usize) -> bool {
        if !self.consistent(images) {
            return false;
        }
        if images.len() == g {
            return self.group.is_nonabelian_image(images);
        }
        for x in 0..self.group.order() {
            images.push(x);
            if self.first_nonabelian(images, g) {
                return true;
            }
            images.pop();
        }
        false
    }
}

/// Number of homomorphisms from the presented group into `group`.
pub fn count_homs(p: &GroupPresentation, group: &FiniteGroup, cap: usize) -> Result<u64, GroupError> {
    if p.generators > cap {
        return Err(GroupError::TooManyGenerators { found: p.generators, cap });
    }
    if p.generators == 0 {
        return Ok(1);
    }
    let e = Enumerator { group, by_last: relators_by_last(p) };
    Ok((0..group.order()).into_par_iter().map(|x| e.count(&mut vec![x], p.generators)).sum())
}

/// Generator images of the lexicographically first homomorphism whose image
/// is non-abelian.
pub fn find_nonabelian_hom(
    p: &GroupPresentation,
    group: &FiniteGroup,
    cap: usize,
) -> Result<Option<Vec<usize>>, GroupError> {
    if p.generators > cap {
        return Err(GroupError::TooManyGenerators { found: p.generators, cap });
    }
    if p.generators < 2 {
        return Ok(None);
    }
    let e = Enumerator { group, by_last: relators_by_last(p) };
    Ok((0..group.order()).into_par_iter().find_map_first(|x| {
        let mut images = vec![x];
        e.first_nonabelian(&mut images, p.generators).then_some(images)
    }))
}
