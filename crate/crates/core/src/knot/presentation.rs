//! Finitely presented groups.
//!
//! Letters are signed, 1-based generator numbers: `3` is the third generator
//! and `-3` its inverse.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::IntegerMatrix;

pub type Word = Vec<i32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    pub generators: usize,
    pub relators: Vec<Word>,
}

/// Free reduction followed by cyclic reduction.
pub fn cyclically_reduce(w: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    let mut start = 0;
    let mut end = out.len();
    while end - start >= 2 && out[start] == -out[end - 1] {
        start += 1;
        end -= 1;
    }
    out[start..end].to_vec()
}

pub fn inverse(w: &[i32]) -> Word {
    w.iter().rev().map(|x| -x).collect()
}

/// Lexicographically least rotation of the word or of its inverse.
fn normalize(w: &[i32]) -> Word {
    let mut best = w.to_vec();
    for cand in [w.to_vec(), inverse(w)] {
        for k in 0..cand.len() {
            let mut r = cand[k..].to_vec();
            r.extend_from_slice(&cand[..k]);
            if r < best {
                best = r;
            }
        }
    }
    best
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<Word>) -> Self {
        debug_assert!(relators.iter().flatten().all(|&x| x != 0 && x.unsigned_abs() as usize <= generators));
        GroupPresentation { generators, relators }
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    /// Tietze simplification: reduces relators, drops trivial and duplicate
    /// ones, and eliminates a generator occurring exactly once in a relator,
    /// shortest relator first, until none is left. Generators are renumbered
    /// consecutively at the end.
    pub fn simplify(&self) -> GroupPresentation {
        let mut rels: Vec<Word> = self.relators.iter().map(|r| cyclically_reduce(r)).collect();
        let mut alive = vec![true; self.generators];
        loop {
            tidy(&mut rels);
            let Some((ri, pos)) = find_elimination(&rels) else { break };
            let r = rels.swap_remove(ri);
            let x = r[pos];
            let g = x.unsigned_abs() as usize;
            // r = u x v, so x = u^-1 v^-1; for an inverse letter x^-1 = u^-1 v^-1.
            let mut value = inverse(&r[..pos]);
            value.extend(inverse(&r[pos + 1..]));
            if x < 0 {
                value = inverse(&value);
            }
            let value_inv = inverse(&value);
            for rel in rels.iter_mut() {
                if rel.iter().any(|y| y.unsigned_abs() as usize == g) {
                    let mut out = Vec::with_capacity(rel.len() + value.len());
                    for &y in rel.iter() {
                        if y == g as i32 {
                            out.extend_from_slice(&value);
                        } else if y == -(g as i32) {
                            out.extend_from_slice(&value_inv);
                        } else {
                            out.push(y);
                        }
                    }
                    *rel = cyclically_reduce(&out);
                }
            }
            alive[g - 1] = false;
        }
        let mut renumber = vec![0i32; self.generators];
        let mut next = 0;
        for (i, a) in alive.iter().enumerate() {
            if *a {
                next += 1;
                renumber[i] = next;
            }
        }
        let relators = rels
            .iter()
            .map(|r| r.iter().map(|&y| renumber[y.unsigned_abs() as usize - 1] * y.signum()).collect())
            .collect();
        let mut p = GroupPresentation { generators: next as usize, relators };
        tidy(&mut p.relators);
        p
    }

    /// Rank of the free part and the nontrivial torsion coefficients of the
    /// abelianization.
    pub fn abelianization(&self) -> (usize, Vec<num_bigint::BigInt>) {
        if self.relators.is_empty() || self.generators == 0 {
            return (self.generators, Vec::new());
        }
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators];
                for &x in r {
                    row[x.unsigned_abs() as usize - 1] += x.signum() as i64;
                }
                row
            })
            .collect();
        let snf = IntegerMatrix::from_rows(&rows).smith_normal_form();
        let nonzero: Vec<_> = snf.invariant_factors.iter().filter(|d| !d.is_zero()).cloned().collect();
        let torsion = nonzero.iter().filter(|d| !d.is_one()).cloned().collect();
        (self.generators - nonzero.len(), torsion)
    }
}

fn tidy(rels: &mut Vec<Word>) {
    for r in rels.iter_mut() {
        *r = normalize(&cyclically_reduce(r));
    }
    rels.retain(|r| !r.is_empty());
    rels.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    rels.dedup();
}

/// Shortest relator with a generator that occurs in it exactly once, and
/// that occurrence. `rels` is sorted by length.
fn find_elimination(rels: &[Word]) -> Option<(usize, usize)> {
    for (ri, r) in rels.iter().enumerate() {
        let mut best: Option<usize> = None;
        for (pos, &x) in r.iter().enumerate() {
            let g = x.unsigned_abs();
            if r.iter().filter(|y| y.unsigned_abs() == g).count() == 1 && best.is_none_or(|b| g < r[b].unsigned_abs()) {
                best = Some(pos);
            }
        }
        if let Some(pos) = best {
            return Some((ri, pos));
        }
    }
    None
}

fn letter(x: i32) -> String {
    let base = if x.unsigned_abs() <= 26 {
        ((b'a' + (x.unsigned_abs() - 1) as u8) as char).to_string()
    } else {
        format!("x{}", x.unsigned_abs())
    };
    if x < 0 {
        format!("{base}^-1")
    } else {
        base
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generators as i32).map(letter).collect();
        let rels: Vec<String> =
            self.relators.iter().map(|r| r.iter().map(|&x| letter(x)).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        assert_eq!(cyclically_reduce(&[1, 2, -2, 3, -1]), vec![3]);
        assert_eq!(cyclically_reduce(&[1, -1]), Vec::<i32>::new());
        assert_eq!(normalize(&[2, 1]), vec![-2, -1]);
    }

    #[test]
    fn eliminates_defined_generators() {
        // <a, b, c | c = ab, aba = bab, cc^-1> collapses to the braid relator.
        let p = GroupPresentation::new(3, vec![vec![3, -2, -1], vec![1, 2, 1, -2, -1, -2]]);
        let s = p.simplify();
        assert_eq!(s.generators, 2);
        assert_eq!(s.relators.len(), 1);
        let s3 = super::super::group::FiniteGroup::symmetric3();
        assert_eq!(super::super::group::count_homs(&s, &s3, 8), Ok(12));
    }

    #[test]
    fn abelianization_of_trefoil_group() {
        let p = GroupPresentation::new(2, vec![vec![1, 2, 1, -2, -1, -2]]);
        assert_eq!(p.abelianization(), (1, vec![]));
        let z2 = GroupPresentation::new(1, vec![vec![1, 1]]);
        assert_eq!(z2.abelianization(), (0, vec![2.into()]));
    }

    #[test]
    fn display() {
        let p = GroupPresentation::new(2, vec![vec![1, -2]]);
        assert_eq!(p.to_string(), "< a, b | a b^-1 >");
    }
}
