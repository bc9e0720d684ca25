use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::snf::IntegerMatrix;
use crate::complex::{Face, SimplicialComplex};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomologyKind {
    Reduced,
    Unreduced,
}

/// One integral homology group `Z^betti ⊕ ⊕ Z/t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }

    pub fn is_z(&self) -> bool {
        self.betti == 1 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroups {
    pub kind: HomologyKind,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyGroups {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }

    /// Alternating sum of Betti numbers; for reduced homology this is `χ - 1`.
    pub fn alternating_betti_sum(&self) -> i64 {
        self.groups.iter().enumerate().map(|(k, g)| if k % 2 == 0 { g.betti as i64 } else { -(g.betti as i64) }).sum()
    }

    /// Unreduced homology `(Z, 0, ..., 0, Z)` of a `d`-sphere.
    pub fn is_sphere_like(&self, d: usize) -> bool {
        let (z, zero) = self.sphere_pattern();
        self.groups.len() == d + 1
            && self.groups.iter().enumerate().all(|(k, g)| {
                if k == d || (k == 0 && self.kind == HomologyKind::Unreduced) {
                    *g == z
                } else {
                    *g == zero
                }
            })
    }

    /// Homology of a point.
    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().enumerate().all(|(k, g)| {
            if k == 0 && self.kind == HomologyKind::Unreduced {
                g.is_z()
            } else {
                g.is_trivial()
            }
        })
    }

    fn sphere_pattern(&self) -> (HomologyGroup, HomologyGroup) {
        (HomologyGroup { betti: 1, torsion: vec![] }, HomologyGroup { betti: 0, torsion: vec![] })
    }
}

impl fmt::Display for HomologyGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.groups.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Boundary matrix `∂_k : C_k -> C_{k-1}` in the sorted face bases.
pub fn boundary_matrix(c: &SimplicialComplex, k: usize) -> IntegerMatrix {
    let lower = c.faces(k - 1);
    let upper = c.faces(k);
    let index: HashMap<&Face, usize> = lower.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut m = IntegerMatrix::zeros(lower.len(), upper.len());
    for (j, f) in upper.iter().enumerate() {
        for (i, r) in f.ridges().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            m.set(index[&r], j, BigInt::from(sign));
        }
    }
    m
}

/// Integral homology via Smith normal forms of the boundary matrices.
pub fn homology(c: &SimplicialComplex, kind: HomologyKind) -> HomologyGroups {
    let d = c.dim();
    if c.is_empty() {
        return HomologyGroups { kind, groups: vec![HomologyGroup { betti: 0, torsion: vec![] }; d + 1] };
    }
    // factors[k] = invariant factors of ∂_k, k = 1..=d
    let mut ranks = vec![0usize; d + 2];
    let mut torsion: Vec<Vec<BigInt>> = vec![Vec::new(); d + 1];
    if kind == HomologyKind::Reduced {
        ranks[0] = 1;
    }
    for k in 1..=d {
        let snf = boundary_matrix(c, k).smith_normal_form();
        ranks[k] = snf.rank();
        torsion[k - 1] = snf.invariant_factors.into_iter().filter(|x| !x.is_one()).collect();
    }
    let groups = (0..=d)
        .map(|k| HomologyGroup { betti: c.faces(k).len() - ranks[k] - ranks[k + 1], torsion: torsion[k].clone() })
        .collect();
    HomologyGroups { kind, groups }
}

pub fn euler_characteristic(c: &SimplicialComplex) -> i64 {
    c.f_vector().euler_characteristic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::Face;

    #[test]
    fn two_sphere() {
        let s = SimplicialComplex::simplex_boundary([1, 2, 3, 4]);
        let h = homology(&s, HomologyKind::Unreduced);
        assert_eq!(h.to_string(), "(Z,0,Z)");
        assert!(h.is_sphere_like(2));
        assert_eq!(euler_characteristic(&s), 2);
        let r = homology(&s, HomologyKind::Reduced);
        assert_eq!(r.to_string(), "(0,0,Z)");
        assert!(r.is_sphere_like(2));
    }

    #[test]
    fn simplex_is_acyclic() {
        let h = homology(&SimplicialComplex::simplex([1, 2, 3, 4]), HomologyKind::Reduced);
        assert!(h.is_acyclic());
    }

    #[test]
    fn projective_plane_has_torsion() {
        // 6-vertex RP^2
        let rp2 = SimplicialComplex::new(
            [
                [1, 2, 3],
                [1, 3, 4],
                [1, 4, 5],
                [1, 5, 6],
                [1, 2, 6],
                [2, 3, 5],
                [3, 4, 6],
                [2, 4, 5],
                [3, 5, 6],
                [2, 4, 6],
            ]
            .map(Face::from),
        )
        .unwrap();
        let h = homology(&rp2, HomologyKind::Unreduced);
        assert_eq!(h.to_string(), "(Z,Z/2,0)");
        assert_eq!(euler_characteristic(&rp2), 1);
    }

    #[test]
    fn two_points() {
        let c = SimplicialComplex::new([Face::from([1]), Face::from([2])]).unwrap();
        assert_eq!(homology(&c, HomologyKind::Unreduced).betti_numbers(), vec![2]);
        assert_eq!(homology(&c, HomologyKind::Reduced).betti_numbers(), vec![1]);
    }
}
