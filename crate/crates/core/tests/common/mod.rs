//! Independent reference implementations used as oracles.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use knotcert::knot::GroupPresentation;
use knotcert::{Face, SimplicialComplex};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// A random pure complex on at most `max_vertices` vertices with at most
/// `max_facets` facets of `dim + 1` vertices each.
pub fn random_complex(rng: &mut ChaCha8Rng, dim: usize, max_vertices: u32, max_facets: usize) -> SimplicialComplex {
    let n = rng.gen_range(dim as u32 + 1..=max_vertices);
    let count = rng.gen_range(1..=max_facets);
    let verts: Vec<u32> = (1..=n).collect();
    let facets: Vec<Face> = (0..count).map(|_| Face::new(verts.choose_multiple(rng, dim + 1).copied())).collect();
    SimplicialComplex::new(facets).unwrap()
}

fn subsets(f: &[u32]) -> Vec<Vec<u32>> {
    (1u32..1 << f.len())
        .map(|mask| f.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect())
        .collect()
}

fn is_sub(a: &[u32], b: &[u32]) -> bool {
    a.iter().all(|v| b.contains(v))
}

/// Whether `order` is a shelling, straight from the definition: the faces of
/// each facet lying in an earlier facet form a nonempty complex whose
/// maximal faces all have codimension one.
pub fn is_shelling_order(order: &[Vec<u32>]) -> bool {
    for i in 1..order.len() {
        let f = &order[i];
        let common: Vec<Vec<u32>> =
            subsets(f).into_iter().filter(|s| order[..i].iter().any(|g| is_sub(s, g))).collect();
        if common.is_empty() {
            return false;
        }
        let maximal = common.iter().filter(|s| !common.iter().any(|t| t.len() > s.len() && is_sub(s, t)));
        if maximal.into_iter().any(|s| s.len() + 1 != f.len()) {
            return false;
        }
    }
    true
}

fn permutations(items: &[Vec<u32>]) -> Vec<Vec<Vec<u32>>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x.clone());
            out.push(p);
        }
    }
    out
}

pub fn facet_lists(c: &SimplicialComplex) -> Vec<Vec<u32>> {
    c.facets().iter().map(|f| f.vertices().to_vec()).collect()
}

/// Tries every facet order.
pub fn brute_force_shellable(c: &SimplicialComplex) -> bool {
    permutations(&facet_lists(c)).iter().any(|o| is_shelling_order(o))
}

/// Constructibility straight from the recursive definition, over all
/// bipartitions, with no pruning.
pub fn brute_force_constructible(facets: &[Vec<u32>]) -> bool {
    let mut memo = HashMap::new();
    constructible_rec(facets, &mut memo)
}

fn constructible_rec(facets: &[Vec<u32>], memo: &mut HashMap<Vec<Vec<u32>>, bool>) -> bool {
    let mut key = facets.to_vec();
    key.sort();
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let d1 = facets[0].len();
    let result = if facets.len() == 1 || d1 == 1 {
        true
    } else {
        let n = facets.len();
        (0u32..1 << (n - 1)).any(|mask| {
            let mask = mask << 1 | 1;
            if mask == (1 << n) - 1 {
                return false;
            }
            let a: Vec<Vec<u32>> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| facets[i].clone()).collect();
            let b: Vec<Vec<u32>> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| facets[i].clone()).collect();
            let common: BTreeSet<Vec<u32>> =
                a.iter().flat_map(|f| subsets(f)).filter(|s| b.iter().any(|g| is_sub(s, g))).collect();
            let maximal: Vec<Vec<u32>> =
                common.iter().filter(|s| !common.iter().any(|t| t.len() > s.len() && is_sub(s, t))).cloned().collect();
            !maximal.is_empty()
                && maximal.iter().all(|s| s.len() + 1 == d1)
                && constructible_rec(&maximal, memo)
                && constructible_rec(&a, memo)
                && constructible_rec(&b, memo)
        })
    };
    memo.insert(key, result);
    result
}

/// Isomorphism by trying every bijection of vertex lists.
pub fn brute_force_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    let (va, vb) = (a.vertices(), b.vertices());
    if va.len() != vb.len() || a.num_facets() != b.num_facets() {
        return false;
    }
    let target: BTreeSet<Vec<u32>> = facet_lists(b).into_iter().collect();
    let mut perm: Vec<usize> = (0..vb.len()).collect();
    loop {
        let map: HashMap<u32, u32> = va.iter().enumerate().map(|(i, &v)| (v, vb[perm[i]])).collect();
        let image: BTreeSet<Vec<u32>> = facet_lists(a)
            .iter()
            .map(|f| {
                let mut g: Vec<u32> = f.iter().map(|v| map[v]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        if image == target {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { return false };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The symmetric group on three letters as permutation arrays.
pub fn s3_elements() -> Vec<[usize; 3]> {
    vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
}

pub fn compose(a: [usize; 3], b: [usize; 3]) -> [usize; 3] {
    [b[a[0]], b[a[1]], b[a[2]]]
}

pub fn invert(a: [usize; 3]) -> [usize; 3] {
    let mut r = [0; 3];
    for i in 0..3 {
        r[a[i]] = i;
    }
    r
}

/// Homomorphisms into S3 by enumerating every tuple of generator images.
pub fn brute_force_s3_homs(p: &GroupPresentation) -> usize {
    let els = s3_elements();
    let g = p.generators;
    let mut count = 0;
    for code in 0..6usize.pow(g as u32) {
        let images: Vec<[usize; 3]> = (0..g).map(|i| els[code / 6usize.pow(i as u32) % 6]).collect();
        let ok = p.relators.iter().all(|r| {
            let v = r.iter().fold([0, 1, 2], |acc, &x| {
                let e = images[x.unsigned_abs() as usize - 1];
                compose(acc, if x > 0 { e } else { invert(e) })
            });
            v == [0, 1, 2]
        });
        count += ok as usize;
    }
    count
}

pub fn random_presentation(rng: &mut ChaCha8Rng) -> GroupPresentation {
    let g = rng.gen_range(1..=4usize);
    let r = rng.gen_range(0..=3usize);
    let relators = (0..r)
        .map(|_| {
            let len = rng.gen_range(1..=6);
            (0..len)
                .map(|_| {
                    let x = rng.gen_range(1..=g as i32);
                    if rng.gen_bool(0.5) {
                        x
                    } else {
                        -x
                    }
                })
                .collect()
        })
        .collect();
    GroupPresentation::new(g, relators)
}
