//! Knot complements and their edge-path group presentations.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::complex::{Face, SimplicialComplex, Vertex};

use super::presentation::GroupPresentation;

/// Barycentric subdivision. Vertex `i` of the result stands for the `i`-th
/// face of `c` in dimension-then-lexicographic order; that list is returned
/// alongside.
pub fn barycentric_subdivision(c: &SimplicialComplex) -> (SimplicialComplex, Vec<Face>) {
    let faces: Vec<Face> = c.all_faces().cloned().collect();
    let label: HashMap<&Face, Vertex> = faces.iter().enumerate().map(|(i, f)| (f, i as Vertex + 1)).collect();
    let mut flags = Vec::new();
    for f in c.facets() {
        let mut chain = Vec::with_capacity(f.len());
        maximal_chains(f, &label, &mut chain, &mut flags);
    }
    let sd = if c.is_pure() {
        SimplicialComplex::new(flags).expect("flags of a pure complex")
    } else {
        SimplicialComplex::generated_by(flags)
    };
    (sd, faces)
}

/// Chains `f = f_k ⊃ f_{k-1} ⊃ … ⊃ f_0` obtained by deleting one vertex at a time.
fn maximal_chains(f: &Face, label: &HashMap<&Face, Vertex>, chain: &mut Vec<Vertex>, out: &mut Vec<Face>) {
    chain.push(label[f]);
    if f.len() == 1 {
        out.push(Face::new(chain.iter().copied()));
    } else {
        for r in f.ridges() {
            maximal_chains(&r, label, chain, out);
        }
    }
    chain.pop();
}

/// The 2-skeleton of the complement of `knot` in `c`, taken after
/// `subdivisions` barycentric subdivisions: the faces of the subdivided complex
/// that avoid every vertex of the subdivided knot. `knot` must be a
/// subcomplex of `c`, given by its faces.
pub fn complement_skeleton(
    c: &SimplicialComplex,
    knot: &[Face],
    subdivisions: usize,
) -> (Vec<Vertex>, Vec<Face>, Vec<Face>) {
    let mut ambient = c.clone();
    let mut sub: HashSet<Face> = knot.iter().flat_map(all_subfaces).collect();
    for _ in 0..subdivisions {
        let (sd, faces) = barycentric_subdivision(&ambient);
        let label: HashMap<&Face, Vertex> = faces.iter().enumerate().map(|(i, f)| (f, i as Vertex + 1)).collect();
        // A chain lies in the subdivided knot when every face in it does.
        let knot_vertices: HashSet<Vertex> = sub.iter().map(|f| label[f]).collect();
        sub = sd.all_faces().filter(|f| f.vertices().iter().all(|v| knot_vertices.contains(v))).cloned().collect();
        ambient = sd;
    }
    let knot_vertices: HashSet<Vertex> = sub.iter().filter(|f| f.len() == 1).map(|f| f.vertices()[0]).collect();
    let avoid = |f: &&Face| f.vertices().iter().all(|v| !knot_vertices.contains(v));
    let vertices = ambient.vertices().into_iter().filter(|v| !knot_vertices.contains(v)).collect();
    let edges = if ambient.dim() >= 1 { ambient.faces(1).iter().filter(avoid).cloned().collect() } else { vec![] };
    let triangles = if ambient.dim() >= 2 { ambient.faces(2).iter().filter(avoid).cloned().collect() } else { vec![] };
    (vertices, edges, triangles)
}

fn all_subfaces(f: &Face) -> Vec<Face> {
    (1..=f.len()).flat_map(|k| f.subfaces(k)).collect()
}

/// Edge-path group of a 2-complex: a generator per edge outside a BFS
/// spanning forest, oriented from the smaller label, and a relator per
/// triangle. Only the component of the smallest vertex is used.
pub fn edge_path_presentation(vertices: &[Vertex], edges: &[Face], triangles: &[Face]) -> GroupPresentation {
    let mut nbrs: BTreeMap<Vertex, Vec<Vertex>> = vertices.iter().map(|&v| (v, Vec::new())).collect();
    for e in edges {
        let (a, b) = (e.vertices()[0], e.vertices()[1]);
        nbrs.get_mut(&a).expect("edge vertex").push(b);
        nbrs.get_mut(&b).expect("edge vertex").push(a);
    }
    let Some(&root) = nbrs.keys().next() else {
        return GroupPresentation::new(0, vec![]);
    };
    let mut tree: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut seen: HashSet<Vertex> = HashSet::from([root]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        for &w in &nbrs[&v] {
            if seen.insert(w) {
                tree.insert((v.min(w), v.max(w)));
                queue.push_back(w);
            }
        }
    }
    let mut generator: HashMap<(Vertex, Vertex), i32> = HashMap::new();
    for e in edges {
        let key = (e.vertices()[0], e.vertices()[1]);
        if seen.contains(&key.0) && !tree.contains(&key) {
            let next = generator.len() as i32 + 1;
            generator.insert(key, next);
        }
    }
    let letter = |a: Vertex, b: Vertex| -> Option<i32> {
        if a < b {
            generator.get(&(a, b)).copied()
        } else {
            generator.get(&(b, a)).map(|g| -g)
        }
    };
    let relators = triangles
        .iter()
        .filter(|t| seen.contains(&t.vertices()[0]))
        .map(|t| {
            let [a, b, c] = [t.vertices()[0], t.vertices()[1], t.vertices()[2]];
            [letter(a, b), letter(b, c), letter(c, a)].into_iter().flatten().collect()
        })
        .collect();
    GroupPresentation::new(generator.len(), relators)
}

/// Presentation of the fundamental group of the complement of the 3-cycle
/// `cycle` in `c`, before simplification.
pub fn raw_complement_presentation(c: &SimplicialComplex, cycle: &Face, subdivisions: usize) -> GroupPresentation {
    let knot: Vec<Face> = cycle.subfaces(2);
    let (vertices, edges, triangles) = complement_skeleton(c, &knot, subdivisions);
    edge_path_presentation(&vertices, &edges, &triangles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subdivision_counts() {
        let t = SimplicialComplex::simplex([1, 2, 3]);
        let (sd, faces) = barycentric_subdivision(&t);
        assert_eq!(faces.len(), 7);
        assert_eq!(sd.num_facets(), 6);
        assert_eq!(sd.euler_characteristic(), 1);
        let s = SimplicialComplex::simplex_boundary([1, 2, 3, 4, 5]);
        let (sd, _) = barycentric_subdivision(&s);
        assert_eq!(sd.num_facets(), 5 * 24);
        assert_eq!(sd.euler_characteristic(), 0);
    }

    #[test]
    fn circle_group() {
        let verts = [1, 2, 3];
        let edges = [Face::from([1, 2]), Face::from([2, 3]), Face::from([1, 3])];
        let p = edge_path_presentation(&verts, &edges, &[]);
        assert_eq!(p.generators, 1);
        assert!(p.relators.is_empty());
        let disc = edge_path_presentation(&verts, &edges, &[Face::from([1, 2, 3])]);
        assert_eq!(disc.simplify().generators, 0);
    }
}
