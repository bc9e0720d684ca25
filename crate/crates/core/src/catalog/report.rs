use std::collections::BTreeMap;
use std::fmt;

use super::{ball_16_46_columns, free_facet_a, free_facet_b, load_entry, CatalogName};
use crate::algebra::{homology, is_collapsible, CollapseConfig, HomologyKind};
use crate::complex::{Face, SimplicialComplex};
use crate::iso::{are_isomorphic, automorphism_group, Permutation};
use crate::knot::{certify_nonconstructible, Certification, KnotConfig};
use crate::moves::{cone, family_ball, family_sphere};
use crate::recognition::{verify_ball3, verify_sphere, verify_sphere3, RecognitionConfig, Verdict};
use crate::shelling::{find_shelling, free_facets, ShellingResult};

/// One checked statement about the catalog.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CatalogReport {
    pub claims: Vec<Claim>,
}

impl CatalogReport {
    pub fn all_passed(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.claims.push(Claim { name: name.into(), passed, detail: detail.into() });
    }
}

impl fmt::Display for CatalogReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.claims {
            writeln!(f, "{} {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct CatalogConfig {
    pub recognition: RecognitionConfig,
    pub knot: KnotConfig,
    pub shelling_budget: Option<usize>,
}

fn faces_list(fs: &[Face]) -> String {
    fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join(" ")
}

fn verdict_detail<C>(v: &Verdict<C>) -> String {
    match v {
        Verdict::Yes(_) => "yes".into(),
        Verdict::No(w) => format!("no ({w})"),
        Verdict::Unknown { seeds_tried, flips_used } => format!("unknown (seeds={seeds_tried} flips={flips_used})"),
    }
}

/// Runs every check on the embedded complexes.
pub fn verify_catalog(config: &CatalogConfig) -> CatalogReport {
    let mut r = CatalogReport::default();
    let get = load_entry;
    let b16 = get(CatalogName::B3_16_46);
    let s17 = get(CatalogName::S3_17_74);
    let b38 = get(CatalogName::B3_12_38);
    let s13 = get(CatalogName::S3_13_56);
    let b37a = get(CatalogName::B3_12_37_A);
    let b37b = get(CatalogName::B3_12_37_B);
    let shield = get(CatalogName::Shield9);
    let closing = get(CatalogName::Closing16);
    let closing2 = get(CatalogName::Closing16V2);
    let boundary28 = get(CatalogName::Boundary28);
    let star13 = get(CatalogName::Star13);
    let c = get(CatalogName::ComplexC);

    // f-vectors and vertex ranges
    for (name, cx, f) in [
        ("B3_16_46", &b16, vec![16, 75, 106, 46]),
        ("S3_17_74", &s17, vec![17, 91, 148, 74]),
        ("S3_13_56", &s13, vec![13, 69, 112, 56]),
        ("B3_12_38", &b38, vec![12, 58, 85, 38]),
        ("B3_12_37_a", &b37a, vec![12, 58, 84, 37]),
        ("B3_12_37_b", &b37b, vec![12, 58, 84, 37]),
    ] {
        let got = cx.f_vector();
        r.push(format!("f_vector.{name}"), got.0 == f, got.to_string());
    }
    for (name, cx, max) in [("B3_16_46", &b16, 16), ("S3_13_56", &s13, 13)] {
        let ok = cx.vertices() == (1..=max).collect::<Vec<_>>() && cx.is_pure();
        r.push(format!("vertex_range.{name}"), ok, format!("1..{max}"));
    }

    // table structure and compound identities
    let columns = ball_16_46_columns();
    let sizes: Vec<usize> = columns.iter().map(|c| c.num_facets()).collect();
    let rebuilt = columns.iter().fold(shield.clone(), |acc, col| acc.union(col));
    r.push(
        "table.B3_16_46.shield_plus_thickening",
        sizes[0] == 9 && sizes[1..].iter().sum::<usize>() == 37 && columns[0] == shield && rebuilt == b16,
        format!("columns {sizes:?}"),
    );
    // Seven of the eight bases of each cone are triangles of C; the eighth
    // lies on a tetrahedron of column 2.
    let mut bases_in_c = Vec::new();
    let cones_ok = [(2, 13), (3, 14), (4, 15)].iter().all(|&(col, apex)| {
        let facets = columns[col].facets();
        bases_in_c.push(facets.iter().filter(|f| c.has_face(&f.without(apex))).count());
        facets.len() == 8
            && facets
                .iter()
                .all(|f| f.contains(apex) && (c.has_face(&f.without(apex)) || columns[1].has_face(&f.without(apex))))
    });
    r.push(
        "table.B3_16_46.cone_columns",
        cones_ok,
        format!("8 tetrahedra per apex 13 14 15, bases in C {bases_in_c:?}"),
    );
    r.push("closing16.count", closing.num_facets() == 16, closing.num_facets().to_string());
    r.push("closing16_v2.count", closing2.num_facets() == 16, closing2.num_facets().to_string());
    r.push(
        "complexC.shield_plus_closing",
        c.num_facets() == 25 && closing.facets().iter().all(|t| !shield.has_face(t)),
        format!("{} maximal faces", c.num_facets()),
    );
    let h = homology(&c, HomologyKind::Reduced);
    let collapsible = is_collapsible(&c, CollapseConfig::default());
    r.push(
        "complexC.contractible",
        h.is_acyclic() && collapsible.is_yes(),
        format!("reduced homology {h}, collapsible={}", collapsible.is_yes()),
    );
    let c_in = |cx: &SimplicialComplex| c.facets().iter().all(|f| cx.has_face(f));
    r.push("complexC.in_B3_16_46", c_in(&b16), "");
    r.push("complexC.in_S3_17_74", c_in(&s17), "");
    let b16_boundary = b16.boundary_complex();
    r.push(
        "boundary28.equals_boundary_of_B3_16_46",
        boundary28.num_facets() == 28 && b16_boundary == boundary28,
        format!("{} triangles", b16_boundary.num_facets()),
    );
    let coned = b16.union(&cone(&boundary28, 17).expect("17 is fresh"));
    r.push("S3_17_74.equals_ball_plus_cone", coned == s17 && s17.num_facets() == 46 + 28, "46+28");
    let star_ok = star13.num_facets() == 18
        && star13.facets().iter().all(|f| f.contains(13))
        && s13.star_closed(&Face::from([13])).map(|s| s == star13).unwrap_or(false);
    r.push("star13.is_star_of_13", star_ok, format!("{} facets", star13.num_facets()));
    r.push(
        "S3_13_56.equals_ball_plus_star",
        b38.union(&star13) == s13 && b38.num_facets() + star13.num_facets() == 56,
        "38+18",
    );
    r.push("B3_12_38.is_deletion_of_13", s13.delete_star(&Face::from([13])).map(|d| d == b38).unwrap_or(false), "");
    r.push("closing16_v2.in_S3_13_56", closing2.facets().iter().all(|t| s13.has_face(t)), "");

    // the knot
    let knot = get(CatalogName::KnotCycle);
    let knot_edges: Vec<Face> = vec![Face::from([1, 2]), Face::from([1, 3]), Face::from([2, 3])];
    r.push("knot_cycle.edges", knot.facets() == knot_edges.as_slice(), faces_list(knot.facets()));
    let t123 = Face::from([1, 2, 3]);
    for (name, cx) in [
        ("B3_16_46", &b16),
        ("S3_17_74", &s17),
        ("B3_12_38", &b38),
        ("S3_13_56", &s13),
        ("B3_12_37_a", &b37a),
        ("B3_12_37_b", &b37b),
    ] {
        let ok = knot_edges.iter().all(|e| cx.has_face(e)) && !cx.has_face(&t123);
        r.push(format!("knot_cycle.in.{name}"), ok, "edges present, triangle absent");
    }

    // balls and spheres
    let rc = &config.recognition;
    for (name, cx) in [("B3_16_46", &b16), ("B3_12_38", &b38), ("B3_12_37_a", &b37a), ("B3_12_37_b", &b37b)] {
        let v = verify_ball3(cx, rc);
        r.push(format!("ball3.{name}"), v.is_yes(), verdict_detail(&v));
    }
    for (name, cx) in [("S3_17_74", &s17), ("S3_13_56", &s13)] {
        let v = verify_sphere3(cx, rc);
        let detail = match &v {
            Verdict::Yes(cert) => format!("yes (seed={} flips={})", cert.seed, cert.trace.len()),
            other => verdict_detail(other),
        };
        r.push(format!("sphere3.{name}"), v.is_yes(), detail);
    }

    // free facets and strong non-shellability
    let expected_free = vec![free_facet_a(), free_facet_b()];
    match free_facets(&b38, rc) {
        Ok(ff) => r.push("free_facets.B3_12_38", ff == expected_free, faces_list(&ff)),
        Err(e) => r.push("free_facets.B3_12_38", false, e.to_string()),
    }
    for (name, cx) in [("B3_16_46", &b16), ("B3_12_37_a", &b37a), ("B3_12_37_b", &b37b)] {
        match free_facets(cx, rc) {
            Ok(ff) => {
                r.push(format!("strongly_nonshellable.{name}"), ff.is_empty(), format!("{} free facets", ff.len()))
            }
            Err(e) => r.push(format!("strongly_nonshellable.{name}"), false, e.to_string()),
        }
    }
    if let Some(budget) = config.shelling_budget {
        for (name, cx) in [("B3_12_37_a", &b37a), ("B3_12_37_b", &b37b), ("B3_16_46", &b16)] {
            let s = find_shelling(cx, budget);
            let detail = match &s {
                ShellingResult::NotShellable { nodes } | ShellingResult::Unknown { nodes } => {
                    format!("{} (nodes={nodes} budget={budget})", s.label())
                }
                ShellingResult::Shellable(_) => "shellable".into(),
            };
            r.push(format!("not_shellable.{name}"), !matches!(s, ShellingResult::Shellable(_)), detail);
        }
    }

    // knotted triangles
    for (name, cx) in [
        ("S3_13_56", &s13),
        ("S3_17_74", &s17),
        ("B3_12_37_a", &b37a),
        ("B3_12_37_b", &b37b),
        ("B3_16_46", &b16),
        ("B3_12_38", &b38),
    ] {
        let (ok, detail) = match certify_nonconstructible(cx, &config.knot) {
            Ok(Certification::Certified { witness, sphere, .. }) => {
                let group = config.knot.groups.iter().find(|g| g.name == witness.group).expect("configured group");
                (
                    witness.cycle == t123 && witness.check(&sphere, group),
                    format!("cycle {} group {} images {:?}", witness.cycle, witness.group, witness.images),
                )
            }
            Ok(Certification::NoneFound { candidates }) => (false, format!("none found among {candidates} cycles")),
            Err(e) => (false, e.to_string()),
        };
        r.push(format!("knotted.{name}"), ok, detail);
    }

    // isomorphism and symmetry
    r.push("iso.B3_12_37_a_vs_b", are_isomorphic(&b37a, &b37b).is_none(), "not isomorphic");
    r.push(
        "iso.boundaries_of_B3_12_37_a_b",
        are_isomorphic(&b37a.boundary_complex(), &b37b.boundary_complex()).is_some(),
        "isomorphic",
    );
    let z3 = Permutation::from_cycles(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9], &[10, 11, 12], &[13, 14, 15]]);
    r.push("symmetry.z3_fixes_B3_16_46", z3.preserves(&b16), z3.to_string());
    r.push("symmetry.z3_fixes_S3_17_74", z3.preserves(&s17), z3.to_string());
    for (name, cx) in [("B3_16_46", &b16), ("S3_17_74", &s17)] {
        let g = automorphism_group(cx);
        r.push(
            format!("symmetry.order_divisible_by_3.{name}"),
            g.order.is_multiple_of(3),
            format!("order {}", g.order),
        );
    }

    // higher-dimensional families
    let mut sphere_sizes = BTreeMap::new();
    let mut ball_sizes = BTreeMap::new();
    for d in 3..=6 {
        sphere_sizes.insert(d, family_sphere(d).map(|s| s.num_vertices()).ok());
        ball_sizes.insert(d, family_ball(d).map(|b| (b.num_vertices(), b.num_facets())).ok());
    }
    r.push("family.sphere_vertices", sphere_sizes.iter().all(|(d, n)| *n == Some(d + 10)), format!("{sphere_sizes:?}"));
    r.push(
        "family.ball_vertices_and_facets",
        ball_sizes.iter().all(|(d, n)| *n == Some((d + 9, 37))),
        format!("{ball_sizes:?}"),
    );
    let s4 = family_sphere(4).expect("dimension 4 is supported");
    match verify_sphere(&s4, 4, rc) {
        Ok(v) => r.push("family.sphere4_is_sphere", v.is_yes(), verdict_detail(&v)),
        Err(e) => r.push("family.sphere4_is_sphere", false, e.to_string()),
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_claim_passes() {
        let report = verify_catalog(&CatalogConfig::default());
        let failed: Vec<&Claim> = report.failed().collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert!(report.claims.len() > 40);
    }
}
