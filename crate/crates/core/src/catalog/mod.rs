//! The named complexes, embedded as `.cplx` text and assembled on load.

mod report;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::complex::{parse_cplx, Face, SimplicialComplex};
use crate::moves;

pub use report::{verify_catalog, CatalogConfig, CatalogReport, Claim};

const BALL_16_46: &str = include_str!("../../data/ball_16_46.cplx");
const BOUNDARY_28: &str = include_str!("../../data/boundary_28.cplx");
const CLOSING_16: &str = include_str!("../../data/closing_16.cplx");
const CLOSING_16_V2: &str = include_str!("../../data/closing_16_v2.cplx");
const BALL_12_38: &str = include_str!("../../data/ball_12_38.cplx");
const STAR_13: &str = include_str!("../../data/star_13.cplx");
const KNOT_CYCLE: &str = include_str!("../../data/knot_cycle.cplx");

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unknown catalog entry {0:?}")]
pub struct UnknownName(pub String);

#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogName {
    Shield9,
    Closing16,
    ComplexC,
    B3_16_46,
    Boundary28,
    S3_17_74,
    B3_12_38,
    Star13,
    S3_13_56,
    B3_12_37_A,
    B3_12_37_B,
    Closing16V2,
    KnotCycle,
}

impl CatalogName {
    pub const ALL: [CatalogName; 13] = [
        CatalogName::Shield9,
        CatalogName::Closing16,
        CatalogName::ComplexC,
        CatalogName::B3_16_46,
        CatalogName::Boundary28,
        CatalogName::S3_17_74,
        CatalogName::B3_12_38,
        CatalogName::Star13,
        CatalogName::S3_13_56,
        CatalogName::B3_12_37_A,
        CatalogName::B3_12_37_B,
        CatalogName::Closing16V2,
        CatalogName::KnotCycle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::Shield9 => "shield9",
            CatalogName::Closing16 => "closing16",
            CatalogName::ComplexC => "complexC",
            CatalogName::B3_16_46 => "B3_16_46",
            CatalogName::Boundary28 => "boundary28",
            CatalogName::S3_17_74 => "S3_17_74",
            CatalogName::B3_12_38 => "B3_12_38",
            CatalogName::Star13 => "star13",
            CatalogName::S3_13_56 => "S3_13_56",
            CatalogName::B3_12_37_A => "B3_12_37_a",
            CatalogName::B3_12_37_B => "B3_12_37_b",
            CatalogName::Closing16V2 => "closing16_v2",
            CatalogName::KnotCycle => "knot_cycle",
        }
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = UnknownName;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CatalogName::ALL.into_iter().find(|n| n.as_str() == s).ok_or_else(|| UnknownName(s.to_string()))
    }
}

/// The two facets whose removal from the 38-facet ball gives the 37-facet balls.
pub fn free_facet_a() -> Face {
    Face::from([2, 4, 5, 7])
}

pub fn free_facet_b() -> Face {
    Face::from([3, 4, 6, 10])
}

/// Facets of one `# column N` section of an embedded table.
fn column_sections(text: &str) -> Vec<String> {
    let mut sections: Vec<String> = Vec::new();
    for line in text.lines() {
        if line.starts_with("# column") {
            sections.push(String::new());
        } else if !line.starts_with('#') && !line.trim().is_empty() {
            if let Some(s) = sections.last_mut() {
                s.push_str(line);
                s.push('\n');
            }
        }
    }
    sections
}

fn parse(text: &str) -> SimplicialComplex {
    parse_cplx(text).expect("embedded catalog data is well formed")
}

/// Column 1 of the 46-facet table.
pub fn shield_text() -> String {
    column_sections(BALL_16_46)[0].clone()
}

/// Columns 2-6 of the 46-facet table.
pub fn thickening_text() -> String {
    column_sections(BALL_16_46)[1..].concat()
}

/// The six columns of the 46-facet table, each as a complex.
pub fn ball_16_46_columns() -> Vec<SimplicialComplex> {
    column_sections(BALL_16_46).iter().map(|t| parse(t)).collect()
}

pub fn load_entry(name: CatalogName) -> SimplicialComplex {
    match name {
        CatalogName::Shield9 => parse(&shield_text()),
        CatalogName::Closing16 => parse(CLOSING_16),
        CatalogName::ComplexC => {
            let shield = load_entry(CatalogName::Shield9);
            let closing = load_entry(CatalogName::Closing16);
            SimplicialComplex::from_maximal_faces(shield.facets().iter().chain(closing.facets()).cloned())
                .expect("closing triangles are not faces of the shield")
        }
        CatalogName::B3_16_46 => parse(BALL_16_46),
        CatalogName::Boundary28 => parse(BOUNDARY_28),
        CatalogName::S3_17_74 => {
            let ball = load_entry(CatalogName::B3_16_46);
            let cone = moves::cone(&load_entry(CatalogName::Boundary28), 17).expect("17 is fresh");
            ball.union(&cone)
        }
        CatalogName::B3_12_38 => parse(BALL_12_38),
        CatalogName::Star13 => parse(STAR_13),
        CatalogName::S3_13_56 => load_entry(CatalogName::B3_12_38).union(&load_entry(CatalogName::Star13)),
        CatalogName::B3_12_37_A => {
            moves::remove_facet(&load_entry(CatalogName::B3_12_38), &free_facet_a()).expect("2457 is a facet")
        }
        CatalogName::B3_12_37_B => {
            moves::remove_facet(&load_entry(CatalogName::B3_12_38), &free_facet_b()).expect("3 4 6 10 is a facet")
        }
        CatalogName::Closing16V2 => parse(CLOSING_16_V2),
        CatalogName::KnotCycle => parse(KNOT_CYCLE),
    }
}

pub fn load(name: &str) -> Result<SimplicialComplex, UnknownName> {
    Ok(load_entry(name.parse()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let expect = [
            ("shield9", 9, 12),
            ("closing16", 16, 12),
            ("B3_16_46", 46, 16),
            ("boundary28", 28, 16),
            ("S3_17_74", 74, 17),
            ("B3_12_38", 38, 12),
            ("star13", 18, 12),
            ("S3_13_56", 56, 13),
            ("B3_12_37_a", 37, 12),
            ("B3_12_37_b", 37, 12),
            ("closing16_v2", 16, 12),
            ("knot_cycle", 3, 3),
        ];
        for (name, facets, verts) in expect {
            let c = load(name).unwrap();
            assert_eq!((c.num_facets(), c.num_vertices()), (facets, verts), "{name}");
        }
        let c = load("complexC").unwrap();
        assert!(!c.is_pure());
        assert_eq!(c.num_facets(), 25);
    }

    #[test]
    fn column_split() {
        assert_eq!(parse(&shield_text()).num_facets(), 9);
        assert_eq!(parse(&thickening_text()).num_facets(), 37);
    }

    #[test]
    fn unknown_names() {
        assert_eq!(load("B3_99"), Err(UnknownName("B3_99".into())));
        for n in CatalogName::ALL {
            assert_eq!(n.as_str().parse::<CatalogName>().unwrap(), n);
        }
    }

    #[test]
    fn vertex_ranges() {
        assert!(load_entry(CatalogName::B3_16_46).vertices().iter().all(|v| (1..=16).contains(v)));
        assert!(load_entry(CatalogName::S3_13_56).vertices().iter().all(|v| (1..=13).contains(v)));
    }
}
