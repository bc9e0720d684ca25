//! The `.cplx` facet-list text format.
//!
//! One facet per line as whitespace-separated positive integers; lines whose
//! first non-blank character is `#` are comments. Canonical output lists each
//! facet with ascending vertices, facets in lexicographic order.

use super::{check_vertices, ComplexError, Face, SimplicialComplex};

pub fn parse_cplx(text: &str) -> Result<SimplicialComplex, ComplexError> {
    SimplicialComplex::from_raw(&parse_lines(text)?)
}

/// Like [`parse_cplx`] but accepts a non-pure complex given by its maximal faces.
pub fn parse_cplx_maximal(text: &str) -> Result<SimplicialComplex, ComplexError> {
    let faces =
        parse_lines(text)?.iter().map(|f| check_vertices(f).map(Face::from_sorted)).collect::<Result<Vec<_>, _>>()?;
    SimplicialComplex::from_maximal_faces(faces)
}

fn parse_lines(text: &str) -> Result<Vec<Vec<i64>>, ComplexError> {
    let mut facets = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let facet = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|e| ComplexError::Parse { line: i + 1, message: format!("bad vertex {tok:?}: {e}") })
            })
            .collect::<Result<Vec<_>, _>>()?;
        facets.push(facet);
    }
    Ok(facets)
}

pub fn to_cplx_string(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in c.facets() {
        let line: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn comments_and_blank_lines() {
        let c = parse_cplx("# a comment\n\n3 2 1\n  # another\n2 3 4\n").unwrap();
        assert_eq!(to_cplx_string(&c), "1 2 3\n2 3 4\n");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_cplx("1 2 x\n"), Err(ComplexError::Parse { line: 1, .. })));
        assert!(matches!(parse_cplx("1 2 3\n1 2\n"), Err(ComplexError::NonPure(3, 2))));
        assert!(matches!(parse_cplx("-1 2\n"), Err(ComplexError::InvalidVertex(-1))));
        assert!(matches!(parse_cplx("# only comments\n"), Err(ComplexError::Empty)));
        assert_eq!(parse_cplx_maximal("1 2 3\n3 4\n").unwrap().f_vector().counts(), [4, 4, 1]);
        assert!(matches!(parse_cplx_maximal("1 2 3\n2 3\n"), Err(ComplexError::ContainedFacet(..))));
    }

    proptest! {
        #[test]
        fn canonical_output_round_trips(facets in proptest::collection::vec(
            proptest::collection::btree_set(1u32..20, 3), 1..12)) {
            let c = SimplicialComplex::new(facets.iter().map(|f| f.iter().copied().collect::<Vec<_>>())).unwrap();
            let text = to_cplx_string(&c);
            let back = parse_cplx(&text).unwrap();
            prop_assert_eq!(&back, &c);
            prop_assert_eq!(to_cplx_string(&back), text);
        }
    }
}
