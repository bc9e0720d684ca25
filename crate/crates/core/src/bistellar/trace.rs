//! Trace files: a header of `# key=value` lines followed by one move per line
//! written as `F | V` with space-separated vertices.

use super::{FlipMove, FrozenFaces, ReduceConfig};
use crate::complex::{ComplexError, Face, Vertex};

#[derive(Clone, Debug, PartialEq)]
pub struct TraceFile {
    pub seed: Option<u64>,
    pub schedule: Option<String>,
    pub frozen: Vec<Face>,
    pub moves: Vec<FlipMove>,
}

fn face_text(f: &Face) -> String {
    f.vertices().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn write_trace(config: &ReduceConfig, moves: &[FlipMove]) -> String {
    let mut out = String::from("# bistellar trace\n");
    out.push_str(&format!("# seed={}\n", config.seed));
    out.push_str(&format!(
        "# schedule=t0:{} cooling:{} stall:{} reheats:{} tabu:{} budget:{}\n",
        config.t0, config.cooling, config.stall_limit, config.max_reheats, config.tabu, config.budget
    ));
    let frozen: Vec<String> = config.frozen.faces().iter().map(face_text).collect();
    out.push_str(&format!("# frozen={}\n", frozen.join(";")));
    for m in moves {
        out.push_str(&format!("{} | {}\n", face_text(&m.face), face_text(&m.coface)));
    }
    out
}

fn parse_face(s: &str, line: usize) -> Result<Face, ComplexError> {
    let verts = s
        .split_whitespace()
        .map(|t| {
            t.parse::<Vertex>()
                .ok()
                .filter(|v| *v > 0)
                .ok_or_else(|| ComplexError::Parse { line, message: format!("bad vertex {t:?}") })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if verts.is_empty() {
        return Err(ComplexError::Parse { line, message: "empty face".into() });
    }
    Ok(Face::new(verts))
}

pub fn parse_trace(text: &str) -> Result<TraceFile, ComplexError> {
    let mut file = TraceFile { seed: None, schedule: None, frozen: Vec::new(), moves: Vec::new() };
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(header) = line.strip_prefix('#') {
            let header = header.trim();
            if let Some(seed) = header.strip_prefix("seed=") {
                file.seed = seed.trim().parse().ok();
            } else if let Some(s) = header.strip_prefix("schedule=") {
                file.schedule = Some(s.to_string());
            } else if let Some(f) = header.strip_prefix("frozen=") {
                for part in f.split(';').filter(|p| !p.trim().is_empty()) {
                    file.frozen.push(parse_face(part, i + 1)?);
                }
            }
            continue;
        }
        let (a, b) = line
            .split_once('|')
            .ok_or_else(|| ComplexError::Parse { line: i + 1, message: "expected `F | V`".into() })?;
        file.moves.push(FlipMove { face: parse_face(a, i + 1)?, coface: parse_face(b, i + 1)? });
    }
    Ok(file)
}

impl TraceFile {
    pub fn frozen_faces(&self) -> FrozenFaces {
        FrozenFaces::new(self.frozen.iter().cloned())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let config = ReduceConfig {
            seed: 42,
            frozen: FrozenFaces::new([Face::from([1, 2]), Face::from([2, 3])]),
            ..Default::default()
        };
        let moves = vec![FlipMove::new([1, 2, 3], [9]), FlipMove::new([4, 5], [6, 7, 8])];
        let text = write_trace(&config, &moves);
        let parsed = parse_trace(&text).unwrap();
        assert_eq!(parsed.seed, Some(42));
        assert_eq!(parsed.moves, moves);
        assert_eq!(parsed.frozen_faces(), config.frozen);
        assert!(parse_trace("1 2 3\n").is_err());
    }
}
