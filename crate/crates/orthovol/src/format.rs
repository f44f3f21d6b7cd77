//! The polytope text format and its canonical serialization.
//!
//! ```text
//! # comment
//! polytope A(3)
//! vertices 6
//! face 0 1 2
//! face 0 2 3
//! ...
//! ```
//!
//! Vertex ids are implicit (`0..V-1`); the `vertices` line is redundant and
//! checked against the face list, so a file can never smuggle in orphan
//! vertices. Serialization is canonical: every face is rotated to start at
//! its minimal vertex, directed so the second vertex is the smaller
//! neighbour, and faces are sorted lexicographically. Parsing a serialized
//! polytope reproduces its canonical form exactly.

use crate::polytope::{CombinatorialPolytope, Polytope};
use crate::VertexId;

/// A syntax or consistency error, with the 1-based line it occurred on.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Parse the text format into a raw combinatorial polytope.
///
/// Structural invariants (edge counts, rotations, connectivity) are not
/// checked here; run [`crate::polytope::validate`] or construct a
/// [`Polytope`] for that.
pub fn parse(text: &str) -> Result<CombinatorialPolytope, ParseError> {
    let mut name: Option<String> = None;
    let mut declared: Option<(usize, usize)> = None; // (V, line)
    let mut faces: Vec<Vec<VertexId>> = Vec::new();

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let keyword = tokens.next().unwrap();
        match keyword {
            "polytope" => {
                if name.is_some() {
                    return err(line_no, "duplicate 'polytope' header");
                }
                let rest = line["polytope".len()..].trim();
                name = Some(rest.to_string());
            }
            "vertices" => {
                if name.is_none() {
                    return err(line_no, "'vertices' before 'polytope' header");
                }
                if declared.is_some() {
                    return err(line_no, "duplicate 'vertices' line");
                }
                let value = tokens
                    .next()
                    .ok_or_else(|| ParseError {
                        line: line_no,
                        message: "'vertices' needs a count".to_string(),
                    })?
                    .parse::<usize>()
                    .map_err(|_| ParseError {
                        line: line_no,
                        message: "vertex count is not a non-negative integer".to_string(),
                    })?;
                if tokens.next().is_some() {
                    return err(line_no, "trailing tokens after vertex count");
                }
                declared = Some((value, line_no));
            }
            "face" => {
                let Some((v, _)) = declared else {
                    return err(line_no, "'face' before 'vertices' line");
                };
                let mut face = Vec::new();
                for tok in tokens {
                    let id = tok.parse::<usize>().map_err(|_| ParseError {
                        line: line_no,
                        message: format!("invalid vertex id '{tok}'"),
                    })?;
                    if id >= v {
                        return err(
                            line_no,
                            format!("vertex id {id} out of range (vertices {v})"),
                        );
                    }
                    face.push(id);
                }
                if face.is_empty() {
                    return err(line_no, "'face' needs vertex ids");
                }
                faces.push(face);
            }
            other => {
                return err(line_no, format!("unknown keyword '{other}'"));
            }
        }
    }

    let Some(name) = name else {
        return err(1, "missing 'polytope <name>' header");
    };
    let Some((v, v_line)) = declared else {
        return err(1, "missing 'vertices <V>' line");
    };
    if faces.is_empty() {
        return err(v_line, "no faces");
    }
    let derived = faces.iter().flatten().max().map(|&m| m + 1).unwrap_or(0);
    if derived != v {
        return err(
            v_line,
            format!("vertex count mismatch: header says {v}, faces imply {derived}"),
        );
    }
    Ok(CombinatorialPolytope::new(name, faces))
}

// Rotate to the minimal vertex and pick the direction whose second vertex is
// the smaller neighbour.
fn canonical_face(face: &[VertexId]) -> Vec<VertexId> {
    let k = face.len();
    let min_pos = face
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
        .unwrap();
    let forward = face[(min_pos + 1) % k];
    let backward = face[(min_pos + k - 1) % k];
    let mut out = Vec::with_capacity(k);
    if forward <= backward {
        for i in 0..k {
            out.push(face[(min_pos + i) % k]);
        }
    } else {
        for i in 0..k {
            out.push(face[(min_pos + k - i) % k]);
        }
    }
    out
}

/// Canonical form: canonical face cycles, sorted lexicographically.
pub fn canonicalize(p: &CombinatorialPolytope) -> CombinatorialPolytope {
    let mut faces: Vec<Vec<VertexId>> = p.faces.iter().map(|f| canonical_face(f)).collect();
    faces.sort();
    CombinatorialPolytope::new(p.name.clone(), faces)
}

/// Serialize in canonical form.
pub fn serialize(p: &CombinatorialPolytope) -> String {
    let canonical = canonicalize(p);
    let mut out = String::new();
    if canonical.name.is_empty() {
        out.push_str("polytope\n");
    } else {
        out.push_str(&format!("polytope {}\n", canonical.name));
    }
    out.push_str(&format!("vertices {}\n", canonical.vertex_count()));
    for face in &canonical.faces {
        out.push_str("face");
        for v in face {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    out
}

/// Serialize a validated polytope in canonical form.
pub fn serialize_polytope(p: &Polytope) -> String {
    serialize(&CombinatorialPolytope::new(
        p.name().to_string(),
        p.faces().to_vec(),
    ))
}
