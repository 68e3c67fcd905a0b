//! Text formats: point files in, edge lists / filtration dumps / diagram
//! JSON out.
//!
//! Point files are untrusted input: one point per line, whitespace- or
//! comma-separated decimal floats, `#` comment lines ignored, dimension
//! inferred from the first data line. The parser must never panic.

use crate::geometry::{GeometryError, PointCloud};
use crate::persistence::Diagram;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParseError {
    #[error("no data lines in point file")]
    Empty,
    #[error("line {line}: expected {expected} coordinates, found {got}")]
    WrongArity {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: cannot parse '{token}' as a finite number")]
    BadNumber { line: usize, token: String },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Parses a point cloud from text. Lines starting with `#` (after leading
/// whitespace) and blank lines are skipped.
pub fn parse_points(text: &str) -> Result<PointCloud, ParseError> {
    let mut dim = None;
    let mut coords: Vec<f64> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut count = 0usize;
        for token in line.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let value: f64 = token.parse().map_err(|_| ParseError::BadNumber {
                line: lineno + 1,
                token: token.to_string(),
            })?;
            if !value.is_finite() {
                return Err(ParseError::BadNumber {
                    line: lineno + 1,
                    token: token.to_string(),
                });
            }
            coords.push(value);
            count += 1;
        }
        match dim {
            None => dim = Some(count),
            Some(d) if d != count => {
                return Err(ParseError::WrongArity {
                    line: lineno + 1,
                    expected: d,
                    got: count,
                })
            }
            _ => {}
        }
    }
    let dim = dim.ok_or(ParseError::Empty)?;
    if dim == 0 {
        return Err(ParseError::Empty);
    }
    Ok(PointCloud::from_flat(coords, dim)?)
}

/// Renders a point cloud in the same format `parse_points` reads.
pub fn points_to_text(cloud: &PointCloud) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    for p in cloud.points() {
        for (k, c) in p.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            write!(out, "{:.16e}", c).unwrap();
        }
        out.push('\n');
    }
    out
}

/// Diagram JSON: one object per degree, `null` encoding an infinite death.
pub fn diagram_to_json(diagram: &Diagram) -> String {
    #[derive(serde::Serialize)]
    struct DegreeSection {
        degree: usize,
        pairs: Vec<(f64, Option<f64>)>,
    }
    let sections: Vec<DegreeSection> = diagram
        .degrees()
        .map(|k| DegreeSection {
            degree: k,
            pairs: diagram.pairs(k).to_vec(),
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&sections).expect("diagram serialization");
    s.push('\n');
    s
}
