//! Text format for drawings.
//!
//! ```text
//! {
//!   "dim": 2,
//!   "vertices": {
//!     "0": ["0", "1/2"],
//!     "1": ["3", "0"]
//!   },
//!   "edges": [
//!     {"u": 0, "v": 1, "bends": [["1", "-1"]]}
//!   ]
//! }
//! ```
//!
//! Coordinates are exact rationals written as strings. [`to_json`] always
//! produces the same bytes for equal drawings.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::geom::{format_q, parse_q, Point};

use super::{Drawing, DrawingError};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DrawingFile {
    dim: usize,
    vertices: BTreeMap<usize, Vec<String>>,
    edges: Vec<EdgeFile>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    u: usize,
    v: usize,
    #[serde(default)]
    bends: Vec<Vec<String>>,
}

fn coords(p: &Point) -> String {
    let parts: Vec<String> = p.coords().iter().map(|c| format!("\"{}\"", format_q(c))).collect();
    format!("[{}]", parts.join(", "))
}

pub fn to_json(d: &Drawing) -> String {
    let mut s = format!("{{\n  \"dim\": {},\n  \"vertices\": {{", d.dim());
    for (i, p) in d.vertices().iter().enumerate() {
        s.push_str(if i == 0 { "\n" } else { ",\n" });
        s.push_str(&format!("    \"{i}\": {}", coords(p)));
    }
    s.push_str(if d.n() == 0 { "},\n  \"edges\": [" } else { "\n  },\n  \"edges\": [" });
    for (i, (u, v, bends)) in d.edges().enumerate() {
        s.push_str(if i == 0 { "\n" } else { ",\n" });
        let b: Vec<String> = bends.iter().map(coords).collect();
        s.push_str(&format!("    {{\"u\": {u}, \"v\": {v}, \"bends\": [{}]}}", b.join(", ")));
    }
    s.push_str(if d.edge_count() == 0 { "]\n}\n" } else { "\n  ]\n}\n" });
    s
}

fn point(raw: &[String], dim: usize) -> Result<Point, DrawingError> {
    if raw.len() != dim {
        return Err(DrawingError::DimensionMismatch { expected: dim, found: raw.len() });
    }
    let c = raw.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>, _>>().map_err(|e| DrawingError::Parse(e.to_string()))?;
    Point::new(c).map_err(|e| DrawingError::Parse(e.to_string()))
}

pub fn from_json(text: &str) -> Result<Drawing, DrawingError> {
    let file: DrawingFile = serde_json::from_str(text).map_err(|e| DrawingError::Parse(e.to_string()))?;
    if file.dim != 2 && file.dim != 3 {
        return Err(DrawingError::Parse(format!("dim must be 2 or 3, got {}", file.dim)));
    }
    let n = file.vertices.len();
    if file.vertices.keys().copied().ne(0..n) {
        return Err(DrawingError::Parse("vertex ids must be 0..n".into()));
    }
    let vertices = file.vertices.values().map(|c| point(c, file.dim)).collect::<Result<Vec<_>, _>>()?;
    let mut d = Drawing::new(file.dim, vertices)?;
    for e in file.edges {
        let bends = e.bends.iter().map(|c| point(c, file.dim)).collect::<Result<Vec<_>, _>>()?;
        d.add_edge(e.u, e.v, bends)?;
    }
    Ok(d)
}
