//! Polyline drawings, validity per drawing style, and segment counting.

mod audit;
mod decompose;
mod export;
mod io;
mod validate;

pub use audit::{audit, lower_bounds, AuditReport, VertexAudit};
pub use decompose::{decompose, Piece, Segment, SegmentDecomposition};
pub use export::{to_lines3d, to_svg};
pub use io::{from_json, to_json};
pub use validate::{validate, ValidityReport, Violation};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::geom::{strictly_between, Point};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DrawingError {
    #[error("expected {expected}-dimensional point, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("edge {0}-{1} has two equal consecutive points")]
    DegenerateEdge(Vertex, Vertex),
    #[error("edge {0}-{1} references a vertex outside the drawing")]
    UnknownVertex(Vertex, Vertex),
    #[error("edge {0}-{1} given twice")]
    DuplicateEdge(Vertex, Vertex),
    #[error("drawing and graph disagree: {0}")]
    StructureMismatch(String),
    #[error("drawing contains overlapping pieces at {0:?}")]
    OverlapPresent(Point),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("{0}")]
    Parse(String),
}

/// The four drawing models whose segment numbers are studied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DrawingStyle {
    /// Crossing-free straight-line drawing in the plane.
    Planar2d,
    /// Straight-line drawing in the plane; crossings allowed, overlaps not.
    Crossing2d,
    /// Crossing-free polyline drawing in the plane.
    Bend2d,
    /// Crossing-free straight-line drawing in space.
    Free3d,
}

impl DrawingStyle {
    pub const ALL: [DrawingStyle; 4] = [Self::Planar2d, Self::Crossing2d, Self::Bend2d, Self::Free3d];

    pub fn dim(self) -> usize {
        match self {
            Self::Free3d => 3,
            _ => 2,
        }
    }

    pub fn allows_crossings(self) -> bool {
        self == Self::Crossing2d
    }

    pub fn allows_bends(self) -> bool {
        self == Self::Bend2d
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Planar2d => "planar2d",
            Self::Crossing2d => "crossing2d",
            Self::Bend2d => "bend2d",
            Self::Free3d => "free3d",
        }
    }
}

impl fmt::Display for DrawingStyle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DrawingStyle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| format!("unknown style `{s}` (expected planar2d, crossing2d, bend2d or free3d)"))
    }
}

/// Vertex placement plus a polyline route per edge.
///
/// Edges are keyed by `(u, v)` with `u < v`; the stored bend list runs from
/// `u` towards `v`.
#[derive(Clone, PartialEq, Eq)]
pub struct Drawing {
    dim: usize,
    vertices: Vec<Point>,
    edges: BTreeMap<(Vertex, Vertex), Vec<Point>>,
}

impl Drawing {
    pub fn new(dim: usize, vertices: Vec<Point>) -> Result<Self, DrawingError> {
        for p in &vertices {
            if p.dim() != dim {
                return Err(DrawingError::DimensionMismatch { expected: dim, found: p.dim() });
            }
        }
        Ok(Drawing { dim, vertices, edges: BTreeMap::new() })
    }

    /// Adds edge `u-v` with bends listed from `u` to `v`. Bends with a
    /// straight angle are dropped.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex, bends: Vec<Point>) -> Result<(), DrawingError> {
        let n = self.vertices.len();
        if u >= n || v >= n || u == v {
            return Err(DrawingError::UnknownVertex(u, v));
        }
        let key = (u.min(v), u.max(v));
        if self.edges.contains_key(&key) {
            return Err(DrawingError::DuplicateEdge(key.0, key.1));
        }
        for b in &bends {
            if b.dim() != self.dim {
                return Err(DrawingError::DimensionMismatch { expected: self.dim, found: b.dim() });
            }
        }
        let mut route = Vec::with_capacity(bends.len() + 2);
        route.push(self.vertices[u].clone());
        route.extend(bends);
        route.push(self.vertices[v].clone());
        if route.windows(2).any(|w| w[0] == w[1]) {
            return Err(DrawingError::DegenerateEdge(key.0, key.1));
        }
        // drop straight bends: the bend lies strictly between its neighbours
        let mut i = 1;
        while i + 1 < route.len() {
            if strictly_between(&route[i], &route[i - 1], &route[i + 1]).unwrap_or(false) {
                route.remove(i);
            } else {
                i += 1;
            }
        }
        let mut bends: Vec<Point> = route[1..route.len() - 1].to_vec();
        if u > v {
            bends.reverse();
        }
        self.edges.insert(key, bends);
        Ok(())
    }

    pub fn straight(dim: usize, vertices: Vec<Point>, g: &Graph) -> Result<Self, DrawingError> {
        let mut d = Drawing::new(dim, vertices)?;
        for (u, v) in g.edges() {
            d.add_edge(u, v, Vec::new())?;
        }
        Ok(d)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, v: Vertex) -> &Point {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    /// Edges `(u, v, bends)` with `u < v`, bends ordered from `u` to `v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, &[Point])> + '_ {
        self.edges.iter().map(|(&(u, v), b)| (u, v, b.as_slice()))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn bends(&self, u: Vertex, v: Vertex) -> Option<&[Point]> {
        self.edges.get(&(u.min(v), u.max(v))).map(Vec::as_slice)
    }

    /// Full polyline from `u` to `v`.
    pub fn route(&self, u: Vertex, v: Vertex) -> Option<Vec<Point>> {
        let bends = self.bends(u, v)?;
        let mut r = Vec::with_capacity(bends.len() + 2);
        r.push(self.vertices[u.min(v)].clone());
        r.extend(bends.iter().cloned());
        r.push(self.vertices[u.max(v)].clone());
        if u > v {
            r.reverse();
        }
        Some(r)
    }

    pub fn bend_count(&self) -> usize {
        self.edges.values().map(Vec::len).sum()
    }

    /// Checks that the drawing has exactly the vertices and edges of `g`.
    pub fn check_structure(&self, g: &Graph) -> Result<(), DrawingError> {
        if self.n() != g.n() {
            return Err(DrawingError::StructureMismatch(format!("{} vertices drawn, graph has {}", self.n(), g.n())));
        }
        if self.edges.len() != g.m() || !g.edges().all(|e| self.edges.contains_key(&e)) {
            return Err(DrawingError::StructureMismatch("edge sets differ".into()));
        }
        Ok(())
    }

    /// Graph formed by the drawn edges.
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n(), &self.edges.keys().copied().collect::<Vec<_>>())
    }

    /// Applies `f` to every vertex and bend point.
    pub fn map_points(&self, f: impl Fn(&Point) -> Point) -> Result<Self, DrawingError> {
        let vertices: Vec<Point> = self.vertices.iter().map(&f).collect();
        let dim = vertices.first().map_or(self.dim, Point::dim);
        let mut d = Drawing::new(dim, vertices)?;
        for (u, v, bends) in self.edges() {
            d.add_edge(u, v, bends.iter().map(&f).collect())?;
        }
        Ok(d)
    }
}

impl fmt::Debug for Drawing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Drawing")
            .field("dim", &self.dim)
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .finish()
    }
}
