use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::geom::{between, relate, Point, SegmentRelation, Q};
use crate::graph::{Graph, Vertex};

use super::{Drawing, DrawingError, DrawingStyle};

type Edge = (Vertex, Vertex);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Violation {
    WrongDimension { expected: usize, found: usize },
    DuplicateVertex { u: Vertex, v: Vertex },
    Overlap { e1: Edge, e2: Edge },
    VertexOnEdge { vertex: Vertex, edge: Edge },
    Crossing { e1: Edge, e2: Edge },
    BendPresent { edge: Edge },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongDimension { expected, found } => write!(f, "dimension {found}, style needs {expected}"),
            Self::DuplicateVertex { u, v } => write!(f, "vertices {u} and {v} share a location"),
            Self::Overlap { e1, e2 } => write!(f, "overlap {}-{} / {}-{}", e1.0, e1.1, e2.0, e2.1),
            Self::VertexOnEdge { vertex, edge } => write!(f, "vertex {vertex} on edge {}-{}", edge.0, edge.1),
            Self::Crossing { e1, e2 } => write!(f, "crossing {}-{} / {}-{}", e1.0, e1.1, e2.0, e2.1),
            Self::BendPresent { edge } => write!(f, "bend on edge {}-{}", edge.0, edge.1),
        }
    }
}

/// Every violation of a drawing against one style.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidityReport {
    pub style: DrawingStyle,
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn crossings(&self) -> impl Iterator<Item = &Violation> {
        self.violations.iter().filter(|v| matches!(v, Violation::Crossing { .. }))
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return writeln!(f, "valid {}", self.style);
        }
        writeln!(f, "invalid {}: {} violation(s)", self.style, self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

struct Piece<'a> {
    edge: Edge,
    index: usize,
    last: usize,
    a: &'a Point,
    b: &'a Point,
    lo: Vec<Q>,
    hi: Vec<Q>,
}

impl Piece<'_> {
    fn boxes_meet(&self, o: &Piece<'_>) -> bool {
        self.lo.iter().zip(&o.hi).all(|(l, h)| l <= h) && o.lo.iter().zip(&self.hi).all(|(l, h)| l <= h)
    }
}

/// Lists every violation of `style` in `d`.
pub fn validate(d: &Drawing, g: &Graph, style: DrawingStyle) -> Result<ValidityReport, DrawingError> {
    d.check_structure(g)?;
    let mut found: BTreeSet<Violation> = BTreeSet::new();
    if d.dim() != style.dim() {
        found.insert(Violation::WrongDimension { expected: style.dim(), found: d.dim() });
    }

    let mut by_point: HashMap<&Point, Vertex> = HashMap::new();
    for (v, p) in d.vertices().iter().enumerate() {
        if let Some(&u) = by_point.get(p) {
            found.insert(Violation::DuplicateVertex { u, v });
        } else {
            by_point.insert(p, v);
        }
    }

    let routes: Vec<(Edge, Vec<Point>)> = d.edges().map(|(u, v, _)| ((u, v), d.route(u, v).unwrap())).collect();
    let mut pieces = Vec::new();
    for (edge, route) in &routes {
        if !style.allows_bends() && route.len() > 2 {
            found.insert(Violation::BendPresent { edge: *edge });
        }
        for (index, w) in route.windows(2).enumerate() {
            let lo = (0..d.dim()).map(|i| w[0].coords()[i].clone().min(w[1].coords()[i].clone())).collect();
            let hi = (0..d.dim()).map(|i| w[0].coords()[i].clone().max(w[1].coords()[i].clone())).collect();
            pieces.push(Piece { edge: *edge, index, last: route.len() - 2, a: &w[0], b: &w[1], lo, hi });
        }
    }
    pieces.sort_by(|x, y| x.lo[0].cmp(&y.lo[0]));

    // vertices lying on pieces other than at their own edge ends
    let mut vertex_order: Vec<Vertex> = (0..d.n()).collect();
    vertex_order.sort_by(|&a, &b| d.vertex(a).x().cmp(d.vertex(b).x()));
    for piece in &pieces {
        let start = vertex_order.partition_point(|&w| *d.vertex(w).x() < piece.lo[0]);
        for &w in &vertex_order[start..] {
            let p = d.vertex(w);
            if *p.x() > piece.hi[0] {
                break;
            }
            if !between(p, piece.a, piece.b).unwrap_or(false) {
                continue;
            }
            let legit_start = piece.index == 0 && w == piece.edge.0 && p == piece.a;
            let legit_end = piece.index == piece.last && w == piece.edge.1 && p == piece.b;
            if !legit_start && !legit_end {
                found.insert(Violation::VertexOnEdge { vertex: w, edge: piece.edge });
            }
        }
    }

    for i in 0..pieces.len() {
        for j in i + 1..pieces.len() {
            let (p, q) = (&pieces[i], &pieces[j]);
            if q.lo[0] > p.hi[0] {
                break;
            }
            if !p.boxes_meet(q) {
                continue;
            }
            let same_edge = p.edge == q.edge;
            let rel = relate((p.a, p.b), (q.a, q.b)).map_err(|e| DrawingError::Parse(e.to_string()))?;
            let (e1, e2) = if p.edge <= q.edge { (p.edge, q.edge) } else { (q.edge, p.edge) };
            match rel {
                SegmentRelation::Disjoint => {}
                SegmentRelation::Overlap => {
                    found.insert(Violation::Overlap { e1, e2 });
                }
                SegmentRelation::Cross => {
                    found.insert(Violation::Crossing { e1, e2 });
                }
                SegmentRelation::ShareEndpoint | SegmentRelation::EndpointOnInterior => {
                    let touch = touching_point(p, q);
                    if by_point.contains_key(touch) {
                        // vertex contacts are handled above
                        continue;
                    }
                    if same_edge && p.index.abs_diff(q.index) == 1 && rel == SegmentRelation::ShareEndpoint {
                        continue;
                    }
                    found.insert(Violation::Crossing { e1, e2 });
                }
            }
        }
    }

    let mut violations: Vec<Violation> = found.into_iter().collect();
    if style.allows_crossings() {
        violations.retain(|v| !matches!(v, Violation::Crossing { .. }));
    }
    Ok(ValidityReport { style, violations })
}

fn touching_point<'a>(p: &Piece<'a>, q: &Piece<'a>) -> &'a Point {
    for x in [p.a, p.b] {
        if x == q.a || x == q.b {
            return x;
        }
    }
    for x in [p.a, p.b] {
        if between(x, q.a, q.b).unwrap_or(false) {
            return x;
        }
    }
    for x in [q.a, q.b] {
        if between(x, p.a, p.b).unwrap_or(false) {
            return x;
        }
    }
    unreachable!("touching pieces share a point")
}
