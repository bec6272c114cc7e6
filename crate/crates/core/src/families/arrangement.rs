use std::collections::BTreeMap;

use num_traits::Zero;

use super::FamilyError;
use crate::geom::{Point, Q};
use crate::graph::{Graph, Vertex};

/// The line `a x + b y = c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub a: Q,
    pub b: Q,
    pub c: Q,
}

impl Line {
    pub fn new(a: Q, b: Q, c: Q) -> Result<Self, FamilyError> {
        if a.is_zero() && b.is_zero() {
            return Err(FamilyError::NotSimpleArrangement("line with zero normal".into()));
        }
        Ok(Line { a, b, c })
    }

    /// Line through two distinct points.
    pub fn through(p: &Point, q: &Point) -> Result<Self, FamilyError> {
        let a = q.y() - p.y();
        let b = p.x() - q.x();
        let c = &a * p.x() + &b * p.y();
        Line::new(a, b, c)
    }

    fn meet(&self, o: &Line) -> Option<Point> {
        let det = &self.a * &o.b - &self.b * &o.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.c * &o.b - &self.b * &o.c) / &det;
        let y = (&self.a * &o.c - &self.c * &o.a) / &det;
        Some(Point::p2(x, y))
    }

    /// Position along the line, monotone in the direction `(-b, a)`.
    fn param(&self, p: &Point) -> Q {
        -&self.b * p.x() + &self.a * p.y()
    }

    fn contains(&self, p: &Point) -> bool {
        &self.a * p.x() + &self.b * p.y() == self.c
    }
}

/// Graph of a simple arrangement: vertices are the pairwise intersection
/// points (pairs `(i, j)` with `i < j` in lexicographic order), edges join
/// consecutive intersection points on each line.
///
/// Also returns the intersection points in vertex order.
pub fn arrangement_graph(lines: &[Line]) -> Result<(Graph, Vec<Point>), FamilyError> {
    let l = lines.len();
    if l < 3 {
        return Err(FamilyError::NotSimpleArrangement("need at least three lines".into()));
    }
    let mut id = BTreeMap::new();
    let mut points = Vec::new();
    for i in 0..l {
        for j in i + 1..l {
            let p = lines[i].meet(&lines[j])
                .ok_or_else(|| FamilyError::NotSimpleArrangement(format!("lines {i} and {j} are parallel")))?;
            if let Some(k) = (0..l).find(|&k| k != i && k != j && lines[k].contains(&p)) {
                return Err(FamilyError::NotSimpleArrangement(format!("lines {i}, {j} and {k} are concurrent")));
            }
            id.insert((i, j), points.len());
            points.push(p);
        }
    }
    let mut edges = Vec::new();
    for (i, line) in lines.iter().enumerate() {
        let mut on: Vec<(Q, Vertex)> = (0..l)
            .filter(|&j| j != i)
            .map(|j| {
                let v = id[&(i.min(j), i.max(j))];
                (line.param(&points[v]), v)
            })
            .collect();
        on.sort();
        edges.extend(on.windows(2).map(|w| (w[0].1, w[1].1)));
    }
    let g = Graph::new(points.len(), edges).map_err(|e| FamilyError::NotSimpleArrangement(e.to_string()))?;
    Ok((g, points))
}

/// Attaches `4 - deg(v)` pendant vertices to every vertex of an
/// arrangement-shaped graph, so every non-leaf vertex has degree 4.
///
/// Returns the new graph and the number of lines `l` with
/// `n = l(l-1)/2` and `m = l(l-2)`.
pub fn tail_gadget(g: &Graph) -> Result<(Graph, usize), FamilyError> {
    let n = g.n();
    let l = (3..).take_while(|l| l * (l - 1) / 2 <= n).last()
        .filter(|l| l * (l - 1) / 2 == n)
        .ok_or_else(|| FamilyError::NotArrangementShaped(format!("{n} is not a triangular number l(l-1)/2 with l >= 3")))?;
    if g.m() != l * (l - 2) {
        return Err(FamilyError::NotArrangementShaped(format!("expected {} edges for {l} lines, found {}", l * (l - 2), g.m())));
    }
    if let Some(v) = (0..n).find(|&v| !(2..=4).contains(&g.degree(v))) {
        return Err(FamilyError::NotArrangementShaped(format!("vertex {v} has degree {}", g.degree(v))));
    }
    let mut edges: Vec<_> = g.edges().collect();
    let mut next = n;
    for v in 0..n {
        for _ in g.degree(v)..4 {
            edges.push((v, next));
            next += 1;
        }
    }
    Ok((Graph::from_edges(next, &edges), l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::q;

    fn line(a: i64, b: i64, c: i64) -> Line {
        Line::new(q(a), q(b), q(c)).unwrap()
    }

    #[test]
    fn triangle_arrangement() {
        let (g, pts) = arrangement_graph(&[line(1, 0, 0), line(0, 1, 0), line(1, 1, 1)]).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(pts.len(), 3);
        let (t, l) = tail_gadget(&g).unwrap();
        assert_eq!(l, 3);
        assert_eq!(t.n(), 9);
        assert_eq!((0..9).filter(|&v| t.degree(v) == 1).count(), 6);
        assert!((0..3).all(|v| t.degree(v) == 4));
    }

    #[test]
    fn four_lines() {
        let lines = [line(1, 0, 0), line(0, 1, 0), line(1, 1, 3), line(1, -1, 1)];
        let (g, _) = arrangement_graph(&lines).unwrap();
        assert_eq!((g.n(), g.m()), (6, 8));
        let (t, l) = tail_gadget(&g).unwrap();
        assert_eq!(l, 4);
        assert!((0..6).all(|v| t.degree(v) == 4));
        assert_eq!(t.n(), 6 + 2 * 4);
    }

    #[test]
    fn degenerate_arrangements() {
        assert!(arrangement_graph(&[line(1, 0, 0), line(1, 0, 1), line(0, 1, 0)]).is_err());
        assert!(arrangement_graph(&[line(1, 0, 0), line(0, 1, 0), line(1, 1, 0)]).is_err());
    }

    #[test]
    fn not_arrangement_shaped() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(matches!(tail_gadget(&k4), Err(FamilyError::NotArrangementShaped(_))));
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)]);
        assert!(tail_gadget(&c6).is_err());
    }
}
