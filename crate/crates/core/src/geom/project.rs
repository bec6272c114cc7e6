use num_traits::Zero;

use crate::drawing::{validate, Drawing, DrawingStyle, Violation};

use super::point::{cross, dot, is_zero, sub};
use super::{q, GeomError, Point, Q, V3};

/// Parallel projection along `(a, b, 1)` onto the plane `z = 0`.
pub fn project_along(d3: &Drawing, a: &Q, b: &Q) -> Result<Drawing, GeomError> {
    if d3.dim() != 3 {
        return Err(GeomError::DimensionMismatch(3, d3.dim()));
    }
    d3.map_points(|p| {
        let z = p.z();
        Point::p2(p.x() - a * &z, p.y() - b * &z)
    })
    .map_err(|e| GeomError::InvalidInput(e.to_string()))
}

/// Projects a spatial drawing to the plane without creating overlaps or
/// vertex-edge incidences.
///
/// Directions `(a, b, 1)` are tried over growing integer rings. A direction
/// is rejected when it lies in a plane spanned by a piece and a further point
/// of the drawing, or is parallel to a piece; the first survivor whose
/// projection validates is used.
pub fn generic_project(d3: &Drawing) -> Result<Drawing, GeomError> {
    if d3.dim() != 3 {
        return Err(GeomError::DimensionMismatch(3, d3.dim()));
    }
    let g = d3.graph();
    let report = validate(d3, &g, DrawingStyle::Free3d).map_err(|e| GeomError::InvalidInput(e.to_string()))?;
    if let Some(v) = report
        .violations
        .iter()
        .find(|v| !matches!(v, Violation::Crossing { .. } | Violation::BendPresent { .. }))
    {
        return Err(GeomError::InvalidInput(v.to_string()));
    }

    let mut points: Vec<V3> = d3.vertices().iter().map(Point::v3).collect();
    let mut pieces: Vec<(V3, V3)> = Vec::new();
    for (u, v, bends) in d3.edges() {
        points.extend(bends.iter().map(Point::v3));
        let route = d3.route(u, v).unwrap();
        for w in route.windows(2) {
            pieces.push((w[0].v3(), w[1].v3()));
        }
    }
    // normal n of the plane through a piece and a point; direction d is bad iff n.d = 0
    let fpoints: Vec<[f64; 3]> = points.iter().map(to_f64).collect();
    let mut planes: Vec<Plane> = Vec::new();
    for (pi, (p, r)) in pieces.iter().enumerate() {
        let (fp, fr) = (to_f64(p), to_f64(r));
        for (wi, w) in points.iter().enumerate() {
            if w == p || w == r {
                continue;
            }
            planes.push(Plane::new(pi, wi, &fp, &fr, &fpoints[wi]));
        }
    }
    let mut exact: Vec<Option<Option<V3>>> = vec![None; planes.len()];
    let piece_dirs: Vec<V3> = pieces.iter().map(|(p, r)| sub(r, p)).collect();

    for ring in 0i64.. {
        for a in -ring..=ring {
            for b in -ring..=ring {
                if a.abs().max(b.abs()) != ring {
                    continue;
                }
                let dir = [q(a), q(b), q(1)];
                let hits_plane = planes.iter().enumerate().any(|(i, pl)| {
                    if !pl.maybe_contains(a as f64, b as f64) {
                        return false;
                    }
                    let n = exact[i].get_or_insert_with(|| {
                        let p = &pieces[pl.piece].0;
                        let n = cross(&piece_dirs[pl.piece], &sub(&points[pl.point], p));
                        (!is_zero(&n) && !(n[0].is_zero() && n[1].is_zero())).then_some(n)
                    });
                    n.as_ref().is_some_and(|n| dot(n, &dir).is_zero())
                });
                if hits_plane {
                    continue;
                }
                if piece_dirs.iter().any(|pd| is_zero(&cross(pd, &dir))) {
                    continue;
                }
                let out = project_along(d3, &dir[0], &dir[1])?;
                let ok = validate(&out, &g, DrawingStyle::Crossing2d)
                    .map(|r| r.violations.iter().all(|v| matches!(v, Violation::BendPresent { .. })))
                    .unwrap_or(false);
                if ok {
                    return Ok(out);
                }
            }
        }
    }
    unreachable!()
}

fn to_f64(v: &V3) -> [f64; 3] {
    use num_traits::ToPrimitive;
    [0, 1, 2].map(|i| v[i].to_f64().unwrap_or(f64::INFINITY))
}

/// Floating-point image of a plane normal with a bound on its rounding error.
struct Plane {
    piece: usize,
    point: usize,
    n: [f64; 3],
    mag: [f64; 3],
}

impl Plane {
    fn new(piece: usize, point: usize, p: &[f64; 3], r: &[f64; 3], w: &[f64; 3]) -> Self {
        let d = [0, 1, 2].map(|i| r[i] - p[i]);
        let e = [0, 1, 2].map(|i| w[i] - p[i]);
        let dm = [0, 1, 2].map(|i| r[i].abs() + p[i].abs());
        let em = [0, 1, 2].map(|i| w[i].abs() + p[i].abs());
        let comp = |x: [f64; 3], y: [f64; 3], i: usize, j: usize| x[i] * y[j] - x[j] * y[i];
        let mag = |i: usize, j: usize| dm[i] * em[j] + dm[j] * em[i];
        Plane {
            piece,
            point,
            n: [comp(d, e, 1, 2), comp(d, e, 2, 0), comp(d, e, 0, 1)],
            mag: [mag(1, 2), mag(2, 0), mag(0, 1)],
        }
    }

    /// False only when `n . (a, b, 1)` is certainly nonzero.
    fn maybe_contains(&self, a: f64, b: f64) -> bool {
        let v = self.n[0] * a + self.n[1] * b + self.n[2];
        let bound = self.mag[0] * a.abs() + self.mag[1] * b.abs() + self.mag[2];
        !bound.is_finite() || v.is_nan() || v.abs() <= 1e-9 * bound
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::decompose;
    use crate::geom::relate;
    use crate::graph::Graph;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let d = Drawing::straight(3, vec![Point::int3(0, 0, 0), Point::int3(0, 0, 1)], &g).unwrap();
        let p = generic_project(&d).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(decompose(&p).unwrap().count(), 1);
    }

    #[test]
    fn tetrahedron_projects_with_one_crossing() {
        let g = k4();
        let d = Drawing::straight(
            3,
            vec![Point::int3(1, 1, 1), Point::int3(1, -1, -1), Point::int3(-1, 1, -1), Point::int3(-1, -1, 1)],
            &g,
        )
        .unwrap();
        let p = generic_project(&d).unwrap();
        // enumerate all 15 edge pairs of the projection
        let edges: Vec<_> = g.edges().collect();
        let mut crossings = 0;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, e) = edges[j];
                let r = relate((p.vertex(a), p.vertex(b)), (p.vertex(c), p.vertex(e))).unwrap();
                if r == crate::geom::SegmentRelation::Cross {
                    crossings += 1;
                }
            }
        }
        assert_eq!(crossings, 1);
        assert_eq!(decompose(&p).unwrap().count(), 6);
    }

    #[test]
    fn flat_vertex_survives() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]);
        let d = Drawing::straight(
            3,
            vec![Point::int3(0, 0, 0), Point::int3(1, 1, 1), Point::int3(2, 2, 2), Point::int3(0, 3, 5)],
            &g,
        )
        .unwrap();
        let p = generic_project(&d).unwrap();
        assert!(crate::geom::between(p.vertex(1), p.vertex(0), p.vertex(2)).unwrap());
        assert_eq!(decompose(&p).unwrap().count(), 2);
    }

    #[test]
    fn rejects_invalid_input() {
        let g = Graph::from_edges(3, &[(0, 1)]);
        let d = Drawing::straight(3, vec![Point::int3(0, 0, 0), Point::int3(2, 2, 2), Point::int3(1, 1, 1)], &g).unwrap();
        assert!(matches!(generic_project(&d), Err(GeomError::InvalidInput(_))));
        let d2 = Drawing::straight(2, vec![Point::int2(0, 0), Point::int2(2, 2), Point::int2(1, 3)], &g).unwrap();
        assert!(matches!(generic_project(&d2), Err(GeomError::DimensionMismatch(3, 2))));
    }
}
