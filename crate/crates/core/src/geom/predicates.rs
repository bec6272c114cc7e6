use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};

use super::point::{cross, dot, is_zero, sub};
use super::{GeomError, Point, Q, V3};

/// How two closed segments meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentRelation {
    Disjoint,
    /// Single common point, interior to both.
    Cross,
    /// Single common point, an endpoint of both.
    ShareEndpoint,
    /// Single common point, an endpoint of one and interior to the other.
    EndpointOnInterior,
    /// Collinear with a common piece of positive length.
    Overlap,
}

fn sign(x: &Q) -> Ordering {
    x.cmp(&Q::zero())
}

pub fn orient2d(a: &Point, b: &Point, c: &Point) -> Ordering {
    let (a, b, c) = (a.v3(), b.v3(), c.v3());
    sign(&cross(&sub(&b, &a), &sub(&c, &a))[2])
}

/// Sign of the determinant of `b - a`, `c - a`, `d - a`.
pub fn orient3d(a: &Point, b: &Point, c: &Point, d: &Point) -> Ordering {
    let a = a.v3();
    let (u, v, w) = (sub(&b.v3(), &a), sub(&c.v3(), &a), sub(&d.v3(), &a));
    sign(&dot(&u, &cross(&v, &w)))
}

pub fn coplanar(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    orient3d(a, b, c, d) == Ordering::Equal
}

/// `p` lies on the line through `a` and `b`.
pub fn point_on_line(p: &Point, a: &Point, b: &Point) -> bool {
    let a3 = a.v3();
    is_zero(&cross(&sub(&p.v3(), &a3), &sub(&b.v3(), &a3)))
}

/// `a` lies on the closed segment `bc`.
pub fn between(a: &Point, b: &Point, c: &Point) -> Result<bool, GeomError> {
    a.same_dim(b)?;
    a.same_dim(c)?;
    let (a, b, c) = (a.v3(), b.v3(), c.v3());
    let ab = sub(&a, &b);
    let ac = sub(&a, &c);
    Ok(is_zero(&cross(&ab, &sub(&c, &b))) && dot(&ab, &ac) <= Q::zero())
}

/// `a` lies on the open segment `bc`.
pub fn strictly_between(a: &Point, b: &Point, c: &Point) -> Result<bool, GeomError> {
    Ok(between(a, b, c)? && a != b && a != c)
}

/// Lines through `(a, b)` and `(c, d)` are not coplanar.
pub fn skew(l1: (&Point, &Point), l2: (&Point, &Point)) -> Result<bool, GeomError> {
    l1.0.same_dim(l1.1)?;
    l1.0.same_dim(l2.0)?;
    l1.0.same_dim(l2.1)?;
    if l1.0 == l1.1 || l2.0 == l2.1 {
        return Err(GeomError::DegenerateLine);
    }
    Ok(!coplanar(l1.0, l1.1, l2.0, l2.1))
}

/// Unique intersection point of two coplanar, non-parallel lines.
pub fn intersect_lines(a: &Point, b: &Point, c: &Point, d: &Point) -> Option<V3> {
    let a3 = a.v3();
    let u = sub(&b.v3(), &a3);
    let v = sub(&d.v3(), &c.v3());
    let n = cross(&u, &v);
    if is_zero(&n) {
        return None;
    }
    let w = sub(&c.v3(), &a3);
    if !dot(&w, &n).is_zero() {
        return None;
    }
    let s = dot(&cross(&w, &v), &n) / dot(&n, &n);
    Some([&a3[0] + &u[0] * &s, &a3[1] + &u[1] * &s, &a3[2] + &u[2] * &s])
}

/// Exact classification of two closed segments in the plane or in space.
pub fn relate(s1: (&Point, &Point), s2: (&Point, &Point)) -> Result<SegmentRelation, GeomError> {
    let (a, b) = s1;
    let (c, d) = s2;
    a.same_dim(b)?;
    a.same_dim(c)?;
    a.same_dim(d)?;
    if a == b || c == d {
        return Err(GeomError::DegenerateSegment);
    }
    let a3 = a.v3();
    let u = sub(&b.v3(), &a3);
    let v = sub(&d.v3(), &c.v3());
    let w = sub(&c.v3(), &a3);
    let n = cross(&u, &v);
    let unit = |t: &Q| !t.is_negative() && *t <= Q::one();
    let at_end = |t: &Q| t.is_zero() || t.is_one();

    if is_zero(&n) {
        if !is_zero(&cross(&w, &u)) {
            return Ok(SegmentRelation::Disjoint);
        }
        let uu = dot(&u, &u);
        let tc = dot(&w, &u) / &uu;
        let td = dot(&sub(&d.v3(), &a3), &u) / &uu;
        let (lo, hi) = if tc <= td { (tc, td) } else { (td, tc) };
        let lo = lo.max(Q::zero());
        let hi = hi.min(Q::one());
        return Ok(match lo.cmp(&hi) {
            Ordering::Greater => SegmentRelation::Disjoint,
            Ordering::Equal => SegmentRelation::ShareEndpoint,
            Ordering::Less => SegmentRelation::Overlap,
        });
    }
    if !dot(&w, &n).is_zero() {
        return Ok(SegmentRelation::Disjoint);
    }
    let nn = dot(&n, &n);
    let s = dot(&cross(&w, &v), &n) / &nn;
    let t = dot(&cross(&w, &u), &n) / &nn;
    if !unit(&s) || !unit(&t) {
        return Ok(SegmentRelation::Disjoint);
    }
    Ok(match (at_end(&s), at_end(&t)) {
        (true, true) => SegmentRelation::ShareEndpoint,
        (false, false) => SegmentRelation::Cross,
        _ => SegmentRelation::EndpointOnInterior,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::int2(x, y)
    }

    fn p3(x: i64, y: i64, z: i64) -> Point {
        Point::int3(x, y, z)
    }

    #[test]
    fn between_examples() {
        assert!(between(&p(0, 0), &p(-1, 0), &p(1, 0)).unwrap());
        assert!(!between(&p(2, 0), &p(0, 0), &p(1, 0)).unwrap());
        assert!(between(&p3(1, 1, 1), &p3(0, 0, 0), &p3(3, 3, 3)).unwrap());
        assert!(between(&p(0, 0), &p(0, 0), &p(4, 1)).unwrap());
        assert_eq!(between(&p(0, 0), &p3(0, 0, 0), &p(1, 1)), Err(GeomError::DimensionMismatch(2, 3)));
    }

    #[test]
    fn relate_examples() {
        use SegmentRelation::*;
        assert_eq!(relate((&p(0, 0), &p(2, 0)), (&p(1, -1), &p(1, 1))).unwrap(), Cross);
        assert_eq!(relate((&p(0, 0), &p(1, 0)), (&p(1, 0), &p(2, 1))).unwrap(), ShareEndpoint);
        assert_eq!(relate((&p(0, 0), &p(2, 0)), (&p(1, 0), &p(3, 0))).unwrap(), Overlap);
        assert_eq!(relate((&p(0, 0), &p(2, 0)), (&p(1, 0), &p(1, 3))).unwrap(), EndpointOnInterior);
        assert_eq!(relate((&p(0, 0), &p(1, 0)), (&p(1, 0), &p(3, 0))).unwrap(), ShareEndpoint);
        assert_eq!(relate((&p(0, 0), &p(1, 0)), (&p(2, 0), &p(3, 0))).unwrap(), Disjoint);
        assert_eq!(relate((&p(0, 0), &p(0, 0)), (&p(2, 0), &p(3, 0))), Err(GeomError::DegenerateSegment));
        // skew segments in space never meet
        assert_eq!(relate((&p3(0, 0, 0), &p3(2, 0, 0)), (&p3(1, -1, 1), &p3(1, 1, 1))).unwrap(), Disjoint);
        assert_eq!(relate((&p3(0, 0, 0), &p3(2, 0, 0)), (&p3(1, -1, 0), &p3(1, 1, 0))).unwrap(), Cross);
    }

    #[test]
    fn skew_examples() {
        let o = p3(0, 0, 0);
        let x = p3(1, 0, 0);
        assert!(skew((&o, &x), (&p3(0, 0, 1), &p3(0, 1, 1))).unwrap());
        assert!(!skew((&o, &x), (&o, &p3(0, 1, 0))).unwrap());
        assert!(!skew((&o, &x), (&p3(0, 0, 1), &p3(1, 0, 1))).unwrap());
        assert_eq!(skew((&o, &o), (&o, &x)), Err(GeomError::DegenerateLine));
    }

    /// Textbook orientation-sign classification, independent of the
    /// parametric solution used by `relate`.
    fn oracle(a: (i64, i64), b: (i64, i64), c: (i64, i64), d: (i64, i64)) -> SegmentRelation {
        use SegmentRelation::*;
        let o = |p: (i64, i64), q: (i64, i64), r: (i64, i64)| ((q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)).signum();
        let on = |p: (i64, i64), q: (i64, i64), r: (i64, i64)| {
            o(q, r, p) == 0 && p.0 >= q.0.min(r.0) && p.0 <= q.0.max(r.0) && p.1 >= q.1.min(r.1) && p.1 <= q.1.max(r.1)
        };
        let (o1, o2, o3, o4) = (o(a, b, c), o(a, b, d), o(c, d, a), o(c, d, b));
        if o1 == 0 && o2 == 0 {
            // collinear: count how much of each lies in the other
            let inside = [on(c, a, b), on(d, a, b), on(a, c, d), on(b, c, d)];
            let shared: std::collections::HashSet<_> = [(c, inside[0]), (d, inside[1]), (a, inside[2]), (b, inside[3])]
                .into_iter()
                .filter(|x| x.1)
                .map(|x| x.0)
                .collect();
            return match shared.len() {
                0 => Disjoint,
                1 => ShareEndpoint,
                _ => Overlap,
            };
        }
        let touching = [on(c, a, b), on(d, a, b), on(a, c, d), on(b, c, d)];
        if o1 * o2 < 0 && o3 * o4 < 0 {
            return Cross;
        }
        if !touching.iter().any(|&t| t) {
            return Disjoint;
        }
        if a == c || a == d || b == c || b == d {
            ShareEndpoint
        } else {
            EndpointOnInterior
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn relate_agrees_with_orientation_oracle(
            a in (-4i64..4, -4i64..4), b in (-4i64..4, -4i64..4),
            c in (-4i64..4, -4i64..4), d in (-4i64..4, -4i64..4),
        ) {
            prop_assume!(a != b && c != d);
            let r = relate((&p(a.0, a.1), &p(b.0, b.1)), (&p(c.0, c.1), &p(d.0, d.1))).unwrap();
            let r2 = relate((&p(c.0, c.1), &p(d.0, d.1)), (&p(a.0, a.1), &p(b.0, b.1))).unwrap();
            prop_assert_eq!(r, r2);
            prop_assert_eq!(r, oracle(a, b, c, d));
        }

        #[test]
        fn between_symmetries(a in (-5i64..5, -5i64..5), b in (-5i64..5, -5i64..5), c in (-5i64..5, -5i64..5)) {
            let (a, b, c) = (p(a.0, a.1), p(b.0, b.1), p(c.0, c.1));
            prop_assert_eq!(between(&a, &b, &c).unwrap(), between(&a, &c, &b).unwrap());
            prop_assert!(between(&b, &b, &c).unwrap());
        }
    }
}
