//! Witness drawings of the triangulation-plus-fans family.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::fan::{fan_local, FanFrame};
use super::witness::Claim;
use super::ConstructError;
use crate::drawing::Drawing;
use crate::families::{self, sfan_path_vertex, FamilyError, FamilyId};
use crate::geom::{q, qr, Point, Q};
use crate::graph::{planar_embedding, Graph, Vertex};

/// Lower bound `(t - 3)(i - 3)` on the planar straight-line segment number
/// of the member with parameter `i`, where `t = i^2 - 2i + 3`.
pub fn s_family_2d_lower_bound(i: usize) -> Result<usize, ConstructError> {
    if i < 3 {
        return Err(FamilyError::BadParameter { family: FamilyId::Sfan, param: i, why: "needs i >= 3" }.into());
    }
    let t = i * i - 2 * i + 3;
    Ok((t - 3) * (i - 3))
}

type P2 = (Q, Q);

fn sub(a: &P2, b: &P2) -> P2 {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn add(a: &P2, b: &P2) -> P2 {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn scale(a: &P2, s: &Q) -> P2 {
    (&a.0 * s, &a.1 * s)
}

fn cross(a: &P2, b: &P2) -> Q {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn dot(a: &P2, b: &P2) -> Q {
    &a.0 * &b.0 + &a.1 * &b.1
}

fn norm2(a: &P2) -> Q {
    dot(a, a)
}

fn perp(a: &P2) -> P2 {
    (-&a.1, a.0.clone())
}

fn to_f64(a: &P2) -> (f64, f64) {
    use num_traits::ToPrimitive;
    (a.0.to_f64().unwrap(), a.1.to_f64().unwrap())
}

fn pt(a: &P2) -> Point {
    Point::p2(a.0.clone(), a.1.clone())
}

/// Compares the counter-clockwise angles from `r` to `x` and to `y`, in `[0, 2pi)`.
fn angle_from(r: &P2, x: &P2, y: &P2) -> Ordering {
    let key = |v: &P2| {
        let (c, s) = (dot(r, v), cross(r, v));
        let upper = s.is_positive() || (s.is_zero() && c.is_positive());
        (!upper, (c, s))
    };
    let (hx, vx) = key(x);
    let (hy, vy) = key(y);
    hx.cmp(&hy).then_with(|| Q::zero().cmp(&cross(&(vx.0, vx.1), &(vy.0, vy.1))))
}

/// Whether `x` lies on the closed counter-clockwise arc from `from` to `to`.
fn in_arc(x: &P2, from: &P2, to: &P2) -> bool {
    angle_from(from, x, to) != Ordering::Greater
}

/// Rational point on the unit circle near angle `theta`.
fn unit(theta: f64, bits: u32) -> P2 {
    let mut th = theta.rem_euclid(2.0 * std::f64::consts::PI);
    let flip = th > std::f64::consts::FRAC_PI_2 && th < 1.5 * std::f64::consts::PI;
    if flip {
        th -= std::f64::consts::PI;
    }
    let den = BigInt::one() << bits;
    let t = Q::new(BigInt::from((th / 2.0).tan().mul_add(2f64.powi(bits as i32), 0.0).round() as i64), den);
    let d = Q::one() + &t * &t;
    let p = ((Q::one() - &t * &t) / &d, (q(2) * &t) / &d);
    if flip {
        (-p.0, -p.1)
    } else {
        p
    }
}

/// Rational unit vector strictly inside the counter-clockwise arc from `a` to `b`.
fn unit_between(a: &P2, b: &P2) -> P2 {
    let (fa, fb) = (to_f64(a), to_f64(b));
    let ta = fa.1.atan2(fa.0);
    let gap = (fb.1.atan2(fb.0) - ta).rem_euclid(2.0 * std::f64::consts::PI);
    let theta = ta + gap / 2.0;
    for bits in (12..=48).step_by(6) {
        let w = unit(theta, bits);
        if in_arc(&w, a, b) && !cross(a, &w).is_zero() && !cross(&w, b).is_zero() {
            return w;
        }
    }
    unreachable!("gap between distinct directions has positive width")
}

fn dist2_segment(p: &P2, a: &P2, b: &P2) -> Q {
    let ab = sub(b, a);
    let l = norm2(&ab);
    let mut s = dot(&sub(p, a), &ab) / &l;
    if s.is_negative() {
        s = Q::zero();
    } else if s > Q::one() {
        s = Q::one();
    }
    norm2(&sub(p, &add(a, &scale(&ab, &s))))
}

fn dist2_line(p: &P2, a: &P2, b: &P2) -> Q {
    let ab = sub(b, a);
    let c = cross(&ab, &sub(p, a));
    &c * &c / norm2(&ab)
}

/// Straight-line layout of the triangulation part with integer coordinates.
struct Layout {
    g: Graph,
    pos: Vec<P2>,
    outer: Vec<Vertex>,
    faces: Vec<Vec<Vertex>>,
}

impl Layout {
    fn new(i: usize) -> Result<Self, ConstructError> {
        let g = families::generate(FamilyId::Tgrid, i)?;
        let emb = planar_embedding(&g).ok_or(ConstructError::NotPlanar)?;
        let faces = emb.faces().to_vec();
        let outer = faces[0].clone();
        let fpos = tutte_f64(&g, &outer);
        for bits in (10..=50).step_by(4) {
            let s = 2f64.powi(bits);
            let pos: Vec<P2> = fpos.iter().map(|&(x, y)| (q((x * s).round() as i64), q((y * s).round() as i64))).collect();
            let sign = |f: &Vec<Vertex>| cross(&sub(&pos[f[1]], &pos[f[0]]), &sub(&pos[f[2]], &pos[f[0]])).signum();
            let s0 = sign(&faces[0]);
            if !s0.is_zero() && faces[1..].iter().all(|f| sign(f) == -&s0) {
                return Ok(Layout { g, pos, outer, faces });
            }
        }
        Err(ConstructError::Internal("barycentric layout did not round to a valid grid".into()))
    }

    fn t(&self) -> usize {
        self.g.n()
    }
}

/// Barycentric (Tutte) embedding with the outer triangle fixed, solved in floating point.
fn tutte_f64(g: &Graph, outer: &[Vertex]) -> Vec<(f64, f64)> {
    let n = g.n();
    let corners = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0)];
    let mut fixed = vec![None; n];
    for (k, &v) in outer.iter().enumerate() {
        fixed[v] = Some(corners[k]);
    }
    let inner: Vec<Vertex> = (0..n).filter(|&v| fixed[v].is_none()).collect();
    let mut idx = vec![usize::MAX; n];
    for (k, &v) in inner.iter().enumerate() {
        idx[v] = k;
    }
    let m = inner.len();
    let mut a = vec![vec![0.0; m + 2]; m];
    for (r, &v) in inner.iter().enumerate() {
        a[r][r] = g.degree(v) as f64;
        for &w in g.neighbors(v) {
            match fixed[w] {
                Some((x, y)) => {
                    a[r][m] += x;
                    a[r][m + 1] += y;
                }
                None => a[r][idx[w]] -= 1.0,
            }
        }
    }
    for c in 0..m {
        let p = (c..m).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs())).unwrap();
        a.swap(c, p);
        for r in 0..m {
            if r != c && a[r][c] != 0.0 {
                let f = a[r][c] / a[c][c];
                for k in c..m + 2 {
                    a[r][k] -= f * a[c][k];
                }
            }
        }
    }
    (0..n)
        .map(|v| fixed[v].unwrap_or_else(|| (a[idx[v]][m] / a[idx[v]][idx[v]], a[idx[v]][m + 1] / a[idx[v]][idx[v]])))
        .collect()
}

fn check_even(i: usize) -> Result<(), ConstructError> {
    families::FamilyId::Sfan.check_param(i)?;
    if i % 2 == 1 {
        return Err(ConstructError::OddFan(i));
    }
    Ok(())
}

fn place_fan(pos: &mut [Point], i: usize, t: usize, v: Vertex, frame: &FanFrame) {
    for (j, (s, u)) in fan_local(i).iter().enumerate() {
        pos[sfan_path_vertex(i, t, v, j)] = frame.map(s, u);
    }
}

/// Triangulation in the plane `z = 0`, each fan in its own vertical plane.
pub(super) fn sfan_3d(i: usize) -> Result<(Drawing, Claim), ConstructError> {
    check_even(i)?;
    let lay = Layout::new(i)?;
    let t = lay.t();
    let a = (i / 2) as i64;
    let mut dmin: Option<Q> = None;
    for u in 0..t {
        for v in u + 1..t {
            let d = sub(&lay.pos[u], &lay.pos[v]);
            let linf = d.0.abs().max(d.1.abs());
            dmin = Some(dmin.map_or(linf.clone(), |m: Q| m.min(linf)));
        }
    }
    let dmin = dmin.unwrap();
    let g = families::generate(FamilyId::Sfan, i)?;
    let lift = |p: &P2| Point::p3(p.0.clone(), p.1.clone(), Q::zero());
    let mut pos = vec![Point::int3(0, 0, 0); g.n()];
    for v in 0..t {
        pos[v] = lift(&lay.pos[v]);
        let f = lay.faces[1..].iter().find(|f| f.contains(&v)).unwrap();
        let others: Vec<_> = f.iter().filter(|&&w| w != v).collect();
        // points into an incident face; the fan plane crosses z = 0 only at v and at v + sigma*d
        let d = add(&sub(&lay.pos[*others[0]], &lay.pos[v]), &sub(&lay.pos[*others[1]], &lay.pos[v]));
        let dinf = d.0.abs().max(d.1.abs());
        let sigma = qr(1, 4).min(&dmin / (q(4 * a) * dinf));
        let e1 = scale(&d, &-sigma);
        let frame = FanFrame { apex: pos[v].clone(), e1: lift(&e1), e2: Point::int3(0, 0, 1) };
        place_fan(&mut pos, i, t, v, &frame);
    }
    let tcount = 3 * t - 6;
    Ok((Drawing::straight(3, pos, &g)?, Claim::AtMost(t * (i / 2 + 3) + tcount)))
}

/// Squeezed fan directions at `apex` pointing away along `o`, avoiding the
/// closed counter-clockwise cone `from -> to` and staying within squared
/// distance `reach2` of the apex.
fn fan_frame(apex: &P2, o: &P2, from: &P2, to: &P2, reach2: &Q, i: usize) -> FanFrame {
    let local = fan_local(i);
    let image = |e1: &P2, e2: &P2, s: &Q, u: &Q| add(&scale(e1, s), &scale(e2, u));
    let mut eps = qr(1, 2);
    let (e1, mut e2) = loop {
        let (e1, e2) = (perp(o), scale(o, &-&eps));
        let first = image(&e1, &e2, &local[0].0, &local[0].1);
        let last = image(&e1, &e2, &local[i].0, &local[i].1);
        let (lo, hi) = if in_arc(o, &first, &last) { (first, last) } else { (last, first) };
        let clear = !in_arc(&lo, from, to) && !in_arc(&hi, from, to) && !in_arc(from, &lo, &hi) && !in_arc(to, &lo, &hi);
        if clear {
            break (e1, e2);
        }
        eps /= q(2);
    };
    let mut e1 = e1;
    while local.iter().any(|(s, u)| norm2(&image(&e1, &e2, s, u)) > *reach2) {
        e1 = scale(&e1, &qr(1, 2));
        e2 = scale(&e2, &qr(1, 2));
    }
    FanFrame { apex: pt(apex), e1: pt(&e1), e2: pt(&e2) }
}

/// Polyline drawing: each inner vertex moves to a corner of a small convex
/// polygon around it, leaving a reflex angle that receives the fan.
pub(super) fn sfan_bend(i: usize) -> Result<(Drawing, Claim), ConstructError> {
    check_even(i)?;
    let lay = Layout::new(i)?;
    let t = lay.t();
    let g = families::generate(FamilyId::Sfan, i)?;
    let mut pos = vec![Point::int2(0, 0); g.n()];
    // bend near `v` on edge v-u, keyed by (v, u)
    let mut bend = std::collections::HashMap::new();
    let mut min_edge2: Option<Q> = None;
    for (u, v) in lay.g.edges() {
        let l = norm2(&sub(&lay.pos[u], &lay.pos[v]));
        min_edge2 = Some(min_edge2.map_or(l.clone(), |m: Q| m.min(l)));
    }
    let min_edge2 = min_edge2.unwrap();
    for v in 0..t {
        let p = &lay.pos[v];
        if let Some(k) = lay.outer.iter().position(|&w| w == v) {
            let d1 = sub(&lay.pos[lay.outer[(k + 1) % 3]], p);
            let d2 = sub(&lay.pos[lay.outer[(k + 2) % 3]], p);
            let (from, to) = if cross(&d1, &d2).is_positive() { (d1, d2) } else { (d2, d1) };
            let o = scale(&add(&from, &to), &q(-1));
            let frame = fan_frame(p, &o, &from, &to, &(&min_edge2 / q(64)), i);
            pos[v] = pt(p);
            place_fan(&mut pos, i, t, v, &frame);
            continue;
        }
        let mut nbrs: Vec<Vertex> = lay.g.neighbors(v).to_vec();
        let dirs0 = sub(&lay.pos[nbrs[0]], p);
        nbrs.sort_by(|&x, &y| angle_from(&dirs0, &sub(&lay.pos[x], p), &sub(&lay.pos[y], p)));
        let dirs: Vec<P2> = nbrs.iter().map(|&u| sub(&lay.pos[u], p)).collect();
        let k = dirs.len();
        let mut rho2 = dirs.iter().map(norm2).min().unwrap();
        for j in 0..k {
            rho2 = rho2.min(dist2_segment(p, &lay.pos[nbrs[j]], &lay.pos[nbrs[(j + 1) % k]]));
        }
        let mut r = Q::one();
        while &r * &r * q(16) >= rho2 {
            r /= q(2);
        }
        while &r * &r * q(64) < rho2 {
            r *= q(2);
        }
        let w: Vec<P2> = (0..k).map(|j| unit_between(&dirs[j], &dirs[(j + 1) % k])).collect();
        let c: Vec<P2> = w.iter().map(|w| add(p, &scale(w, &r))).collect();
        for j in 0..k {
            let (c0, c1) = (&c[(j + k - 1) % k], &c[j]);
            let chord = sub(c1, c0);
            let lambda = cross(&chord, &sub(c0, p)) / cross(&chord, &dirs[j]);
            bend.insert((v, nbrs[j]), add(p, &scale(&dirs[j], &lambda)));
        }
        let widest = (0..k)
            .max_by(|&x, &y| {
                let gap = |j: usize| {
                    let (a, b) = (to_f64(&dirs[j]), to_f64(&dirs[(j + 1) % k]));
                    (b.1.atan2(b.0) - a.1.atan2(a.0)).rem_euclid(2.0 * std::f64::consts::PI)
                };
                gap(x).total_cmp(&gap(y))
            })
            .unwrap();
        let apex = &c[widest];
        let from = sub(&c[(widest + 1) % k], apex);
        let to = sub(&c[(widest + k - 1) % k], apex);
        let mut reach2 = &rho2 / q(64);
        for &u in &nbrs {
            reach2 = reach2.min(dist2_line(apex, p, &lay.pos[u]) / q(4));
        }
        let frame = fan_frame(apex, &w[widest], &from, &to, &reach2, i);
        pos[v] = pt(apex);
        place_fan(&mut pos, i, t, v, &frame);
    }
    let mut d = Drawing::new(2, pos)?;
    for (u, v) in g.edges() {
        let mut bends = Vec::new();
        if u < t && v < t {
            bends.extend(bend.get(&(u, v)).map(pt));
            bends.extend(bend.get(&(v, u)).map(pt));
        }
        d.add_edge(u, v, bends)?;
    }
    Ok((d, Claim::AtMost(t * (i / 2 + 3) + 3 * (3 * t - 6))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{decompose, validate, DrawingStyle};

    #[test]
    fn lower_bound_values() {
        assert_eq!(s_family_2d_lower_bound(3).unwrap(), 0);
        assert_eq!(s_family_2d_lower_bound(4).unwrap(), 8);
        assert_eq!(s_family_2d_lower_bound(8).unwrap(), 48 * 5);
        assert!(s_family_2d_lower_bound(2).is_err());
    }

    #[test]
    fn layout_is_plane() {
        for i in 3..=8 {
            let lay = Layout::new(i).unwrap();
            let d = Drawing::straight(2, lay.pos.iter().map(pt).collect(), &lay.g).unwrap();
            assert!(validate(&d, &lay.g, DrawingStyle::Planar2d).unwrap().is_valid(), "i={i}");
        }
    }

    #[test]
    fn both_witnesses_for_small_i() {
        for i in [4, 6] {
            let g = families::generate(FamilyId::Sfan, i).unwrap();
            for (style, (d, claim)) in [(DrawingStyle::Free3d, sfan_3d(i).unwrap()), (DrawingStyle::Bend2d, sfan_bend(i).unwrap())] {
                let rep = validate(&d, &g, style).unwrap();
                assert!(rep.is_valid(), "i={i} {style}: {rep}");
                let c = decompose(&d).unwrap().count();
                assert!(claim.holds(c), "i={i} {style}: {c} vs {claim:?}");
            }
        }
        assert!(matches!(sfan_3d(5), Err(ConstructError::OddFan(5))));
    }
}
