use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ConstructError;
use crate::drawing::{Drawing, DrawingStyle};
use crate::families::{self, fk23_base, fk23_port, gcat_leaf_parent, FamilyId, K4_PRIME_PORT};
use crate::geom::{q, qr, Point, Q};
use crate::graph::{Graph, Vertex};

/// What a witness construction promises about its segment count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Exact(usize),
    AtMost(usize),
}

impl Claim {
    pub fn holds(self, count: usize) -> bool {
        match self {
            Claim::Exact(c) => count == c,
            Claim::AtMost(c) => count <= c,
        }
    }

    pub fn value(self) -> usize {
        match self {
            Claim::Exact(c) | Claim::AtMost(c) => c,
        }
    }
}

/// An explicit drawing of a family member together with its claimed count.
#[derive(Clone, Debug)]
pub struct Witness {
    pub graph: Graph,
    pub drawing: Drawing,
    pub style: DrawingStyle,
    pub claim: Claim,
}

/// Styles for which a witness drawing of `family` is available; the first
/// is the default.
pub fn witness_styles(family: FamilyId) -> &'static [DrawingStyle] {
    use DrawingStyle::*;
    match family {
        FamilyId::Gcat | FamilyId::Icycle => &[Planar2d],
        FamilyId::Hcycle => &[Crossing2d, Free3d],
        FamilyId::K23GadgetF => &[Free3d],
        FamilyId::Sfan => &[Free3d, Bend2d],
        _ => &[],
    }
}

/// Witness drawing of `family` with parameter `k` in `style` (the
/// family's default style when `None`).
pub fn draw_witness(family: FamilyId, k: usize, style: Option<DrawingStyle>) -> Result<Witness, ConstructError> {
    let styles = witness_styles(family);
    let style = style.or(styles.first().copied()).ok_or(ConstructError::NoWitness(family, None))?;
    if !styles.contains(&style) {
        return Err(ConstructError::NoWitness(family, Some(style)));
    }
    let graph = families::generate(family, k)?;
    let (drawing, claim) = match (family, style) {
        (FamilyId::Gcat, _) => (gcat(k)?, Claim::Exact(5 * k - 1)),
        (FamilyId::Icycle, _) => (icycle(k)?, Claim::Exact(3 * k)),
        (FamilyId::Hcycle, DrawingStyle::Crossing2d) => (hcycle(k, false)?, Claim::Exact(4 * k)),
        (FamilyId::Hcycle, _) => (hcycle(k, true)?, Claim::Exact(5 * k)),
        (FamilyId::K23GadgetF, _) => (fk23(k)?, Claim::Exact(7 * k / 2)),
        (FamilyId::Sfan, DrawingStyle::Free3d) => super::sfan::sfan_3d(k)?,
        (FamilyId::Sfan, _) => super::sfan::sfan_bend(k)?,
        _ => unreachable!("filtered by witness_styles"),
    };
    Ok(Witness { graph, drawing, style, claim })
}

type P2 = (Q, Q);

fn lerp(a: &P2, b: &P2, t: &Q) -> P2 {
    (&a.0 + t * (&b.0 - &a.0), &a.1 + t * (&b.1 - &a.1))
}

fn pt(p: &P2) -> Point {
    Point::p2(p.0.clone(), p.1.clone())
}

/// `k` rational points on the unit circle in counter-clockwise order,
/// close to a regular polygon.
pub(crate) fn circle_polygon(k: usize) -> Vec<P2> {
    let den = 1 << 12;
    (0..k)
        .map(|j| {
            let theta = -std::f64::consts::PI + std::f64::consts::PI * (2 * j + 1) as f64 / k as f64;
            let t = Q::new(BigInt::from(((theta / 2.0).tan() * den as f64).round() as i64), BigInt::from(den));
            let d = Q::one() + &t * &t;
            ((Q::one() - &t * &t) / &d, (q(2) * &t) / &d)
        })
        .collect()
}

fn gcat(k: usize) -> Result<Drawing, ConstructError> {
    // K4' with the port at the origin, hanging "up" from its attachment
    let local = [(0, 1), (2, 1), (0, 3), (1, 1), (0, 0)];
    let n = 6 * k - 2;
    let mut pos = vec![Point::int2(0, 0); n];
    let mut place = |j: usize, s: (i64, i64), up: (i64, i64)| {
        let right = (up.1, -up.0);
        for (l, &(x, y)) in local.iter().enumerate() {
            pos[5 * j + l] = Point::int2(s.0 + x * right.0 + y * up.0, s.1 + x * right.1 + y * up.1);
        }
    };
    if k == 2 {
        place(0, (0, 0), (-1, 0));
        place(1, (2, 0), (1, 0));
    } else {
        let last = k - 3;
        for j in 0..k {
            let c = gcat_leaf_parent(k, j).unwrap();
            let x = 4 * c as i64;
            let (s, up) = if j == 0 {
                ((x - 2, 0), (-1, 0))
            } else if j == k - 1 {
                ((x + 2, 0), (1, 0))
            } else if c % 2 == 0 {
                ((x, 2), (0, 1))
            } else {
                ((x, -2), (0, -1))
            };
            place(j, s, up);
        }
        for c in 0..=last {
            pos[5 * k + c] = Point::int2(4 * c as i64, 0);
        }
    }
    let g = families::generate(FamilyId::Gcat, k)?;
    debug_assert_eq!(g.neighbors(K4_PRIME_PORT).len(), 3);
    Ok(Drawing::straight(2, pos, &g)?)
}

fn icycle(k: usize) -> Result<Drawing, ConstructError> {
    let c = circle_polygon(k);
    let mut pos = vec![Point::int2(0, 0); 4 * k];
    for i in 0..k {
        let (prev, cur, next) = (&c[(i + k - 1) % k], &c[i], &c[(i + 1) % k]);
        pos[4 * i] = pt(cur);
        pos[4 * i + 1] = pt(&lerp(cur, next, &qr(1, 2)));
        pos[4 * i + 2] = pt(&lerp(prev, cur, &qr(5, 4)));
        pos[4 * i + 3] = pt(&lerp(cur, next, &qr(1, 4)));
    }
    let g = families::generate(FamilyId::Icycle, k)?;
    Ok(Drawing::straight(2, pos, &g)?)
}

fn hcycle(k: usize, lift: bool) -> Result<Drawing, ConstructError> {
    let c = circle_polygon(k);
    let mut pos = vec![Point::int2(0, 0); 6 * k];
    for i in 0..k {
        let (prev, cur, next) = (&c[(i + k - 1) % k], &c[i], &c[(i + 1) % k]);
        let a2 = lerp(cur, next, &qr(1, 5));
        let a3 = lerp(prev, cur, &qr(6, 5));
        let b3 = lerp(&a3, &a2, &qr(1, 2));
        let spots = [
            lerp(prev, cur, &qr(4, 5)),
            a2.clone(),
            a3.clone(),
            lerp(cur, next, &qr(2, 5)),
            cur.clone(),
            b3,
        ];
        for (l, p) in spots.iter().enumerate() {
            pos[6 * i + l] = pt(p);
        }
    }
    let g = families::generate(FamilyId::Hcycle, k)?;
    if lift {
        let white = |v: Vertex| v % 6 == 5;
        let pos3 = pos
            .iter()
            .enumerate()
            .map(|(v, p)| Point::p3(p.x().clone(), p.y().clone(), if white(v) { Q::one() } else { Q::zero() }))
            .collect();
        return Ok(Drawing::straight(3, pos3, &g)?);
    }
    Ok(Drawing::straight(2, pos, &g)?)
}

fn fk23(k: usize) -> Result<Drawing, ConstructError> {
    let base = fk23_base(k);
    let corners: Vec<[Q; 3]> = if k == 4 {
        vec![[q(0), q(0), q(0)], [q(8), q(0), q(0)], [q(0), q(8), q(0)], [q(0), q(0), q(8)]]
    } else {
        let h = k / 2;
        let ring = circle_polygon(h);
        (0..k)
            .map(|v| {
                let (x, y) = &ring[v % h];
                [x * q(8), y * q(8), if v < h { q(0) } else { q(8) }]
            })
            .collect()
    };
    let towards = |v: usize, w: usize, t: &Q| -> [Q; 3] {
        std::array::from_fn(|i| &corners[v][i] + t * (&corners[w][i] - &corners[v][i]))
    };
    let mut pos = vec![Point::int3(0, 0, 0); 5 * k];
    for v in 0..k {
        pos[5 * v] = Point::from_v3(corners[v].clone(), 3);
        let mut ports = Vec::new();
        for &w in base.neighbors(v) {
            let y = towards(v, w, &qr(1, 4));
            pos[5 * v + fk23_port(&base, v, w)] = Point::from_v3(y.clone(), 3);
            ports.push(y);
        }
        let mid: [Q; 3] = std::array::from_fn(|i| (&ports[0][i] + &ports[1][i]) / q(2));
        pos[5 * v + 1] = Point::from_v3(mid, 3);
    }
    let g = families::generate(FamilyId::K23GadgetF, k)?;
    Ok(Drawing::straight(3, pos, &g)?)
}
