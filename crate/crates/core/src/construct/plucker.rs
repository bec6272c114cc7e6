use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::geom::{Q, V3};

/// A line in space in integer Plücker coordinates `(d, m)` with
/// `m = p x d` for any point `p` on it, scaled to coprime integers.
#[derive(Clone, Debug)]
pub(crate) struct PLine {
    d: [BigInt; 3],
    m: [BigInt; 3],
    small: Option<[i64; 6]>,
}

const SMALL: i64 = 1 << 61;

impl PLine {
    /// Line through two distinct points.
    pub fn through(p: &V3, q: &V3) -> PLine {
        let d: Vec<Q> = (0..3).map(|i| &q[i] - &p[i]).collect();
        let m = [
            &p[1] * &q[2] - &p[2] * &q[1],
            &p[2] * &q[0] - &p[0] * &q[2],
            &p[0] * &q[1] - &p[1] * &q[0],
        ];
        let all: Vec<&Q> = d.iter().chain(m.iter()).collect();
        debug_assert!(d.iter().any(|x| !x.is_zero()), "degenerate line");
        let lcm = all.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = all.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let ints: Vec<BigInt> = ints.into_iter().map(|x| x / &g).collect();
        let small = ints
            .iter()
            .map(|x| x.to_i64().filter(|v| v.abs() < SMALL))
            .collect::<Option<Vec<i64>>>()
            .map(|v| [v[0], v[1], v[2], v[3], v[4], v[5]]);
        PLine {
            d: [ints[0].clone(), ints[1].clone(), ints[2].clone()],
            m: [ints[3].clone(), ints[4].clone(), ints[5].clone()],
            small,
        }
    }

    /// True when the two lines lie in a common plane (meet or are parallel).
    pub fn coplanar(&self, o: &PLine) -> bool {
        if let (Some(a), Some(b)) = (&self.small, &o.small) {
            let mut s: i128 = 0;
            for i in 0..3 {
                s += a[i] as i128 * b[3 + i] as i128 + b[i] as i128 * a[3 + i] as i128;
            }
            return s == 0;
        }
        let s: BigInt = (0..3).map(|i| &self.d[i] * &o.m[i] + &o.d[i] * &self.m[i]).sum();
        s.is_zero()
    }

    pub fn parallel(&self, o: &PLine) -> bool {
        let (a, b) = (&self.d, &o.d);
        (&a[1] * &b[2] - &a[2] * &b[1]).is_zero()
            && (&a[2] * &b[0] - &a[0] * &b[2]).is_zero()
            && (&a[0] * &b[1] - &a[1] * &b[0]).is_zero()
    }

    pub fn contains(&self, x: &V3) -> bool {
        let d: Vec<Q> = self.d.iter().map(|v| Q::from_integer(v.clone())).collect();
        let c = [
            &x[1] * &d[2] - &x[2] * &d[1],
            &x[2] * &d[0] - &x[0] * &d[2],
            &x[0] * &d[1] - &x[1] * &d[0],
        ];
        (0..3).all(|i| c[i] == Q::from_integer(self.m[i].clone()))
    }

    /// Two lines that are neither skew nor equal either meet in exactly one
    /// point or are parallel; returns true if they meet exactly at `x`.
    pub fn meets_only_at(&self, o: &PLine, x: &V3) -> bool {
        !self.parallel(o) && self.contains(x) && o.contains(x)
    }

    /// Point of the line with the given x-coordinate (the line must not be
    /// perpendicular to the x-axis).
    pub fn at_x(&self, through: &V3, x: &Q) -> V3 {
        let d: Vec<Q> = self.d.iter().map(|v| Q::from_integer(v.clone())).collect();
        let t = (x - &through[0]) / &d[0];
        [x.clone(), &through[1] + &t * &d[1], &through[2] + &t * &d[2]]
    }

}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{q, qr};

    fn v(x: i64, y: i64, z: i64) -> V3 {
        [q(x), q(y), q(z)]
    }

    #[test]
    fn skew_and_meeting_lines() {
        let a = PLine::through(&v(0, 0, 0), &v(1, 0, 0));
        let b = PLine::through(&v(0, 1, 1), &v(0, 2, 1));
        assert!(!a.coplanar(&b));
        let c = PLine::through(&v(0, 0, 0), &v(0, 1, 0));
        assert!(a.coplanar(&c));
        assert!(a.meets_only_at(&c, &v(0, 0, 0)));
        assert!(!a.meets_only_at(&c, &v(1, 0, 0)));
        let p = PLine::through(&v(0, 1, 0), &v(2, 1, 0));
        assert!(a.coplanar(&p) && a.parallel(&p));
    }

    #[test]
    fn rational_points() {
        let p = [qr(1, 2), qr(1, 3), q(0)];
        let r = [qr(5, 2), qr(7, 3), q(4)];
        let l = PLine::through(&p, &r);
        assert!(l.contains(&p) && l.contains(&r));
        let m = l.at_x(&p, &qr(3, 2));
        assert_eq!(m, [qr(3, 2), qr(4, 3), q(2)]);
        assert!(l.contains(&m));
    }
}
