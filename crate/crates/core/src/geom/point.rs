use std::fmt;

use num_traits::Zero;

use super::{format_q, q, GeomError, Q};

/// Vector in space; planar points are lifted with `z = 0`.
pub type V3 = [Q; 3];

/// A point with two or three exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Q>,
}

impl Point {
    pub fn new(coords: Vec<Q>) -> Result<Self, GeomError> {
        match coords.len() {
            2 | 3 => Ok(Point { coords }),
            d => Err(GeomError::InvalidInput(format!("points need 2 or 3 coordinates, got {d}"))),
        }
    }

    pub fn p2(x: Q, y: Q) -> Self {
        Point { coords: vec![x, y] }
    }

    pub fn p3(x: Q, y: Q, z: Q) -> Self {
        Point { coords: vec![x, y, z] }
    }

    pub fn int2(x: i64, y: i64) -> Self {
        Self::p2(q(x), q(y))
    }

    pub fn int3(x: i64, y: i64, z: i64) -> Self {
        Self::p3(q(x), q(y), q(z))
    }

    pub fn from_v3(v: V3, dim: usize) -> Self {
        let [x, y, z] = v;
        if dim == 2 {
            Self::p2(x, y)
        } else {
            Self::p3(x, y, z)
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn x(&self) -> &Q {
        &self.coords[0]
    }

    pub fn y(&self) -> &Q {
        &self.coords[1]
    }

    pub fn z(&self) -> Q {
        self.coords.get(2).cloned().unwrap_or_else(Q::zero)
    }

    pub fn v3(&self) -> V3 {
        [self.coords[0].clone(), self.coords[1].clone(), self.z()]
    }

    pub fn to_f64(&self) -> Vec<f64> {
        use num_traits::ToPrimitive;
        self.coords.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn same_dim(&self, other: &Point) -> Result<(), GeomError> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(GeomError::DimensionMismatch(self.dim(), other.dim()))
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_q).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub(crate) fn sub(a: &V3, b: &V3) -> V3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

pub(crate) fn dot(a: &V3, b: &V3) -> Q {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub(crate) fn cross(a: &V3, b: &V3) -> V3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn is_zero(a: &V3) -> bool {
    a.iter().all(Zero::is_zero)
}
