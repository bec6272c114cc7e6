//! Exact rational geometry in the plane and in space.

mod point;
mod predicates;
mod project;

pub use point::{Point, V3};
pub use predicates::{
    between, coplanar, intersect_lines, orient2d, orient3d, point_on_line, relate, skew, strictly_between,
    SegmentRelation,
};
pub use project::{generic_project, project_along};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number; all coordinates use it.
pub type Q = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("points have different dimensions ({0} vs {1})")]
    DimensionMismatch(usize, usize),
    #[error("segment endpoints coincide")]
    DegenerateSegment,
    #[error("line is defined by two equal points")]
    DegenerateLine,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("cannot parse rational `{0}`")]
    BadRational(String),
}

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `num/den`, with `/den` omitted for integers.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the canonical `num/den` form. Non-canonical but equal spellings
/// (`2/4`, `3/1`) are accepted and normalised.
pub fn parse_q(s: &str) -> Result<Q, GeomError> {
    let bad = || GeomError::BadRational(s.to_string());
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(n, d))
}
