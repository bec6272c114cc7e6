use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::graph::Graph;

use super::{decompose, Drawing, DrawingError};

/// Flat vertices, tripods and (non-straight) bends of a cubic drawing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct VertexAudit {
    pub flat: usize,
    pub tripods: usize,
    pub bends: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub counts: VertexAudit,
    /// Segment count from the decomposition.
    pub segments: usize,
    /// Segment count from summing piece ends locally at vertices and bends.
    pub segments_from_ends: usize,
    pub n: usize,
}

impl AuditReport {
    /// `3n/2 - f + b`
    pub fn via_flat(&self) -> usize {
        3 * self.n / 2 + self.counts.bends - self.counts.flat
    }

    /// `n/2 + t + b`
    pub fn via_tripods(&self) -> usize {
        self.n / 2 + self.counts.tripods + self.counts.bends
    }

    pub fn identity_holds(&self) -> bool {
        self.segments == self.segments_from_ends
            && self.segments == self.via_flat()
            && self.segments == self.via_tripods()
    }
}

/// Classifies every vertex of a cubic drawing and checks the counting
/// identity `seg = 3n/2 - f + b = n/2 + t + b`.
///
/// The local counts never look at the decomposition; the two sides of the
/// identity are computed independently.
pub fn audit(d: &Drawing, g: &Graph) -> Result<AuditReport, DrawingError> {
    if !g.is_cubic() {
        return Err(DrawingError::NotCubic);
    }
    d.check_structure(g)?;
    let mut counts = VertexAudit { bends: d.bend_count(), ..Default::default() };
    let mut ends = 2 * counts.bends;
    for v in 0..g.n() {
        let here = d.vertex(v).v3();
        let dirs: Vec<_> = g
            .neighbors(v)
            .iter()
            .map(|&w| {
                let next = d.route(v, w).unwrap()[1].v3();
                [&next[0] - &here[0], &next[1] - &here[1], &next[2] - &here[2]]
            })
            .collect();
        let mut opposite = 0;
        for i in 0..3 {
            for j in i + 1..3 {
                let (a, b) = (&dirs[i], &dirs[j]);
                let cross_zero = (&a[1] * &b[2] - &a[2] * &b[1]).is_zero()
                    && (&a[2] * &b[0] - &a[0] * &b[2]).is_zero()
                    && (&a[0] * &b[1] - &a[1] * &b[0]).is_zero();
                let dot = &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2];
                if cross_zero && dot.is_negative() {
                    opposite += 1;
                }
            }
        }
        match opposite {
            0 => counts.tripods += 1,
            1 => counts.flat += 1,
            _ => return Err(DrawingError::OverlapPresent(d.vertex(v).clone())),
        }
        ends += 3 - 2 * opposite;
    }
    let segments = decompose(d)?.count();
    Ok(AuditReport { counts, segments, segments_from_ends: ends / 2, n: g.n() })
}

/// Generic lower bounds on the segment number.
///
/// `odd_half` is half the number of odd-degree vertices (rounded up);
/// `cubic_hull` is `n/2 + 3`, emitted for cubic graphs flagged planar.
pub fn lower_bounds(g: &Graph, planar_hint: bool) -> BTreeMap<&'static str, usize> {
    let mut out = BTreeMap::new();
    out.insert("odd_half", g.odd_degree_count().div_ceil(2));
    if planar_hint && g.is_cubic() {
        out.insert("cubic_hull", g.n() / 2 + 3);
    }
    out
}
