use super::ConstructError;
use crate::drawing::Drawing;
use crate::geom::{q, Point, Q};
use crate::graph::Graph;

/// Affine placement of a fan: local `(s, t)` maps to `apex + s*e1 + t*e2`.
/// `e1` and `e2` are direction vectors of the apex's dimension and must be
/// linearly independent.
#[derive(Clone, Debug)]
pub struct FanFrame {
    pub apex: Point,
    pub e1: Point,
    pub e2: Point,
}

impl FanFrame {
    /// The unit frame at the origin of the plane.
    pub fn unit() -> Self {
        FanFrame { apex: Point::int2(0, 0), e1: Point::int2(1, 0), e2: Point::int2(0, 1) }
    }

    pub(crate) fn map(&self, s: &Q, t: &Q) -> Point {
        let c = self
            .apex
            .coords()
            .iter()
            .zip(self.e1.coords())
            .zip(self.e2.coords())
            .map(|((a, x), y)| a + s * x + t * y)
            .collect();
        Point::new(c).expect("frame has 2 or 3 coordinates")
    }
}

/// Local coordinates of the fan path `P_0..P_i` around an apex at the
/// origin. The path runs along `t = -1` to the corner `(-1, -1)` and up the
/// line `s = -1`; `P_j`, the apex and `P_{i/2+1+j}` are collinear.
pub(crate) fn fan_local(i: usize) -> Vec<(Q, Q)> {
    let a = (i / 2) as i64;
    let mut pts = Vec::with_capacity(i + 1);
    for j in 0..a {
        pts.push((q(a - j), q(-1)));
    }
    pts.push((q(-1), q(-1)));
    for j in 0..a {
        let s = a + 1 - j;
        pts.push((q(-1), Q::new(1.into(), (s - 1).into())));
    }
    pts
}

/// The `i`-fan: apex 0 joined to every vertex of the path `1..=i+1`.
pub fn fan_graph(i: usize) -> Graph {
    let mut e = Vec::with_capacity(2 * i + 1);
    for j in 1..=i + 1 {
        e.push((0, j));
        if j <= i {
            e.push((j, j + 1));
        }
    }
    Graph::from_edges(i + 2, &e)
}

/// Straight-line drawing of the `i`-fan with `i/2 + 3` segments: the path
/// uses two, the spoke to the corner one, and the others pair up through
/// the apex.
pub fn draw_fan(i: usize, frame: &FanFrame) -> Result<(Graph, Drawing), ConstructError> {
    if i % 2 == 1 || i < 2 {
        return Err(ConstructError::OddFan(i));
    }
    let dim = frame.apex.dim();
    if frame.e1.dim() != dim || frame.e2.dim() != dim {
        return Err(ConstructError::Internal("fan frame mixes dimensions".into()));
    }
    let g = fan_graph(i);
    let mut pos = vec![frame.apex.clone()];
    pos.extend(fan_local(i).iter().map(|(s, t)| frame.map(s, t)));
    let d = Drawing::straight(dim, pos, &g)?;
    Ok((g, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{decompose, validate, DrawingStyle};

    #[test]
    fn counts() {
        for i in (2..=16).step_by(2) {
            let (g, d) = draw_fan(i, &FanFrame::unit()).unwrap();
            assert!(validate(&d, &g, DrawingStyle::Planar2d).unwrap().is_valid());
            assert_eq!(decompose(&d).unwrap().count(), i / 2 + 3, "i={i}");
        }
        assert!(matches!(draw_fan(3, &FanFrame::unit()), Err(ConstructError::OddFan(3))));
    }

    #[test]
    fn tilted_frame_in_space() {
        let frame = FanFrame { apex: Point::int3(1, 2, 3), e1: Point::int3(1, 1, 0), e2: Point::int3(0, 1, 5) };
        let (g, d) = draw_fan(6, &frame).unwrap();
        assert!(validate(&d, &g, DrawingStyle::Free3d).unwrap().is_valid());
        assert_eq!(decompose(&d).unwrap().count(), 6);
    }
}
