use std::fmt;

use num_traits::Zero;

use super::plucker::PLine;
use super::ConstructError;
use crate::drawing::Drawing;
use crate::geom::{q, Point, Q, V3};
use crate::graph::{is_biconnected, Graph, Vertex};
use crate::st::{default_endpoints, st_numbering, StNumbering};

/// How a vertex was placed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlacementCase {
    First,
    /// 1-vertex continuing the line ending at its predecessor.
    Extend,
    /// 1-vertex starting a fresh line.
    Fresh,
    /// 2-vertex with two fresh lines.
    FreshPair,
    /// 2-vertex put on one predecessor's line, pushed right by `eps`.
    ExtendShifted,
    Last,
}

/// One entry of the line-set evolution.
#[derive(Clone, Debug)]
pub struct StepRecord {
    pub step: usize,
    pub vertex: Vertex,
    pub case: PlacementCase,
    pub position: Point,
    pub lines: usize,
}

impl fmt::Display for StepRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {:>4}  v{:<4} {:<14} at {:?}  |L|={}", self.step, self.vertex, format!("{:?}", self.case), self.position, self.lines)
    }
}

/// Output of [`draw_bicubic_3d_traced`].
#[derive(Clone, Debug)]
pub struct Bicubic3d {
    pub drawing: Drawing,
    pub order: StNumbering,
    pub log: Vec<StepRecord>,
}

struct LineRec {
    pl: PLine,
    anchor: V3,
    verts: Vec<Vertex>,
}

struct State<'a> {
    g: &'a Graph,
    st: &'a StNumbering,
    pos: Vec<Option<V3>>,
    lines: Vec<LineRec>,
    /// Lines whose last placed vertex is `v`.
    open: Vec<Vec<usize>>,
}

const MAX_RING: i64 = 64;
const MAX_SHIFT: u32 = 48;

impl State<'_> {
    fn p(&self, v: Vertex) -> &V3 {
        self.pos[v].as_ref().expect("vertex placed")
    }

    /// A new line through `base` may meet existing lines only at `base`.
    fn admissible(&self, line: &PLine, base: &V3, except: Option<usize>) -> bool {
        self.lines.iter().enumerate().all(|(id, l)| {
            Some(id) == except || !line.coplanar(&l.pl) || line.meets_only_at(&l.pl, base)
        })
    }

    fn add_line(&mut self, from: Vertex, to: Vertex) {
        let (a, b) = (self.p(from).clone(), self.p(to).clone());
        self.lines.push(LineRec { pl: PLine::through(&a, &b), anchor: a, verts: vec![from, to] });
        self.open[to].push(self.lines.len() - 1);
    }

    fn extend(&mut self, line: usize, from: Vertex, to: Vertex) {
        self.open[from].retain(|&l| l != line);
        self.open[to].push(line);
        self.lines[line].verts.push(to);
    }

    /// Searches the plane `x` for a point whose lines to all of `preds` are
    /// admissible and pairwise distinct.
    fn free_point(&self, x: &Q, preds: &[Vertex]) -> Option<V3> {
        for r in 1..=MAX_RING {
            for (y, z) in ring(r) {
                let c = [x.clone(), q(y), q(z)];
                let new: Vec<PLine> = preds.iter().map(|&p| PLine::through(self.p(p), &c)).collect();
                let distinct = (0..new.len()).all(|a| (a + 1..new.len()).all(|b| !new[a].parallel(&new[b])));
                if distinct && preds.iter().zip(&new).all(|(&p, l)| self.admissible(l, self.p(p), None)) {
                    return Some(c);
                }
            }
        }
        None
    }

    fn check_invariant(&self) -> Result<(), ConstructError> {
        for (a, la) in self.lines.iter().enumerate() {
            for lb in &self.lines[a + 1..] {
                if !la.pl.coplanar(&lb.pl) {
                    continue;
                }
                let meet = la.verts.iter().chain(&lb.verts).any(|&w| la.pl.meets_only_at(&lb.pl, self.p(w)));
                if !meet {
                    return Err(ConstructError::Internal("line set invariant broken".into()));
                }
            }
        }
        Ok(())
    }
}

/// Integer points `(y, z)` with `max(|y|, |z|) = r`, in a fixed order.
fn ring(r: i64) -> impl Iterator<Item = (i64, i64)> {
    (-r..=r).flat_map(move |y| {
        let zs: Vec<i64> = if y.abs() == r { (-r..=r).collect() } else { vec![-r, r] };
        zs.into_iter().map(move |z| (y, z))
    })
}

/// Straight-line 3D drawing of a biconnected cubic graph with at most
/// `n + 2` segments, placing vertices left to right along an st-numbering.
pub fn draw_bicubic_3d(g: &Graph) -> Result<Drawing, ConstructError> {
    draw_bicubic_3d_traced(g, false).map(|r| r.drawing)
}

/// As [`draw_bicubic_3d`], also returning the ordering and the step log;
/// with `check` set, the line-set invariant is verified after every step.
pub fn draw_bicubic_3d_traced(g: &Graph, check: bool) -> Result<Bicubic3d, ConstructError> {
    if !g.is_cubic() || !is_biconnected(g) {
        return Err(ConstructError::NotBiconnectedCubic);
    }
    let (s, t) = default_endpoints(g).ok_or(ConstructError::NotBiconnectedCubic)?;
    let st = st_numbering(g, s, t).map_err(|_| ConstructError::NotBiconnectedCubic)?;
    let n = g.n();
    let mut state = State { g, st: &st, pos: vec![None; n], lines: Vec::new(), open: vec![Vec::new(); n] };
    let mut log = Vec::with_capacity(n);
    for (r, &v) in st.order().iter().enumerate() {
        let j = q(r as i64 + 1);
        let preds = st.predecessors(g, v);
        let case = if r == 0 {
            state.pos[v] = Some([q(1), q(1), q(1)]);
            PlacementCase::First
        } else if r + 1 == n {
            let c = state.free_point(&j, &preds).ok_or_else(|| no_candidate(v))?;
            state.pos[v] = Some(c);
            PlacementCase::Last
        } else if preds.len() == 1 {
            place_one(&mut state, v, preds[0], &j)?
        } else {
            place_two(&mut state, v, preds[0], preds[1], &j)?
        };
        if check {
            state.check_invariant()?;
        }
        log.push(StepRecord {
            step: r + 1,
            vertex: v,
            case,
            position: Point::from_v3(state.p(v).clone(), 3),
            lines: state.lines.len(),
        });
    }
    let points = state.pos.into_iter().map(|p| Point::from_v3(p.expect("all placed"), 3)).collect();
    let drawing = Drawing::straight(3, points, g)?;
    Ok(Bicubic3d { drawing, order: st, log })
}

fn no_candidate(v: Vertex) -> ConstructError {
    ConstructError::Internal(format!("no admissible position for vertex {v}"))
}

fn place_one(state: &mut State, v: Vertex, p: Vertex, x: &Q) -> Result<PlacementCase, ConstructError> {
    if let Some(&line) = state.open[p].first() {
        let l = &state.lines[line];
        state.pos[v] = Some(l.pl.at_x(&l.anchor, x));
        state.extend(line, p, v);
        return Ok(PlacementCase::Extend);
    }
    let c = state.free_point(x, &[p]).ok_or_else(|| no_candidate(v))?;
    state.pos[v] = Some(c);
    state.add_line(p, v);
    Ok(PlacementCase::Fresh)
}

fn place_two(state: &mut State, v: Vertex, a: Vertex, b: Vertex, x: &Q) -> Result<PlacementCase, ConstructError> {
    let both_open = !state.open[a].is_empty() && !state.open[b].is_empty();
    if both_open {
        // Prefer extending the predecessor that still has a later successor.
        let later = |w: Vertex| state.st.successors(state.g, w).iter().any(|&s| state.st.rank(s) > state.st.rank(v));
        let mut tries = [(a, b), (b, a)];
        if !later(a) && later(b) {
            tries.swap(0, 1);
        }
        for (on, other) in tries {
            let line = state.open[on][0];
            for shift in 0..=MAX_SHIFT {
                let eps = if shift == 0 { Q::zero() } else { Q::new(1.into(), num_bigint::BigInt::from(2).pow(shift)) };
                let l = &state.lines[line];
                let c = l.pl.at_x(&l.anchor, &(x + &eps));
                let new = PLine::through(state.p(other), &c);
                if new.parallel(&l.pl) || !new.meets_only_at(&l.pl, &c) {
                    break;
                }
                if state.admissible(&new, state.p(other), Some(line)) {
                    state.pos[v] = Some(c);
                    state.extend(line, on, v);
                    state.add_line(other, v);
                    return Ok(PlacementCase::ExtendShifted);
                }
            }
        }
    }
    let c = state.free_point(x, &[a, b]).ok_or_else(|| no_candidate(v))?;
    state.pos[v] = Some(c);
    state.add_line(a, v);
    state.add_line(b, v);
    Ok(PlacementCase::FreshPair)
}
