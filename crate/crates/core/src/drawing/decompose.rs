use std::collections::HashMap;

use num_traits::{Signed, Zero};

use crate::geom::{Point, V3};
use crate::graph::Vertex;

use super::{Drawing, DrawingError};

/// One straight piece of an edge route: piece `index` runs from route point
/// `index` to `index + 1`, routes oriented from the smaller endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Piece {
    pub edge: (Vertex, Vertex),
    pub index: usize,
}

/// A maximal straight segment as an ordered chain of pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub pieces: Vec<Piece>,
    pub start: Point,
    pub end: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegmentDecomposition {
    pub segments: Vec<Segment>,
}

impl SegmentDecomposition {
    pub fn count(&self) -> usize {
        self.segments.len()
    }
}

fn dir(from: &Point, to: &Point) -> V3 {
    let (a, b) = (from.v3(), to.v3());
    [&b[0] - &a[0], &b[1] - &a[1], &b[2] - &a[2]]
}

fn parallel(u: &V3, v: &V3) -> bool {
    (&u[1] * &v[2] - &u[2] * &v[1]).is_zero()
        && (&u[2] * &v[0] - &u[0] * &v[2]).is_zero()
        && (&u[0] * &v[1] - &u[1] * &v[0]).is_zero()
}

fn dot(u: &V3, v: &V3) -> num_rational::BigRational {
    &u[0] * &v[0] + &u[1] * &v[1] + &u[2] * &v[2]
}

struct Uf(Vec<usize>);

impl Uf {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut x = x;
        while self.0[x] != r {
            let next = self.0[x];
            self.0[x] = r;
            x = next;
        }
        r
    }
}

/// Partitions the drawing into inclusion-maximal straight segments.
///
/// Pieces are chained at a vertex when they leave it in exactly opposite
/// directions, and at a bend when the bend is straight. Two pieces leaving a
/// vertex in the same direction overlap and are rejected.
pub fn decompose(d: &Drawing) -> Result<SegmentDecomposition, DrawingError> {
    let mut pieces: Vec<(Piece, Point, Point)> = Vec::new();
    for (u, v, _) in d.edges() {
        let route = d.route(u, v).unwrap();
        for (index, w) in route.windows(2).enumerate() {
            pieces.push((Piece { edge: (u, v), index }, w[0].clone(), w[1].clone()));
        }
    }
    // end id = 2 * piece + side, side 0 = start, 1 = end
    let other_end = |e: usize| e ^ 1;
    let mut partner: Vec<Option<usize>> = vec![None; 2 * pieces.len()];
    let vertex_at: HashMap<&Point, Vertex> = d.vertices().iter().enumerate().map(|(i, p)| (p, i)).collect();

    // group ends by location
    let mut at: HashMap<&Point, Vec<usize>> = HashMap::new();
    for (i, (_, a, b)) in pieces.iter().enumerate() {
        at.entry(a).or_default().push(2 * i);
        at.entry(b).or_default().push(2 * i + 1);
    }
    let mut locations: Vec<_> = at.into_iter().collect();
    locations.sort_by(|x, y| x.0.cmp(y.0));
    for (point, ends) in locations {
        let at_vertex = vertex_at.contains_key(point);
        let dirs: Vec<V3> = ends
            .iter()
            .map(|&e| {
                let (_, a, b) = &pieces[e / 2];
                if e % 2 == 0 { dir(a, b) } else { dir(b, a) }
            })
            .collect();
        for i in 0..ends.len() {
            for j in i + 1..ends.len() {
                let (pi, pj) = (&pieces[ends[i] / 2].0, &pieces[ends[j] / 2].0);
                if !at_vertex && pi.edge != pj.edge {
                    continue;
                }
                if !parallel(&dirs[i], &dirs[j]) {
                    continue;
                }
                if dot(&dirs[i], &dirs[j]).is_positive() {
                    return Err(DrawingError::OverlapPresent(point.clone()));
                }
                if partner[ends[i]].is_some() || partner[ends[j]].is_some() {
                    return Err(DrawingError::OverlapPresent(point.clone()));
                }
                partner[ends[i]] = Some(ends[j]);
                partner[ends[j]] = Some(ends[i]);
            }
        }
    }

    let mut uf = Uf((0..pieces.len()).collect());
    for e in 0..partner.len() {
        if let Some(f) = partner[e] {
            let (a, b) = (uf.find(e / 2), uf.find(f / 2));
            uf.0[a] = b;
        }
    }

    let mut visited = vec![false; pieces.len()];
    let mut segments = Vec::new();
    for start in 0..pieces.len() {
        if visited[start] {
            continue;
        }
        // walk to a free end of this chain
        let mut end = 2 * start;
        while let Some(p) = partner[end] {
            end = other_end(p);
            if end / 2 == start {
                break;
            }
        }
        // `end` is a free end; traverse from it
        let mut chain = Vec::new();
        let mut cur = end;
        let first_point = end_point(&pieces, cur).clone();
        let last_point;
        loop {
            let piece = cur / 2;
            visited[piece] = true;
            chain.push(pieces[piece].0);
            let out = other_end(cur);
            match partner[out] {
                Some(next) => cur = next,
                None => {
                    last_point = end_point(&pieces, out).clone();
                    break;
                }
            }
        }
        segments.push(Segment { pieces: chain, start: first_point, end: last_point });
    }
    debug_assert_eq!(segments.len(), {
        let roots: std::collections::HashSet<usize> = (0..pieces.len()).map(|i| uf.find(i)).collect();
        roots.len()
    });
    Ok(SegmentDecomposition { segments })
}

fn end_point(pieces: &[(Piece, Point, Point)], end: usize) -> &Point {
    let (_, a, b) = &pieces[end / 2];
    if end % 2 == 0 { a } else { b }
}
