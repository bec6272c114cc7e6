use std::collections::HashMap;

use super::mincost::MinCostFlow;
use super::ConstructError;
use crate::drawing::Drawing;
use crate::geom::Point;
use crate::graph::{is_biconnected, planar_embedding, Embedding, Graph, Vertex};

/// Directions in quarter turns, counter-clockwise: E, N, W, S.
type Dir = usize;

fn rot(d: Dir, k: i64) -> Dir {
    (d as i64 + k).rem_euclid(4) as Dir
}

/// 2D polyline drawing of a biconnected planar cubic graph with at most
/// one bend per edge, at most `n/2 + 1` bends and at most `n + 1`
/// segments. All pieces are axis-parallel, except for K4, which gets its
/// five-segment drawing with one bent edge.
pub fn draw_bicubic_bend(g: &Graph) -> Result<Drawing, ConstructError> {
    if !g.is_cubic() || !is_biconnected(g) {
        return Err(ConstructError::NotBiconnectedCubic);
    }
    let emb = planar_embedding(g).ok_or(ConstructError::NotPlanar)?;
    if g.n() == 4 {
        return k4_drawing(g);
    }
    let budget = g.n() / 2 + 1;
    let faces = Faces::new(&emb);
    let best = (0..faces.count())
        .filter_map(|outer| shape(g, &faces, outer))
        .min_by_key(|s| s.bends);
    let shape = match best {
        Some(s) if s.bends <= budget => s,
        other => {
            return Err(ConstructError::BendBudgetExceeded { bends: other.map_or(usize::MAX, |s| s.bends), budget })
        }
    };
    compact(g, &emb, &faces, &shape)
}

/// K4 with five segments: edge 0-1 bends once, vertices 0 and 3 are flat.
fn k4_drawing(g: &Graph) -> Result<Drawing, ConstructError> {
    let pts = vec![Point::int2(0, 0), Point::int2(2, 0), Point::int2(0, 2), Point::int2(1, 0)];
    let mut d = Drawing::new(2, pts)?;
    for (u, v) in g.edges() {
        let bends = if (u, v) == (0, 1) { vec![Point::int2(0, -1)] } else { Vec::new() };
        d.add_edge(u, v, bends)?;
    }
    Ok(d)
}

struct Faces {
    of_dart: HashMap<(Vertex, Vertex), usize>,
    len: Vec<usize>,
}

impl Faces {
    fn new(emb: &Embedding) -> Self {
        let mut of_dart = HashMap::new();
        for (i, f) in emb.faces().iter().enumerate() {
            for k in 0..f.len() {
                of_dart.insert((f[k], f[(k + 1) % f.len()]), i);
            }
        }
        Faces { of_dart, len: emb.faces().iter().map(Vec::len).collect() }
    }

    fn count(&self) -> usize {
        self.len.len()
    }

    fn of(&self, u: Vertex, v: Vertex) -> usize {
        self.of_dart[&(u, v)]
    }
}

/// Orthogonal representation: the angle (in quarter turns) of every
/// vertex corner and the turn of the bend on each edge, seen walking
/// `u -> v` for `u < v`.
struct Shape {
    outer: usize,
    bends: usize,
    angle: HashMap<(Vertex, usize), i64>,
    turn: HashMap<(Vertex, Vertex), i64>,
}

fn shape(g: &Graph, faces: &Faces, outer: usize) -> Option<Shape> {
    let n = g.n();
    let nf = faces.count();
    let (s, t) = (0, 1);
    let vnode = |v: Vertex| 2 + v;
    let fnode = |f: usize| 2 + n + f;
    let mut net = MinCostFlow::new(2 + n + nf);
    let mut need = 0;
    for v in 0..n {
        net.add(s, vnode(v), 1, 0);
    }
    let mut corner_arcs = Vec::new();
    for v in 0..n {
        for &x in g.neighbors(v) {
            let f = faces.of(x, v);
            corner_arcs.push((v, f, net.add(vnode(v), fnode(f), 1, 0)));
        }
    }
    for f in 0..nf {
        let p = faces.len[f] as i64;
        let demand = if f == outer { p + 4 } else { p - 4 };
        if demand > 0 {
            net.add(fnode(f), t, demand, 0);
            need += demand;
        } else if demand < 0 {
            net.add(s, fnode(f), -demand, 0);
        }
    }
    let mut edge_arcs = Vec::new();
    for (u, v) in g.edges() {
        let (f1, f2) = (faces.of(u, v), faces.of(v, u));
        let a = net.add(fnode(f1), fnode(f2), 1, 1);
        let b = net.add(fnode(f2), fnode(f1), 1, 1);
        edge_arcs.push((u, v, a, b));
    }
    let (flow, cost) = net.run(s, t);
    if flow != need {
        return None;
    }
    let angle = corner_arcs.iter().map(|&(v, f, a)| ((v, f), 1 + net.flow_on(a))).collect();
    let mut turn = HashMap::new();
    for &(u, v, a, b) in &edge_arcs {
        // flow f1 -> f2: the bend is convex in the face left of u -> v
        match (net.flow_on(a), net.flow_on(b)) {
            (0, 0) => {}
            (1, 0) => {
                turn.insert((u, v), 1);
            }
            (0, 1) => {
                turn.insert((u, v), -1);
            }
            _ => return None,
        }
    }
    Some(Shape { outer, bends: cost as usize, angle, turn })
}

/// Turn of the bend on edge `u - v` when walking from `u` to `v`.
fn edge_turn(shape: &Shape, u: Vertex, v: Vertex) -> Option<i64> {
    if u < v {
        shape.turn.get(&(u, v)).copied()
    } else {
        shape.turn.get(&(v, u)).map(|t| -t)
    }
}

struct Ortho {
    adj: Vec<[Option<usize>; 4]>,
}

impl Ortho {
    fn link(&mut self, a: usize, d: Dir, b: usize) -> Result<(), ConstructError> {
        if self.adj[a][d].is_some() || self.adj[b][rot(d, 2)].is_some() {
            return Err(ConstructError::Internal("inconsistent orthogonal shape".into()));
        }
        self.adj[a][d] = Some(b);
        self.adj[b][rot(d, 2)] = Some(a);
        Ok(())
    }

    fn node(&mut self) -> usize {
        self.adj.push([None; 4]);
        self.adj.len() - 1
    }

    fn target(&self, a: usize, d: Dir) -> usize {
        self.adj[a][d].expect("dart exists")
    }

    /// Face walk with the face on the left, as `(tail, dir, turn at head)`.
    fn walk(&self, a: usize, d: Dir) -> Vec<(usize, Dir, i64)> {
        let mut out = Vec::new();
        let (mut a, mut d) = (a, d);
        loop {
            let b = self.target(a, d);
            let (nd, t) = [(rot(d, 1), 1), (d, 0), (rot(d, 3), -1), (rot(d, 2), -2)]
                .into_iter()
                .find(|&(nd, _)| self.adj[b][nd].is_some())
                .expect("node has a dart");
            out.push((a, d, t));
            a = b;
            d = nd;
            if (a, d) == (out[0].0, out[0].1) {
                return out;
            }
        }
    }

    fn faces(&self) -> Vec<Vec<(usize, Dir, i64)>> {
        let mut seen = vec![[false; 4]; self.adj.len()];
        let mut faces = Vec::new();
        for a in 0..self.adj.len() {
            for d in 0..4 {
                if self.adj[a][d].is_some() && !seen[a][d] {
                    let f = self.walk(a, d);
                    for &(x, dx, _) in &f {
                        seen[x][dx] = true;
                    }
                    faces.push(f);
                }
            }
        }
        faces
    }

    fn split(&mut self, a: usize, d: Dir) -> usize {
        let b = self.target(a, d);
        let z = self.node();
        self.adj[a][d] = Some(z);
        self.adj[z][rot(d, 2)] = Some(a);
        self.adj[z][d] = Some(b);
        self.adj[b][rot(d, 2)] = Some(z);
        z
    }

    /// Refines every inner face into a rectangle.
    fn rectangulate(&mut self) -> Result<(), ConstructError> {
        'again: loop {
            for face in self.faces() {
                let k = face.len();
                if face.iter().map(|x| x.2).sum::<i64>() != 4 || face.iter().all(|x| x.2 >= 0) {
                    continue;
                }
                for i in 0..k {
                    if face[i].2 != -1 {
                        continue;
                    }
                    let nonzero: Vec<usize> = (1..k).map(|s| (i + s) % k).filter(|&j| face[j].2 != 0).take(2).collect();
                    if nonzero.len() == 2 && nonzero.iter().all(|&j| face[j].2 == 1) {
                        let (w, d) = (self.target(face[i].0, face[i].1), face[i].1);
                        let front = face[(nonzero[1] + 1) % k];
                        let z = self.split(front.0, front.1);
                        self.link(w, d, z)?;
                        continue 'again;
                    }
                }
                return Err(ConstructError::Internal("face without a refinable corner".into()));
            }
            return Ok(());
        }
    }
}

fn compact(g: &Graph, emb: &Embedding, faces: &Faces, shape: &Shape) -> Result<Drawing, ConstructError> {
    let n = g.n();
    // dart directions by propagation around vertices and along edges
    let mut dir: HashMap<(Vertex, Vertex), Dir> = HashMap::new();
    let mut stack = vec![0];
    let mut done = vec![false; n];
    dir.insert((0, emb.rotation(0)[0]), 0);
    while let Some(v) = stack.pop() {
        if done[v] {
            continue;
        }
        done[v] = true;
        let mut x = *emb.rotation(v).iter().find(|&&x| dir.contains_key(&(v, x))).expect("seeded");
        for _ in 1..g.degree(v) {
            let y = emb.rotation_next(v, x);
            let a = shape.angle[&(v, faces.of(x, v))];
            let d = rot(dir[&(v, x)], -a);
            dir.insert((v, y), d);
            x = y;
        }
        for &u in g.neighbors(v) {
            if !done[u] {
                let t = edge_turn(shape, v, u).unwrap_or(0);
                dir.insert((u, v), rot(dir[&(v, u)], t + 2));
                stack.push(u);
            }
        }
    }
    let mut ortho = Ortho { adj: vec![[None; 4]; n] };
    let mut bend_node = HashMap::new();
    for (u, v) in g.edges() {
        let d = dir[&(u, v)];
        match edge_turn(shape, u, v) {
            None => ortho.link(u, d, v)?,
            Some(t) => {
                let b = ortho.node();
                ortho.link(u, d, b)?;
                ortho.link(b, rot(d, t), v)?;
                bend_node.insert((u, v), b);
            }
        }
    }
    // bounding rectangle joined at a convex corner of the outer face
    let f = &emb.faces()[shape.outer];
    let outer = ortho.walk(f[0], dir[&(f[0], f[1])]);
    let &(a, d, _) = outer.iter().find(|x| x.2 == -1).ok_or_else(|| ConstructError::Internal("outer face has no corner".into()))?;
    let w = ortho.target(a, d);
    let r: Vec<usize> = (0..4).map(|_| ortho.node()).collect();
    for i in 0..4 {
        ortho.link(r[i], i, r[(i + 1) % 4])?;
    }
    // the side hit by a ray in direction d starts at corner d + 1 and runs in direction d + 1
    let side = r[(d + 1) % 4];
    let z = ortho.split(side, rot(d, 1));
    ortho.link(w, d, z)?;
    ortho.rectangulate()?;
    let (x, y) = coordinates(&ortho);
    let pts = (0..n).map(|v| Point::int2(x[v], y[v])).collect();
    let mut drawing = Drawing::new(2, pts)?;
    for (u, v) in g.edges() {
        let bends = bend_node.get(&(u, v)).map(|&b| vec![Point::int2(x[b], y[b])]).unwrap_or_default();
        drawing.add_edge(u, v, bends)?;
    }
    Ok(drawing)
}

/// Longest-path coordinates: nodes joined by vertical darts share x,
/// nodes joined by horizontal darts share y.
fn coordinates(o: &Ortho) -> (Vec<i64>, Vec<i64>) {
    let axis = |same: [Dir; 2], step: Dir| -> Vec<i64> {
        let m = o.adj.len();
        let mut class: Vec<usize> = (0..m).collect();
        fn find(c: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while c[r] != r {
                r = c[r];
            }
            c[v] = r;
            r
        }
        for a in 0..m {
            for d in same {
                if let Some(b) = o.adj[a][d] {
                    let (ra, rb) = (find(&mut class, a), find(&mut class, b));
                    class[ra] = rb;
                }
            }
        }
        let roots: Vec<usize> = (0..m).map(|v| find(&mut class, v)).collect();
        let mut succ = vec![Vec::new(); m];
        let mut indeg = vec![0; m];
        for a in 0..m {
            if let Some(b) = o.adj[a][step] {
                succ[roots[a]].push(roots[b]);
                indeg[roots[b]] += 1;
            }
        }
        let mut level = vec![0i64; m];
        let mut queue: Vec<usize> = (0..m).filter(|&c| roots[c] == c && indeg[c] == 0).collect();
        while let Some(c) = queue.pop() {
            for &s in &succ[c] {
                level[s] = level[s].max(level[c] + 1);
                indeg[s] -= 1;
                if indeg[s] == 0 {
                    queue.push(s);
                }
            }
        }
        roots.iter().map(|&r| level[r]).collect()
    };
    (axis([1, 3], 0), axis([0, 2], 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{audit, decompose, validate, DrawingStyle};

    pub(crate) fn check(g: &Graph) -> usize {
        let d = draw_bicubic_bend(g).unwrap();
        let rep = validate(&d, g, DrawingStyle::Bend2d).unwrap();
        assert!(rep.is_valid(), "{rep}");
        assert!(d.edges().all(|(_, _, b)| b.len() <= 1));
        assert!(d.bend_count() <= g.n() / 2 + 1);
        assert!(audit(&d, g).unwrap().identity_holds());
        let c = decompose(&d).unwrap().count();
        assert!(c <= g.n() + 1);
        c
    }

    #[test]
    fn k4_has_five_segments() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(check(&g), 5);
    }

    #[test]
    fn prism_and_cube() {
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        assert!(check(&prism) <= 7);
        let mut e = Vec::new();
        for v in 0..8usize {
            for b in 0..3 {
                if v < v ^ (1 << b) {
                    e.push((v, v ^ (1 << b)));
                }
            }
        }
        assert!(check(&Graph::from_edges(8, &e)) <= 9);
    }

    #[test]
    fn axis_parallel_pieces() {
        let g = crate::families::generate(crate::families::FamilyId::Icycle, 4).unwrap();
        let d = draw_bicubic_bend(&g).unwrap();
        for (u, v, _) in d.edges() {
            let r = d.route(u, v).unwrap();
            assert!(r.windows(2).all(|w| w[0].x() == w[1].x() || w[0].y() == w[1].y()));
        }
        check(&g);
    }

    #[test]
    fn errors() {
        let k33 = Graph::from_edges(6, &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]);
        assert_eq!(draw_bicubic_bend(&k33), Err(ConstructError::NotPlanar));
    }
}
