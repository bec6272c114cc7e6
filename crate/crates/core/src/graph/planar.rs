//! Planarity testing and combinatorial embeddings by fragment path
//! addition (Demoucron, Malgrange and Pertuiset).

use std::collections::{HashMap, HashSet, VecDeque};

use super::{blocks, is_biconnected, Graph, Vertex};

/// A combinatorial plane embedding of a biconnected graph.
///
/// Faces are vertex cycles, all oriented consistently: walking a face, the
/// successor of dart `a -> b` is `b -> rotation_next(b, a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    faces: Vec<Vec<Vertex>>,
    rotation: Vec<Vec<Vertex>>,
}

impl Embedding {
    fn from_faces(n: usize, faces: Vec<Vec<Vertex>>) -> Self {
        let mut next: Vec<HashMap<Vertex, Vertex>> = vec![HashMap::new(); n];
        for face in &faces {
            let k = face.len();
            for i in 0..k {
                let (a, b, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
                next[b].insert(a, c);
            }
        }
        let rotation = next
            .iter()
            .map(|map| {
                let Some(&start) = map.keys().min() else { return Vec::new() };
                let mut order = vec![start];
                let mut cur = map[&start];
                while cur != start {
                    order.push(cur);
                    cur = map[&cur];
                }
                order
            })
            .collect();
        Embedding { faces, rotation }
    }

    pub fn faces(&self) -> &[Vec<Vertex>] {
        &self.faces
    }

    /// Cyclic neighbour order around `v`.
    pub fn rotation(&self, v: Vertex) -> &[Vertex] {
        &self.rotation[v]
    }

    /// Neighbour following `u` in the rotation at `v`.
    pub fn rotation_next(&self, v: Vertex, u: Vertex) -> Vertex {
        let rot = &self.rotation[v];
        let i = rot.iter().position(|&x| x == u).expect("not a neighbour");
        rot[(i + 1) % rot.len()]
    }

    /// Index of the face that contains the dart `u -> v`.
    pub fn face_of_dart(&self, u: Vertex, v: Vertex) -> usize {
        self.faces
            .iter()
            .position(|f| {
                let k = f.len();
                (0..k).any(|i| f[i] == u && f[(i + 1) % k] == v)
            })
            .expect("dart not in embedding")
    }
}

/// Computes a plane embedding of a biconnected graph, or `None` when the
/// graph is not planar (or not biconnected).
pub fn planar_embedding(g: &Graph) -> Option<Embedding> {
    if !is_biconnected(g) {
        return None;
    }
    if g.n() >= 3 && g.m() > 3 * g.n() - 6 {
        return None;
    }
    let n = g.n();
    let cycle = find_cycle(g);
    let mut in_h = vec![false; n];
    let mut h_edges: HashSet<(Vertex, Vertex)> = HashSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        in_h[a] = true;
        h_edges.insert((a.min(b), a.max(b)));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    loop {
        let fragments = fragments(g, &in_h, &h_edges);
        if fragments.is_empty() {
            break;
        }
        let mut choice = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.unwrap();
        let path = fragment_path(g, &in_h, &fragments[fi]);
        let face = faces.swap_remove(face_idx);
        let (x, y) = (path[0], *path.last().unwrap());
        let k = face.len();
        let i = face.iter().position(|&v| v == x).unwrap();
        let j = face.iter().position(|&v| v == y).unwrap();
        let interior = &path[1..path.len() - 1];
        // f_i .. f_j, then back along the path
        let mut f1 = Vec::new();
        let mut p = i;
        loop {
            f1.push(face[p]);
            if p == j {
                break;
            }
            p = (p + 1) % k;
        }
        f1.extend(interior.iter().rev());
        let mut f2 = Vec::new();
        let mut p = j;
        loop {
            f2.push(face[p]);
            if p == i {
                break;
            }
            p = (p + 1) % k;
        }
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
        for w in path.windows(2) {
            in_h[w[0]] = true;
            in_h[w[1]] = true;
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Some(Embedding::from_faces(n, faces))
}

pub fn is_planar(g: &Graph) -> bool {
    for block in blocks(g) {
        if block.len() < 9 {
            // every graph with fewer than nine edges is planar (K5 has 10, K3,3 has 9)
            continue;
        }
        let mut ids: HashMap<Vertex, usize> = HashMap::new();
        for &(u, v) in &block {
            for w in [u, v] {
                let next = ids.len();
                ids.entry(w).or_insert(next);
            }
        }
        let sub = Graph::from_edges(ids.len(), &block.iter().map(|&(u, v)| (ids[&u], ids[&v])).collect::<Vec<_>>());
        if planar_embedding(&sub).is_none() {
            return false;
        }
    }
    true
}

fn find_cycle(g: &Graph) -> Vec<Vertex> {
    // DFS from 0 until the first back edge closes a cycle
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    let mut stack = vec![(0usize, 0usize)];
    depth[0] = 0;
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if *idx == g.degree(v) {
            stack.pop();
            continue;
        }
        let w = g.neighbors(v)[*idx];
        *idx += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            stack.push((w, 0));
        } else if w != parent[v] && depth[w] < depth[v] {
            let mut cycle = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            return cycle;
        }
    }
    unreachable!("biconnected graph has a cycle")
}

struct Fragment {
    /// Either a single chord `(u, v)` or a component of non-embedded vertices.
    component: Vec<Vertex>,
    chord: Option<(Vertex, Vertex)>,
    attachments: Vec<Vertex>,
}

fn fragments(g: &Graph, in_h: &[bool], h_edges: &HashSet<(Vertex, Vertex)>) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
            out.push(Fragment { component: Vec::new(), chord: Some((u, v)), attachments: vec![u, v] });
        }
    }
    let mut seen = vec![false; g.n()];
    for start in 0..g.n() {
        if in_h[start] || seen[start] {
            continue;
        }
        let mut component = Vec::new();
        let mut attachments = HashSet::new();
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            component.push(v);
            for &w in g.neighbors(v) {
                if in_h[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        let mut attachments: Vec<_> = attachments.into_iter().collect();
        attachments.sort_unstable();
        out.push(Fragment { component, chord: None, attachments });
    }
    out
}

fn fragment_path(g: &Graph, in_h: &[bool], frag: &Fragment) -> Vec<Vertex> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let a = frag.attachments[0];
    let members: HashSet<Vertex> = frag.component.iter().copied().collect();
    let mut pred: HashMap<Vertex, Vertex> = HashMap::new();
    let mut queue = VecDeque::new();
    for &w in g.neighbors(a) {
        if members.contains(&w) && !pred.contains_key(&w) {
            pred.insert(w, a);
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if in_h[w] {
                if w != a {
                    let mut path = vec![w, v];
                    let mut x = v;
                    while pred[&x] != a {
                        x = pred[&x];
                        path.push(x);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
            } else if !pred.contains_key(&w) {
                pred.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}
