use std::collections::VecDeque;

use super::{Graph, Vertex};

pub fn is_connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == g.n()
}

/// Iterative lowpoint DFS. Returns `(articulation flags, blocks as edge lists)`.
fn lowpoint_dfs(g: &Graph) -> (Vec<bool>, Vec<Vec<(Vertex, Vertex)>>) {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        if parent != root {
                            cut[parent] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (parent, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            cut[root] = true;
        }
    }
    (cut, blocks)
}

pub fn articulation_points(g: &Graph) -> Vec<Vertex> {
    let (cut, _) = lowpoint_dfs(g);
    (0..g.n()).filter(|&v| cut[v]).collect()
}

/// Biconnected components as edge lists.
pub fn blocks(g: &Graph) -> Vec<Vec<(Vertex, Vertex)>> {
    lowpoint_dfs(g).1
}

/// Connected, at least three vertices and no cut vertex.
pub fn is_biconnected(g: &Graph) -> bool {
    g.n() >= 3 && is_connected(g) && articulation_points(g).is_empty()
}

/// Vertex connectivity, capped at 3.
///
/// Local connectivities are computed by unit-capacity augmenting paths on the
/// vertex-split digraph. A separator of size at most 3 misses one of the first
/// four vertices, so those four sources suffice.
pub fn connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 || !is_connected(g) {
        return 0;
    }
    let mut best = 3.min(n - 1);
    for s in 0..n.min(4) {
        for t in 0..n {
            if t == s || g.has_edge(s, t) {
                continue;
            }
            best = best.min(local_connectivity(g, s, t, best));
            if best == 1 {
                return 1;
            }
        }
    }
    best
}

/// Number of internally vertex-disjoint s-t paths, stopping early at `cap`.
fn local_connectivity(g: &Graph, s: Vertex, t: Vertex, cap: usize) -> usize {
    // node 2v = v_in, 2v+1 = v_out; arcs stored as (to, cap, rev)
    let n = g.n();
    let mut arcs: Vec<Vec<(usize, i32, usize)>> = vec![Vec::new(); 2 * n];
    let add = |arcs: &mut Vec<Vec<(usize, i32, usize)>>, a: usize, b: usize, c: i32| {
        let ra = arcs[b].len();
        let rb = arcs[a].len();
        arcs[a].push((b, c, ra));
        arcs[b].push((a, 0, rb));
    };
    for v in 0..n {
        let c = if v == s || v == t { cap as i32 } else { 1 };
        add(&mut arcs, 2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        add(&mut arcs, 2 * u + 1, 2 * v, 1);
        add(&mut arcs, 2 * v + 1, 2 * u, 1);
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    while flow < cap {
        let mut pred = vec![None; 2 * n];
        let mut queue = VecDeque::from([src]);
        pred[src] = Some((src, 0));
        while let Some(x) = queue.pop_front() {
            if x == dst {
                break;
            }
            for (i, &(y, c, _)) in arcs[x].iter().enumerate() {
                if c > 0 && pred[y].is_none() {
                    pred[y] = Some((x, i));
                    queue.push_back(y);
                }
            }
        }
        if pred[dst].is_none() {
            break;
        }
        let mut y = dst;
        while y != src {
            let (x, i) = pred[y].unwrap();
            arcs[x][i].1 -= 1;
            let r = arcs[x][i].2;
            arcs[y][r].1 += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}
