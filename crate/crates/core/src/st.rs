//! st-numberings of biconnected graphs and predecessor-count classes.

use thiserror::Error;

use crate::graph::{is_biconnected, Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StError {
    #[error("graph is not biconnected")]
    NotBiconnected,
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(Vertex, Vertex),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("ordering is not a valid st-numbering: {0}")]
    InvalidOrdering(String),
}

/// An ordering `v_1, ..., v_n` in which every interior vertex has an earlier
/// and a later neighbour, with per-vertex predecessor counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StNumbering {
    order: Vec<Vertex>,
    rank: Vec<usize>,
    pclass: Vec<u8>,
}

impl StNumbering {
    /// Wraps an explicit ordering after checking it.
    pub fn from_order(g: &Graph, order: Vec<Vertex>) -> Result<Self, StError> {
        let n = g.n();
        if order.len() != n {
            return Err(StError::InvalidOrdering(format!("length {} != {n}", order.len())));
        }
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(StError::InvalidOrdering(format!("vertex {v} repeated or out of range")));
            }
            rank[v] = i;
        }
        let mut pclass = vec![0u8; n];
        for v in 0..n {
            let preds = g.neighbors(v).iter().filter(|&&w| rank[w] < rank[v]).count();
            let succs = g.degree(v) - preds;
            if rank[v] > 0 && rank[v] + 1 < n && (preds == 0 || succs == 0) {
                return Err(StError::InvalidOrdering(format!("interior vertex {v} lacks a predecessor or successor")));
            }
            pclass[v] = preds.min(u8::MAX as usize) as u8;
        }
        if n >= 2 && !g.has_edge(order[0], order[n - 1]) {
            return Err(StError::InvalidOrdering("first and last vertex are not adjacent".into()));
        }
        Ok(StNumbering { order, rank, pclass })
    }

    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// Position of `v` in the ordering, 0-based.
    pub fn rank(&self, v: Vertex) -> usize {
        self.rank[v]
    }

    /// Number of neighbours of `v` that come earlier.
    pub fn pclass(&self, v: Vertex) -> u8 {
        self.pclass[v]
    }

    /// Earlier neighbours of `v`, in order of rank.
    pub fn predecessors(&self, g: &Graph, v: Vertex) -> Vec<Vertex> {
        let mut p: Vec<_> = g.neighbors(v).iter().copied().filter(|&w| self.rank[w] < self.rank[v]).collect();
        p.sort_by_key(|&w| self.rank[w]);
        p
    }

    pub fn successors(&self, g: &Graph, v: Vertex) -> Vec<Vertex> {
        let mut p: Vec<_> = g.neighbors(v).iter().copied().filter(|&w| self.rank[w] > self.rank[v]).collect();
        p.sort_by_key(|&w| self.rank[w]);
        p
    }
}

/// Endpoints of the lexicographically smallest edge.
pub fn default_endpoints(g: &Graph) -> Option<(Vertex, Vertex)> {
    g.edges().next()
}

/// Computes an st-numbering with `order[0] = s` and `order[n-1] = t`.
///
/// Lowpoint DFS rooted at `s` whose first tree edge is `s-t`, followed by the
/// signed list insertion of Tarjan.
pub fn st_numbering(g: &Graph, s: Vertex, t: Vertex) -> Result<StNumbering, StError> {
    if !g.has_edge(s, t) {
        return Err(StError::NotAnEdge(s, t));
    }
    if !is_biconnected(g) {
        return Err(StError::NotBiconnected);
    }
    let n = g.n();
    let mut pre = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut low = vec![0usize; n]; // vertex with minimal preorder reachable
    let mut preorder = Vec::with_capacity(n);

    pre[s] = 0;
    low[s] = s;
    preorder.push(s);
    pre[t] = 1;
    low[t] = t;
    parent[t] = s;
    preorder.push(t);
    let mut stack: Vec<(Vertex, usize)> = vec![(s, usize::MAX), (t, 0)];
    while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
        if v == s {
            // s has the single child t; everything else is reached through it
            stack.pop();
            continue;
        }
        if *idx < g.degree(v) {
            let w = g.neighbors(v)[*idx];
            *idx += 1;
            if pre[w] == usize::MAX {
                pre[w] = preorder.len();
                preorder.push(w);
                parent[w] = v;
                low[w] = w;
                stack.push((w, 0));
            } else if w != parent[v] && pre[w] < pre[low[v]] {
                low[v] = w;
            }
        } else {
            stack.pop();
            let p = parent[v];
            if p != usize::MAX && pre[low[v]] < pre[low[p]] {
                low[p] = low[v];
            }
        }
    }
    debug_assert_eq!(preorder.len(), n);

    // doubly linked list over vertex ids
    const NIL: usize = usize::MAX;
    let mut next = vec![NIL; n];
    let mut prev = vec![NIL; n];
    next[s] = t;
    prev[t] = s;
    let mut minus = vec![false; n];
    minus[s] = true;
    for &v in &preorder[2..] {
        let p = parent[v];
        if minus[low[v]] {
            let before = prev[p];
            prev[v] = before;
            next[v] = p;
            prev[p] = v;
            if before != NIL {
                next[before] = v;
            }
            minus[p] = false;
        } else {
            let after = next[p];
            next[v] = after;
            prev[v] = p;
            next[p] = v;
            if after != NIL {
                prev[after] = v;
            }
            minus[p] = true;
        }
    }
    let mut head = s;
    while prev[head] != NIL {
        head = prev[head];
    }
    let mut order = Vec::with_capacity(n);
    let mut cur = head;
    while cur != NIL {
        order.push(cur);
        cur = next[cur];
    }
    StNumbering::from_order(g, order)
}

/// Histogram of predecessor counts `[#0, #1, #2, #3]` for a cubic graph.
pub fn classify_st(g: &Graph, ord: &StNumbering) -> Result<[usize; 4], StError> {
    if !g.is_cubic() {
        return Err(StError::NotCubic);
    }
    let checked = StNumbering::from_order(g, ord.order().to_vec())?;
    let mut hist = [0; 4];
    for v in 0..g.n() {
        hist[checked.pclass(v) as usize] += 1;
    }
    Ok(hist)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn prism() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
    }

    /// Independent oracle: enumerate all orderings with the given ends.
    fn brute_force_valid(g: &Graph, order: &[Vertex]) -> bool {
        let n = order.len();
        (1..n - 1).all(|j| {
            let v = order[j];
            let earlier = order[..j].iter().any(|&w| g.has_edge(v, w));
            let later = order[j + 1..].iter().any(|&w| g.has_edge(v, w));
            earlier && later
        })
    }

    fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
        if items.is_empty() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 0..items.len() {
            let mut rest = items.to_vec();
            let x = rest.remove(i);
            for mut p in permutations(&rest) {
                p.insert(0, x);
                out.push(p);
            }
        }
        out
    }

    #[test]
    fn triangle_has_forced_order() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(st_numbering(&g, 0, 2).unwrap().order(), &[0, 1, 2]);
    }

    #[test]
    fn k4_validator_matches_brute_force() {
        let g = k4();
        let all = permutations(&[0, 1, 2, 3]);
        let valid: Vec<_> = all.iter().filter(|p| g.has_edge(p[0], p[3]) && brute_force_valid(&g, p)).collect();
        // in K4 every ordering qualifies
        assert_eq!(valid.len(), 24);
        for p in &all {
            assert_eq!(StNumbering::from_order(&g, p.clone()).is_ok(), brute_force_valid(&g, p));
        }
        for (s, t) in g.edges() {
            for (a, b) in [(s, t), (t, s)] {
                let st = st_numbering(&g, a, b).unwrap();
                assert_eq!(st.order()[0], a);
                assert_eq!(st.order()[3], b);
                assert!(brute_force_valid(&g, st.order()));
            }
        }
    }

    #[test]
    fn prism_orderings_are_exhaustively_checked() {
        let g = prism();
        for p in permutations(&[0, 1, 2, 3, 4, 5]) {
            let ok = g.has_edge(p[0], p[5]) && brute_force_valid(&g, &p);
            assert_eq!(StNumbering::from_order(&g, p).is_ok(), ok);
        }
        for (s, t) in g.edges() {
            let st = st_numbering(&g, s, t).unwrap();
            assert!(brute_force_valid(&g, st.order()));
        }
    }

    #[test]
    fn errors() {
        let two = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert_eq!(st_numbering(&two, 0, 1), Err(StError::NotBiconnected));
        assert_eq!(st_numbering(&k4(), 0, 0), Err(StError::NotAnEdge(0, 0)));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(st_numbering(&c4, 0, 2), Err(StError::NotAnEdge(0, 2)));
    }

    #[test]
    fn predecessor_histograms() {
        let g = k4();
        let st = st_numbering(&g, 0, 1).unwrap();
        assert_eq!(classify_st(&g, &st).unwrap(), [1, 1, 1, 1]);
        let g = prism();
        let st = st_numbering(&g, 0, 1).unwrap();
        assert_eq!(classify_st(&g, &st).unwrap(), [1, 2, 2, 1]);
    }

    #[test]
    fn subdivided_k4_is_not_cubic() {
        let g = Graph::from_edges(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let st = st_numbering(&g, 0, 2).unwrap();
        assert_eq!(classify_st(&g, &st), Err(StError::NotCubic));
    }
}
