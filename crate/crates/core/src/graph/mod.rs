//! Simple undirected graphs on vertex ids `0..n`.

mod connectivity;
mod planar;

pub use connectivity::{articulation_points, blocks, connectivity, is_biconnected, is_connected};
pub use planar::{is_planar, planar_embedding, Embedding};

use std::fmt;

use thiserror::Error;

/// Vertex identifier, always in `0..graph.n()`.
pub type Vertex = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(Vertex, Vertex),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A simple undirected graph with sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::ParallelEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, m })
    }

    /// Convenience constructor for edge lists known to be valid.
    ///
    /// Panics on loops, parallel edges or out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Self {
        Self::new(n, edges.iter().copied()).expect("invalid edge list")
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.adj.iter().all(|l| l.len() == d)
    }

    pub fn is_cubic(&self) -> bool {
        self.n() > 0 && self.is_regular(3)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Number of odd-degree vertices.
    pub fn odd_degree_count(&self) -> usize {
        self.adj.iter().filter(|l| l.len() % 2 == 1).count()
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        Graph::new(self.n(), self.edges().chain(std::iter::once((u, v))))
    }

    /// Parses the text format: a header `n m` followed by `m` lines `u v`.
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then_some((i + 1, body))
        });
        let parse_pair = |line: usize, body: &str| -> Result<(usize, usize), GraphError> {
            let err = |msg: &str| GraphError::Parse { line, msg: msg.to_string() };
            let mut it = body.split_whitespace();
            let a = it.next().ok_or_else(|| err("expected two integers"))?;
            let b = it.next().ok_or_else(|| err("expected two integers"))?;
            if it.next().is_some() {
                return Err(err("trailing tokens"));
            }
            let a = a.parse().map_err(|_| err(&format!("bad integer `{a}`")))?;
            let b = b.parse().map_err(|_| err(&format!("bad integer `{b}`")))?;
            Ok((a, b))
        };
        let (hline, header) = lines.next().ok_or(GraphError::Parse { line: 1, msg: "missing header".into() })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        let mut last = hline;
        for (line, body) in lines {
            let (u, v) = parse_pair(line, body)?;
            let err = |msg: String| GraphError::Parse { line, msg };
            if u >= n || v >= n {
                return Err(err(format!("vertex out of range 0..{n}")));
            }
            if u == v {
                return Err(err(format!("self loop at {u}")));
            }
            if edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
                return Err(err(format!("parallel edge {u}-{v}")));
            }
            edges.push((u, v));
            last = line;
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: last,
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}
