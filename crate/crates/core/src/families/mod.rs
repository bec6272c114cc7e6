//! Generators for the cubic graph families with extremal segment numbers,
//! the triangulation-with-fans family, and the arrangement/tail gadget.
//!
//! Vertex numbering is part of the contract: the witness drawings in
//! [`crate::construct`] rely on the layouts documented on each generator.

mod arrangement;

pub use arrangement::{arrangement_graph, tail_gadget, Line};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("parameter {param} out of range for {family}: {why}")]
    BadParameter { family: FamilyId, param: usize, why: &'static str },
    #[error("graph is not arrangement shaped: {0}")]
    NotArrangementShaped(String),
    #[error("lines do not form a simple arrangement: {0}")]
    NotSimpleArrangement(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    /// K4 with one subdivided edge (5 vertices).
    K4Prime,
    /// Caterpillar with `k - 2` inner vertices whose `k` leaves are K4' copies.
    Gcat,
    /// K3,3 minus an edge.
    K33Me,
    /// Cycle of `k` copies of K3,3 minus an edge.
    Hcycle,
    /// K4 minus an edge.
    K4Me,
    /// Cycle of `k` copies of K4 minus an edge.
    Icycle,
    /// Triconnected cubic base graph on `k` vertices with every vertex
    /// replaced by a K2,3.
    K23GadgetF,
    /// Two triangular grids of side `i - 1` glued along their boundaries.
    Tgrid,
    /// `Tgrid(i)` with an `i`-fan attached to every vertex.
    Sfan,
    /// Tail gadget of an arrangement graph (built from lines, not a parameter).
    TailGadget,
}

impl FamilyId {
    pub const ALL: [FamilyId; 10] = [
        Self::K4Prime,
        Self::Gcat,
        Self::K33Me,
        Self::Hcycle,
        Self::K4Me,
        Self::Icycle,
        Self::K23GadgetF,
        Self::Tgrid,
        Self::Sfan,
        Self::TailGadget,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::K4Prime => "k4prime",
            Self::Gcat => "gcat",
            Self::K33Me => "k33me",
            Self::Hcycle => "hcycle",
            Self::K4Me => "k4me",
            Self::Icycle => "icycle",
            Self::K23GadgetF => "fk23",
            Self::Tgrid => "tgrid",
            Self::Sfan => "sfan",
            Self::TailGadget => "tail",
        }
    }

    /// Closed-form vertex count, where one exists.
    pub fn vertex_count(self, p: usize) -> Option<usize> {
        Some(match self {
            Self::K4Prime => 5,
            Self::Gcat => 6 * p - 2,
            Self::K33Me => 6,
            Self::Hcycle => 6 * p,
            Self::K4Me => 4,
            Self::Icycle => 4 * p,
            Self::K23GadgetF => 5 * p,
            Self::Tgrid => p * p - 2 * p + 3,
            Self::Sfan => p * p * p - p + 6,
            Self::TailGadget => return None,
        })
    }

    /// Checks the parameter range of the family.
    pub fn check_param(self, p: usize) -> Result<(), FamilyError> {
        let bad = |why| Err(FamilyError::BadParameter { family: self, param: p, why });
        match self {
            Self::Gcat if p < 2 => bad("needs k >= 2"),
            Self::Hcycle | Self::Icycle if p < 3 => bad("needs k >= 3"),
            Self::K23GadgetF if p < 4 || p % 2 == 1 => bad("needs even k >= 4"),
            Self::Tgrid | Self::Sfan if p < 3 => bad("needs i >= 3"),
            Self::TailGadget => bad("built from a line arrangement"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let lower = s.to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|f| f.name() == lower)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// Builds the member of `family` with parameter `param`.
pub fn generate(family: FamilyId, param: usize) -> Result<Graph, FamilyError> {
    family.check_param(param)?;
    Ok(match family {
        FamilyId::K4Prime => Graph::from_edges(5, &K4_PRIME),
        FamilyId::Gcat => gcat(param),
        FamilyId::K33Me => Graph::from_edges(6, &K33_ME),
        FamilyId::Hcycle => gadget_cycle(param, 6, &K33_ME, K33_ENTRY, K33_EXIT),
        FamilyId::K4Me => Graph::from_edges(4, &K4_ME),
        FamilyId::Icycle => gadget_cycle(param, 4, &K4_ME, K4ME_ENTRY, K4ME_EXIT),
        FamilyId::K23GadgetF => fk23(param),
        FamilyId::Tgrid => tgrid(param),
        FamilyId::Sfan => sfan(param),
        FamilyId::TailGadget => unreachable!("rejected by check_param"),
    })
}

/// K4' local ids: a=0, b=1, c=2, d=3 and s=4 subdividing a-b.
pub const K4_PRIME: [(Vertex, Vertex); 7] = [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
/// Attachment vertex of K4'.
pub const K4_PRIME_PORT: Vertex = 4;

/// K3,3 minus an edge: a1=0, a2=1, a3=2, b1=3, b2=4, b3=5, missing a1-b1.
pub const K33_ME: [(Vertex, Vertex); 8] = [(0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)];
pub const K33_ENTRY: Vertex = 0;
pub const K33_EXIT: Vertex = 3;

/// K4 minus an edge: p=0, q=1 (non-adjacent), r=2, s=3.
pub const K4_ME: [(Vertex, Vertex); 5] = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
pub const K4ME_ENTRY: Vertex = 0;
pub const K4ME_EXIT: Vertex = 1;

/// K2,3 gadget: centre x1=0, x2=1, ports y1=2, y2=3, y3=4.
pub const K23: [(Vertex, Vertex); 6] = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)];

/// Spine vertex that gadget `j` of `Gcat(k)` hangs from (`None` for `k = 2`).
pub fn gcat_leaf_parent(k: usize, j: usize) -> Option<usize> {
    if k == 2 {
        return None;
    }
    Some(match j {
        0 => 0,
        j if j == k - 1 => k - 3,
        j => j - 1,
    })
}

/// `Gcat(k)`: gadget `j` occupies `5j..5j+5` in K4' order; spine vertex `i`
/// is `5k + i` for `i < k - 2`.
fn gcat(k: usize) -> Graph {
    let mut edges = Vec::new();
    for j in 0..k {
        edges.extend(K4_PRIME.iter().map(|&(u, v)| (5 * j + u, 5 * j + v)));
    }
    let spine = |i: usize| 5 * k + i;
    for i in 0..k.saturating_sub(3) {
        edges.push((spine(i), spine(i + 1)));
    }
    if k == 2 {
        edges.push((K4_PRIME_PORT, 5 + K4_PRIME_PORT));
    } else {
        for j in 0..k {
            edges.push((spine(gcat_leaf_parent(k, j).unwrap()), 5 * j + K4_PRIME_PORT));
        }
    }
    Graph::from_edges(6 * k - 2, &edges)
}

/// Cycle of `k` gadget copies; copy `i` occupies `size*i..size*(i+1)` and
/// its exit joins the entry of copy `i+1 mod k`.
fn gadget_cycle(k: usize, size: usize, gadget: &[(Vertex, Vertex)], entry: Vertex, exit: Vertex) -> Graph {
    let mut edges = Vec::new();
    for i in 0..k {
        edges.extend(gadget.iter().map(|&(u, v)| (size * i + u, size * i + v)));
        edges.push((size * i + exit, size * ((i + 1) % k) + entry));
    }
    Graph::from_edges(size * k, &edges)
}

/// Circular ladder (prism) on `k` vertices: rungs `j - (j + k/2)`.
pub fn circular_ladder(k: usize) -> Graph {
    let h = k / 2;
    let mut edges = Vec::new();
    for j in 0..h {
        edges.push((j, (j + 1) % h));
        edges.push((h + j, h + (j + 1) % h));
        edges.push((j, h + j));
    }
    Graph::from_edges(k, &edges)
}

/// Base graph of `F_k`: K4 for `k = 4`, otherwise the circular ladder.
pub fn fk23_base(k: usize) -> Graph {
    if k == 4 {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    } else {
        circular_ladder(k)
    }
}

/// Port (gadget-local id of the `y` vertex) used at base vertex `v` for
/// the base edge towards `w`: the rank of `w` in `v`'s sorted adjacency.
pub fn fk23_port(base: &Graph, v: Vertex, w: Vertex) -> Vertex {
    2 + base.neighbors(v).iter().position(|&x| x == w).expect("not adjacent")
}

/// `F_k`: copy of K2,3 for base vertex `v` at `5v..5v+5`.
fn fk23(k: usize) -> Graph {
    let base = fk23_base(k);
    let mut edges = Vec::new();
    for v in 0..k {
        edges.extend(K23.iter().map(|&(a, b)| (5 * v + a, 5 * v + b)));
    }
    for (v, w) in base.edges() {
        edges.push((5 * v + fk23_port(&base, v, w), 5 * w + fk23_port(&base, w, v)));
    }
    Graph::from_edges(5 * k, &edges)
}

/// Vertex layout of `Tgrid(i)`.
///
/// The first grid has vertices `(a, b)` with `a + b <= L = i - 1`, numbered
/// row by row. The second grid contributes only its interior vertices; its
/// boundary is identified with the first grid's boundary cycle shifted by
/// one position, which keeps the corner chords of the two grids apart and
/// the result simple.
pub struct TgridLayout {
    pub side: usize,
    first: Vec<Vec<Vertex>>,
    second: Vec<Vec<Option<Vertex>>>,
    pub t: usize,
}

impl TgridLayout {
    pub fn new(i: usize) -> Self {
        let l = i - 1;
        let mut next = 0;
        let mut first = vec![Vec::new(); l + 1];
        for (a, row) in first.iter_mut().enumerate() {
            for _ in 0..=l - a {
                row.push(next);
                next += 1;
            }
        }
        let mut second = vec![Vec::new(); l + 1];
        for (a, row) in second.iter_mut().enumerate() {
            for b in 0..=l - a {
                if a >= 1 && b >= 1 && a + b < l {
                    row.push(Some(next));
                    next += 1;
                } else {
                    row.push(None);
                }
            }
        }
        TgridLayout { side: l, first, second, t: next }
    }

    /// Position of a boundary lattice point on the boundary cycle.
    fn boundary_position(&self, a: usize, b: usize) -> usize {
        let l = self.side;
        if b == 0 && a < l {
            a
        } else if a + b == l && b < l {
            l + b
        } else {
            2 * l + (l - b)
        }
    }

    fn boundary_point(&self, pos: usize) -> (usize, usize) {
        let l = self.side;
        let pos = pos % (3 * l);
        if pos < l {
            (pos, 0)
        } else if pos < 2 * l {
            (l - (pos - l), pos - l)
        } else {
            (0, l - (pos - 2 * l))
        }
    }

    pub fn first(&self, a: usize, b: usize) -> Vertex {
        self.first[a][b]
    }

    /// Vertex of the second grid at lattice point `(a, b)`.
    pub fn second(&self, a: usize, b: usize) -> Vertex {
        match self.second[a][b] {
            Some(v) => v,
            None => {
                let (a2, b2) = self.boundary_point(self.boundary_position(a, b) + 1);
                self.first[a2][b2]
            }
        }
    }

    /// Lattice triangles of one grid side `L`.
    pub fn lattice_triangles(&self) -> Vec<[(usize, usize); 3]> {
        let l = self.side;
        let mut tris = Vec::new();
        for a in 0..l {
            for b in 0..l - a {
                tris.push([(a, b), (a + 1, b), (a, b + 1)]);
                if a + b + 2 <= l {
                    tris.push([(a + 1, b), (a + 1, b + 1), (a, b + 1)]);
                }
            }
        }
        tris
    }
}

fn tgrid(i: usize) -> Graph {
    let lay = TgridLayout::new(i);
    let mut edges = std::collections::BTreeSet::new();
    for tri in lay.lattice_triangles() {
        for (x, y) in [(0, 1), (1, 2), (2, 0)] {
            let (p, q) = (tri[x], tri[y]);
            for (u, v) in [(lay.first(p.0, p.1), lay.first(q.0, q.1)), (lay.second(p.0, p.1), lay.second(q.0, q.1))] {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    Graph::from_edges(lay.t, &edges.into_iter().collect::<Vec<_>>())
}

/// Id of fan path vertex `j` (0..=i) attached at triangulation vertex `v`.
pub fn sfan_path_vertex(i: usize, t: usize, v: Vertex, j: usize) -> Vertex {
    t + v * (i + 1) + j
}

fn sfan(i: usize) -> Graph {
    let base = tgrid(i);
    let t = base.n();
    let mut edges: Vec<_> = base.edges().collect();
    for v in 0..t {
        for j in 0..=i {
            edges.push((v, sfan_path_vertex(i, t, v, j)));
            if j < i {
                edges.push((sfan_path_vertex(i, t, v, j), sfan_path_vertex(i, t, v, j + 1)));
            }
        }
    }
    Graph::from_edges(t * (i + 2), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connectivity, is_planar, planar_embedding};

    #[test]
    fn small_gadgets() {
        let g = generate(FamilyId::K4Prime, 1).unwrap();
        assert_eq!((g.n(), g.m()), (5, 7));
        let g = generate(FamilyId::K33Me, 1).unwrap();
        assert_eq!((g.n(), g.m()), (6, 8));
        assert!(is_planar(&g));
        let g = generate(FamilyId::K4Me, 1).unwrap();
        assert_eq!((g.n(), g.m()), (4, 5));
    }

    #[test]
    fn icycle_3() {
        let g = generate(FamilyId::Icycle, 3).unwrap();
        assert_eq!((g.n(), g.m()), (12, 18));
        assert!(g.is_cubic());
        assert_eq!(connectivity(&g), 2);
        assert!(is_planar(&g));
    }

    #[test]
    fn hcycle_4_is_not_planar() {
        let g = generate(FamilyId::Hcycle, 4).unwrap();
        assert_eq!(g.n(), 24);
        assert!(g.is_cubic());
        assert!(!is_planar(&g));
        assert_eq!(connectivity(&g), 2);
    }

    #[test]
    fn sfan_3_has_30_vertices() {
        assert_eq!(generate(FamilyId::Sfan, 3).unwrap().n(), 30);
    }

    #[test]
    fn tgrid_is_a_triangulation() {
        for i in 3..=8 {
            let g = generate(FamilyId::Tgrid, i).unwrap();
            let t = i * i - 2 * i + 3;
            assert_eq!(g.n(), t);
            assert_eq!(g.m(), 3 * t - 6);
            assert!(g.max_degree() <= 6);
            let emb = planar_embedding(&g).expect("planar");
            assert!(emb.faces().iter().all(|f| f.len() == 3));
            assert_eq!(emb.faces().len(), 2 * t - 4);
        }
        // i = 3 is the octahedron
        assert!(generate(FamilyId::Tgrid, 3).unwrap().is_regular(4));
    }

    #[test]
    fn gcat_connectivity() {
        for k in 2..=6 {
            let g = generate(FamilyId::Gcat, k).unwrap();
            assert_eq!(g.n(), 6 * k - 2);
            assert!(g.is_cubic(), "k={k}");
            assert_eq!(connectivity(&g), 1);
        }
    }

    #[test]
    fn fk23_is_triconnected() {
        for k in [4, 6, 8] {
            let g = generate(FamilyId::K23GadgetF, k).unwrap();
            assert_eq!(g.n(), 5 * k);
            assert!(g.is_cubic());
            assert_eq!(connectivity(&g), 3);
            assert_eq!(connectivity(&fk23_base(k)), 3);
        }
    }

    #[test]
    fn parameter_errors() {
        assert!(generate(FamilyId::Gcat, 1).is_err());
        assert!(generate(FamilyId::Hcycle, 2).is_err());
        assert!(generate(FamilyId::K23GadgetF, 5).is_err());
        assert!(generate(FamilyId::Tgrid, 2).is_err());
        assert!("nope".parse::<FamilyId>().is_err());
        assert_eq!("ICYCLE".parse::<FamilyId>().unwrap(), FamilyId::Icycle);
    }
}
