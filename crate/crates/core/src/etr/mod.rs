//! Existential formulas over the reals deciding whether a graph has a
//! planar straight-line drawing on at most `k` segments.
//!
//! Variables are the vertex points `v_i = (vx_i, vy_i)` and the segment
//! endpoints `p_l`, `q_l`. The clauses are:
//!
//! - (a) distinct vertices get distinct points;
//! - (b) every segment is nondegenerate, and its endpoints are vertex points;
//! - (c) every edge lies on some segment;
//! - (d) edges meet only at shared endpoints: no vertex lies on a
//!   non-incident edge and no two disjoint edges cross;
//! - (e) two vertices on a segment with no vertex between them are adjacent;
//! - (f) `v_0 = (0, 0)` and `v_1 = (1, 0)`, which any affine map provides.

mod smt;
mod solver;

pub use smt::{emit_smt, parse_model, parse_smt};
pub use solver::{solve, solver_command, SolverOutcome, DEFAULT_SOLVER, SOLVER_ENV};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::drawing::{decompose, validate, Drawing, DrawingStyle};
use crate::geom::{Point, Q};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EtrError {
    #[error("k must be at least 1")]
    BadK,
    #[error("model value for {0} is not a rational number")]
    IrrationalModel(String),
    #[error("model does not describe a valid drawing: {0}")]
    InvalidWitness(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("solver: {0}")]
    Solver(String),
}

/// Segment-number variant being decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Seg2,
}

impl Variant {
    pub fn name(self) -> &'static str {
        "seg2"
    }
}

/// Polynomial over the formula's variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Var(usize),
    Num(Q),
    Add(Vec<Term>),
    Sub(Box<Term>, Box<Term>),
    Mul(Vec<Term>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Eq,
    Le,
    Lt,
}

impl Rel {
    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Eq => "=",
            Rel::Le => "<=",
            Rel::Lt => "<",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Rel(Rel, Term, Term),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

/// Closed existential formula: all variables are implicitly quantified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtrFormula {
    pub vars: Vec<String>,
    pub assertions: Vec<Formula>,
    pub n: usize,
    pub edges: Vec<(Vertex, Vertex)>,
    pub k: usize,
    pub variant: Variant,
}

impl EtrFormula {
    pub fn graph(&self) -> Graph {
        Graph::from_edges(self.n, &self.edges)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

fn var_names(n: usize, k: usize) -> Vec<String> {
    let mut v = Vec::with_capacity(2 * n + 4 * k);
    for i in 0..n {
        v.push(format!("vx_{i}"));
        v.push(format!("vy_{i}"));
    }
    for l in 0..k {
        for p in ["px", "py", "qx", "qy"] {
            v.push(format!("{p}_{l}"));
        }
    }
    v
}

type Pt = (Term, Term);

fn sub(a: &Term, b: &Term) -> Term {
    Term::Sub(Box::new(a.clone()), Box::new(b.clone()))
}

fn mul(a: Term, b: Term) -> Term {
    Term::Mul(vec![a, b])
}

fn zero() -> Term {
    Term::Num(Q::from_integer(0.into()))
}

fn cross(o: &Pt, a: &Pt, b: &Pt) -> Term {
    Term::Sub(
        Box::new(mul(sub(&a.0, &o.0), sub(&b.1, &o.1))),
        Box::new(mul(sub(&a.1, &o.1), sub(&b.0, &o.0))),
    )
}

fn same(a: &Pt, b: &Pt) -> Formula {
    Formula::And(vec![Formula::Rel(Rel::Eq, a.0.clone(), b.0.clone()), Formula::Rel(Rel::Eq, a.1.clone(), b.1.clone())])
}

fn not(f: Formula) -> Formula {
    Formula::Not(Box::new(f))
}

/// `a` lies on the closed segment `bc`.
fn between(a: &Pt, b: &Pt, c: &Pt) -> Formula {
    let dot = Term::Add(vec![mul(sub(&b.0, &a.0), sub(&c.0, &a.0)), mul(sub(&b.1, &a.1), sub(&c.1, &a.1))]);
    Formula::And(vec![Formula::Rel(Rel::Eq, cross(a, b, c), zero()), Formula::Rel(Rel::Le, dot, zero())])
}

/// `c` and `d` lie strictly on opposite sides of line `ab`.
fn opposite(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> Formula {
    let (x, y) = (cross(a, b, c), cross(a, b, d));
    let lt = |s: &Term, t: &Term| Formula::Rel(Rel::Lt, s.clone(), t.clone());
    Formula::Or(vec![
        Formula::And(vec![lt(&x, &zero()), lt(&zero(), &y)]),
        Formula::And(vec![lt(&zero(), &x), lt(&y, &zero())]),
    ])
}

/// Builds the formula deciding whether `g` has a planar straight-line
/// drawing on at most `k` segments.
pub fn encode(g: &Graph, k: usize, variant: Variant) -> Result<EtrFormula, EtrError> {
    if k == 0 {
        return Err(EtrError::BadK);
    }
    let n = g.n();
    let vars = var_names(n, k);
    let v: Vec<Pt> = (0..n).map(|i| (Term::Var(2 * i), Term::Var(2 * i + 1))).collect();
    let seg = |l: usize| {
        let b = 2 * n + 4 * l;
        ((Term::Var(b), Term::Var(b + 1)), (Term::Var(b + 2), Term::Var(b + 3)))
    };
    let edges: Vec<_> = g.edges().collect();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(not(same(&v[i], &v[j])));
        }
    }
    for l in 0..k {
        let (p, q) = seg(l);
        out.push(not(same(&p, &q)));
        let mut ends = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                ends.push(Formula::And(vec![same(&p, &v[a]), same(&q, &v[b])]));
            }
        }
        out.push(Formula::Or(ends));
    }
    for (x, &(i, j)) in edges.iter().enumerate() {
        let mut cover = Vec::new();
        for l in 0..k.min(x + 1) {
            let (p, q) = seg(l);
            for a in 0..n {
                for b in a + 1..n {
                    let mut c = vec![same(&p, &v[a]), same(&q, &v[b])];
                    for x in [i, j] {
                        if x != a && x != b {
                            c.push(between(&v[x], &v[a], &v[b]));
                        }
                    }
                    cover.push(Formula::And(c));
                }
            }
        }
        out.push(Formula::Or(cover));
    }
    for (x, &(i, j)) in edges.iter().enumerate() {
        for m in (0..n).filter(|&m| m != i && m != j) {
            out.push(not(between(&v[m], &v[i], &v[j])));
        }
        for &(a, b) in &edges[x + 1..] {
            if a == i || a == j || b == i || b == j {
                continue;
            }
            out.push(not(Formula::And(vec![opposite(&v[i], &v[j], &v[a], &v[b]), opposite(&v[a], &v[b], &v[i], &v[j])])));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let clear: Vec<_> = (0..n).filter(|&m| m != i && m != j).map(|m| not(between(&v[m], &v[i], &v[j]))).collect();
            for l in 0..k {
                let (p, q) = seg(l);
                let mut lhs = vec![between(&v[i], &p, &q), between(&v[j], &p, &q)];
                lhs.extend(clear.iter().cloned());
                out.push(not(Formula::And(lhs)));
            }
        }
    }
    if n >= 2 {
        let num = |x: i64| Term::Num(Q::from_integer(x.into()));
        out.push(same(&v[0], &(num(0), num(0))));
        out.push(same(&v[1], &(num(1), num(0))));
    }
    Ok(EtrFormula { vars, assertions: out, n, edges, k, variant })
}

/// Turns a solver assignment into a drawing and checks it: the drawing
/// must be planar and use at most `k` segments.
pub fn decode_model(f: &EtrFormula, model: &str) -> Result<Drawing, EtrError> {
    let values: BTreeMap<String, Q> = parse_model(model)?;
    let get = |name: String| values.get(&name).cloned().ok_or_else(|| EtrError::InvalidWitness(format!("{name} missing")));
    let mut pts = Vec::with_capacity(f.n);
    for i in 0..f.n {
        pts.push(Point::p2(get(format!("vx_{i}"))?, get(format!("vy_{i}"))?));
    }
    let g = f.graph();
    let d = Drawing::straight(2, pts, &g).map_err(|e| EtrError::InvalidWitness(e.to_string()))?;
    let rep = validate(&d, &g, DrawingStyle::Planar2d).map_err(|e| EtrError::InvalidWitness(e.to_string()))?;
    if !rep.is_valid() {
        return Err(EtrError::InvalidWitness(rep.to_string()));
    }
    let count = decompose(&d).map_err(|e| EtrError::InvalidWitness(e.to_string()))?.count();
    if count > f.k {
        return Err(EtrError::InvalidWitness(format!("{count} segments, more than {}", f.k)));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge() -> Graph {
        Graph::from_edges(2, &[(0, 1)])
    }

    #[test]
    fn variable_count() {
        let f = encode(&edge(), 1, Variant::Seg2).unwrap();
        assert_eq!(f.vars.len(), 8);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(encode(&k4, 6, Variant::Seg2).unwrap().vars.len(), 2 * 4 + 4 * 6);
        assert_eq!(encode(&edge(), 0, Variant::Seg2), Err(EtrError::BadK));
    }

    #[test]
    fn decode_edge_model() {
        let f = encode(&edge(), 1, Variant::Seg2).unwrap();
        let model = "sat\n((define-fun vx_0 () Real 0.0) (define-fun vy_0 () Real 0.0)\n (define-fun vx_1 () Real (/ 1.0 2.0)) (define-fun vy_1 () Real (- 3.0)))";
        let d = decode_model(&f, model).unwrap();
        assert_eq!(decompose(&d).unwrap().count(), 1);
    }

    #[test]
    fn decode_rejects_bad_models() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let f = encode(&tri, 3, Variant::Seg2).unwrap();
        let collinear = "((define-fun vx_0 () Real 0) (define-fun vy_0 () Real 0) (define-fun vx_1 () Real 1) \
                         (define-fun vy_1 () Real 0) (define-fun vx_2 () Real 2) (define-fun vy_2 () Real 0))";
        assert!(matches!(decode_model(&f, collinear), Err(EtrError::InvalidWitness(_))));
        let irrational = "((define-fun vx_0 () Real (root-obj (+ (^ x 2) (- 2)) 1)))";
        assert!(matches!(decode_model(&f, irrational), Err(EtrError::IrrationalModel(_))));
    }
}
