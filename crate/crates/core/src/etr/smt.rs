//! SMT-LIB text for formulas and models.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::{EtrError, EtrFormula, Formula, Rel, Term, Variant};
use crate::geom::Q;

const META: &str = "; segforge";

fn num(x: &Q) -> String {
    let mag = |x: &Q| {
        if x.is_integer() {
            format!("{}.0", x.numer())
        } else {
            format!("(/ {}.0 {}.0)", x.numer(), x.denom())
        }
    };
    if x.is_negative() {
        format!("(- {})", mag(&-x))
    } else {
        mag(x)
    }
}

fn term(t: &Term, vars: &[String], out: &mut String) {
    let list = |op: &str, items: &[&Term], out: &mut String| {
        out.push('(');
        out.push_str(op);
        for i in items {
            out.push(' ');
            term(i, vars, out);
        }
        out.push(')');
    };
    match t {
        Term::Var(i) => out.push_str(&vars[*i]),
        Term::Num(x) => out.push_str(&num(x)),
        Term::Add(v) => list("+", &v.iter().collect::<Vec<_>>(), out),
        Term::Mul(v) => list("*", &v.iter().collect::<Vec<_>>(), out),
        Term::Sub(a, b) => list("-", &[a, b], out),
    }
}

fn formula(f: &Formula, vars: &[String], out: &mut String) {
    let list = |op: &str, items: &[&Formula], out: &mut String| {
        out.push('(');
        out.push_str(op);
        for i in items {
            out.push(' ');
            formula(i, vars, out);
        }
        out.push(')');
    };
    match f {
        Formula::Rel(r, a, b) => {
            write!(out, "({} ", r.symbol()).unwrap();
            term(a, vars, out);
            out.push(' ');
            term(b, vars, out);
            out.push(')');
        }
        Formula::Not(x) => list("not", &[x], out),
        Formula::And(v) => list("and", &v.iter().collect::<Vec<_>>(), out),
        Formula::Or(v) => list("or", &v.iter().collect::<Vec<_>>(), out),
        Formula::Implies(a, b) => list("=>", &[a, b], out),
    }
}

/// SMT-LIB text for nonlinear real arithmetic with one `check-sat` and a
/// `get-model`. A leading comment records the graph so the text parses back.
pub fn emit_smt(f: &EtrFormula) -> String {
    let mut s = String::new();
    let edges: Vec<String> = f.edges.iter().map(|(u, v)| format!("{u}-{v}")).collect();
    writeln!(s, "{META} variant={} n={} k={} edges={}", f.variant.name(), f.n, f.k, edges.join(",")).unwrap();
    s.push_str("(set-option :produce-models true)\n(set-logic QF_NRA)\n");
    for v in &f.vars {
        writeln!(s, "(declare-fun {v} () Real)").unwrap();
    }
    for a in &f.assertions {
        s.push_str("(assert ");
        formula(a, &f.vars, &mut s);
        s.push_str(")\n");
    }
    s.push_str("(check-sat)\n(get-model)\n");
    s
}

#[derive(Clone, Debug, PartialEq)]
enum Sexp {
    Atom(String),
    List(Vec<Sexp>),
}

fn tokenize(text: &str) -> Result<Vec<Sexp>, EtrError> {
    let mut stack: Vec<Vec<Sexp>> = vec![Vec::new()];
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ';' => {
                while chars.next_if(|&c| c != '\n').is_some() {}
            }
            '(' => {
                chars.next();
                stack.push(Vec::new());
            }
            ')' => {
                chars.next();
                let done = stack.pop().unwrap();
                stack.last_mut().ok_or_else(|| EtrError::Parse("unbalanced ')'".into()))?.push(Sexp::List(done));
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            '|' | '"' => {
                chars.next();
                let mut atom = String::new();
                loop {
                    match chars.next() {
                        Some(x) if x == c => break,
                        Some(x) => atom.push(x),
                        None => return Err(EtrError::Parse("unterminated quote".into())),
                    }
                }
                stack.last_mut().unwrap().push(Sexp::Atom(atom));
            }
            _ => {
                let mut atom = String::new();
                while let Some(x) = chars.next_if(|&x| !x.is_whitespace() && x != '(' && x != ')' && x != ';') {
                    atom.push(x);
                }
                stack.last_mut().unwrap().push(Sexp::Atom(atom));
            }
        }
        if stack.is_empty() {
            return Err(EtrError::Parse("unbalanced ')'".into()));
        }
    }
    if stack.len() != 1 {
        return Err(EtrError::Parse("unbalanced '('".into()));
    }
    Ok(stack.pop().unwrap())
}

fn decimal(s: &str) -> Option<Q> {
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() || !int.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("{int}{frac}").parse().ok()?;
    Some(Q::new(digits, BigInt::from(10).pow(frac.len() as u32)))
}

/// Evaluates a closed numeric expression; `None` when it is not a
/// rational constant.
fn value(e: &Sexp) -> Option<Q> {
    match e {
        Sexp::Atom(a) => decimal(a),
        Sexp::List(items) => {
            let (Sexp::Atom(op), args) = items.split_first()? else { return None };
            let vals: Option<Vec<Q>> = args.iter().map(value).collect();
            let vals = vals?;
            match (op.as_str(), vals.as_slice()) {
                ("-", [x]) => Some(-x),
                ("-", [x, rest @ ..]) => Some(rest.iter().fold(x.clone(), |a, b| a - b)),
                ("+", v) => Some(v.iter().sum()),
                ("*", v) => Some(v.iter().product()),
                ("/", [a, b]) if !b.is_zero() => Some(a / b),
                _ => None,
            }
        }
    }
}

fn parse_term(e: &Sexp, names: &BTreeMap<&str, usize>) -> Result<Term, EtrError> {
    if let Some(x) = value(e) {
        return Ok(Term::Num(x));
    }
    match e {
        Sexp::Atom(a) => names.get(a.as_str()).map(|&i| Term::Var(i)).ok_or_else(|| EtrError::Parse(format!("undeclared {a}"))),
        Sexp::List(items) => {
            let Some((Sexp::Atom(op), args)) = items.split_first() else {
                return Err(EtrError::Parse("malformed term".into()));
            };
            let args = args.iter().map(|a| parse_term(a, names)).collect::<Result<Vec<_>, _>>()?;
            match (op.as_str(), args.len()) {
                ("+", _) => Ok(Term::Add(args)),
                ("*", _) => Ok(Term::Mul(args)),
                ("-", 2) => {
                    let mut it = args.into_iter();
                    Ok(Term::Sub(Box::new(it.next().unwrap()), Box::new(it.next().unwrap())))
                }
                _ => Err(EtrError::Parse(format!("unsupported term operator {op}"))),
            }
        }
    }
}

fn parse_formula(e: &Sexp, names: &BTreeMap<&str, usize>) -> Result<Formula, EtrError> {
    let Sexp::List(items) = e else { return Err(EtrError::Parse("expected a formula".into())) };
    let Some((Sexp::Atom(op), args)) = items.split_first() else {
        return Err(EtrError::Parse("malformed formula".into()));
    };
    let subs = || args.iter().map(|a| parse_formula(a, names)).collect::<Result<Vec<_>, _>>();
    let rel = |r| -> Result<Formula, EtrError> {
        match args {
            [a, b] => Ok(Formula::Rel(r, parse_term(a, names)?, parse_term(b, names)?)),
            _ => Err(EtrError::Parse(format!("{op} takes two arguments"))),
        }
    };
    match op.as_str() {
        "=" => rel(Rel::Eq),
        "<=" => rel(Rel::Le),
        "<" => rel(Rel::Lt),
        "and" => Ok(Formula::And(subs()?)),
        "or" => Ok(Formula::Or(subs()?)),
        "not" | "=>" => {
            let mut v = subs()?;
            match (op.as_str(), v.len()) {
                ("not", 1) => Ok(Formula::Not(Box::new(v.pop().unwrap()))),
                ("=>", 2) => {
                    let b = v.pop().unwrap();
                    Ok(Formula::Implies(Box::new(v.pop().unwrap()), Box::new(b)))
                }
                _ => Err(EtrError::Parse(format!("wrong arity for {op}"))),
            }
        }
        _ => Err(EtrError::Parse(format!("unsupported connective {op}"))),
    }
}

fn parse_meta(text: &str) -> Result<(Variant, usize, usize, Vec<(usize, usize)>), EtrError> {
    let line = text.lines().find_map(|l| l.strip_prefix(META)).ok_or_else(|| EtrError::Parse("missing graph comment".into()))?;
    let mut fields = BTreeMap::new();
    for part in line.split_whitespace() {
        if let Some((k, v)) = part.split_once('=') {
            fields.insert(k, v);
        }
    }
    let field = |k: &str| fields.get(k).copied().ok_or_else(|| EtrError::Parse(format!("missing {k}")));
    let int = |k: &str| -> Result<usize, EtrError> { field(k)?.parse().map_err(|_| EtrError::Parse(format!("bad {k}"))) };
    if field("variant")? != "seg2" {
        return Err(EtrError::Parse("unknown variant".into()));
    }
    let mut edges = Vec::new();
    for e in field("edges")?.split(',').filter(|e| !e.is_empty()) {
        let (u, v) = e.split_once('-').ok_or_else(|| EtrError::Parse(format!("bad edge {e}")))?;
        let p = |s: &str| s.parse::<usize>().map_err(|_| EtrError::Parse(format!("bad edge {e}")));
        edges.push((p(u)?, p(v)?));
    }
    Ok((Variant::Seg2, int("n")?, int("k")?, edges))
}

/// Reads text produced by [`emit_smt`] back into a formula.
pub fn parse_smt(text: &str) -> Result<EtrFormula, EtrError> {
    let (variant, n, k, edges) = parse_meta(text)?;
    let mut vars = Vec::new();
    let mut raw = Vec::new();
    for cmd in tokenize(text)? {
        let Sexp::List(items) = &cmd else { return Err(EtrError::Parse("stray atom".into())) };
        match items.as_slice() {
            [Sexp::Atom(c), Sexp::Atom(name), Sexp::List(args), Sexp::Atom(sort)] if c == "declare-fun" => {
                if !args.is_empty() || sort != "Real" {
                    return Err(EtrError::Parse(format!("{name} is not a real constant")));
                }
                vars.push(name.clone());
            }
            [Sexp::Atom(c), body] if c == "assert" => raw.push(body.clone()),
            _ => {}
        }
    }
    let names: BTreeMap<&str, usize> = vars.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let assertions = raw.iter().map(|e| parse_formula(e, &names)).collect::<Result<_, _>>()?;
    Ok(EtrFormula { vars, assertions, n, edges, k, variant })
}

fn collect_defs(e: &Sexp, out: &mut BTreeMap<String, Q>) -> Result<(), EtrError> {
    let Sexp::List(items) = e else { return Ok(()) };
    if let [Sexp::Atom(d), Sexp::Atom(name), Sexp::List(args), _sort, body] = items.as_slice() {
        if d == "define-fun" && args.is_empty() {
            let v = value(body).ok_or_else(|| EtrError::IrrationalModel(name.clone()))?;
            out.insert(name.clone(), v);
            return Ok(());
        }
    }
    items.iter().try_for_each(|x| collect_defs(x, out))
}

/// Variable assignment from a solver's `get-model` answer. Values must be
/// rational literals or ratios of them.
pub fn parse_model(text: &str) -> Result<BTreeMap<String, Q>, EtrError> {
    let mut out = BTreeMap::new();
    for e in tokenize(text)? {
        collect_defs(&e, &mut out)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::encode;
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn eight_declarations_for_an_edge() {
        let f = encode(&Graph::from_edges(2, &[(0, 1)]), 1, Variant::Seg2).unwrap();
        let text = emit_smt(&f);
        assert_eq!(text.matches("(declare-fun").count(), 8);
        assert!(text.contains("(set-logic QF_NRA)"));
        assert_eq!(text.matches("(check-sat)").count(), 1);
    }

    #[test]
    fn round_trip() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        for (g, k) in [(k4, 6), (path, 2)] {
            let f = encode(&g, k, Variant::Seg2).unwrap();
            assert_eq!(parse_smt(&emit_smt(&f)).unwrap(), f);
        }
    }

    #[test]
    fn numbers() {
        for (n, d) in [(0, 1), (-3, 1), (7, 4), (-1, 3)] {
            let x = Q::new(n.into(), d.into());
            let e = &tokenize(&num(&x)).unwrap()[0];
            assert_eq!(value(e), Some(x));
        }
        assert_eq!(decimal("2.50"), Some(Q::new(5.into(), 2.into())));
        assert_eq!(decimal("1.41?"), None);
    }

    #[test]
    fn malformed_text() {
        assert!(parse_smt("(assert (= x 0))").is_err());
        assert!(tokenize("((a)").is_err());
        assert!(tokenize("(a))").is_err());
    }
}
