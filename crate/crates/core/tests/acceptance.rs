//! End-to-end acceptance suite: one line per criterion, then a single
//! assertion that all of them passed.

mod common;

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use segforge::construct::{
    draw_bicubic_3d_traced, draw_bicubic_bend, draw_witness, s_family_2d_lower_bound, Claim,
};
use segforge::drawing::{audit, decompose, validate};
use segforge::etr::{encode, solve, solver_command, SolverOutcome, Variant};
use segforge::families::{arrangement_graph, generate, tail_gadget, FamilyId, Line};
use segforge::geom::{generic_project, q, qr};
use segforge::graph::{connectivity, is_planar, Graph};
use segforge::st::{classify_st, default_endpoints, st_numbering, StNumbering};
use segforge::{Drawing, DrawingStyle};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Every drawing produced by the suite, for the counting identity.
#[derive(Default)]
struct Drawn {
    checked: usize,
    skipped: usize,
    failures: Vec<String>,
}

impl Drawn {
    fn record(&mut self, name: &str, d: &Drawing, g: &Graph) {
        if !g.is_cubic() {
            self.skipped += 1;
            return;
        }
        self.checked += 1;
        match audit(d, g) {
            Ok(a) if a.identity_holds() => {}
            Ok(a) => self.failures.push(format!("{name}: seg={} 3n/2-f+b={} n/2+t+b={}", a.segments, a.via_flat(), a.via_tripods())),
            Err(e) => self.failures.push(format!("{name}: {e}")),
        }
    }
}

struct Drawn3d {
    name: String,
    graph: Graph,
    drawing: Drawing,
    seg: usize,
}

struct Context {
    corpus: Vec<(String, Graph)>,
    drawn3d: Vec<Drawn3d>,
    orders: Vec<(String, Graph, StNumbering)>,
    drawn: Drawn,
}

fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<_> = common::named_corpus().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    for n in (8..=200).step_by(16) {
        for j in 0..50 {
            out.push((format!("random n={n} #{j}"), common::random_bicubic(n, (n * 1000 + j) as u64)));
        }
    }
    out
}

fn criterion_1(cx: &mut Context) -> Outcome {
    let mut slowest = Duration::ZERO;
    for (name, g) in &cx.corpus {
        let n = g.n();
        let start = Instant::now();
        let r = draw_bicubic_3d_traced(g, false).map_err(|e| format!("{name}: {e}"))?;
        let took = start.elapsed();
        if n == 200 {
            slowest = slowest.max(took);
        }
        ensure!(took <= Duration::from_secs(5), "{name}: took {took:?}");
        let rep = validate(&r.drawing, g, DrawingStyle::Free3d).map_err(|e| e.to_string())?;
        ensure!(rep.is_valid(), "{name}: {rep}");
        let seg = decompose(&r.drawing).map_err(|e| e.to_string())?.count();
        ensure!(seg <= n + 2, "{name}: seg={seg} > n+2={}", n + 2);
        let a = audit(&r.drawing, g).map_err(|e| e.to_string())?;
        ensure!(2 * a.counts.flat + 4 >= n, "{name}: f={} < n/2-2", a.counts.flat);
        cx.drawn.record(name, &r.drawing, g);
        let order = StNumbering::from_order(g, r.order.order().to_vec()).map_err(|e| format!("{name}: {e}"))?;
        cx.orders.push((format!("{name} (construction order)"), g.clone(), order));
        cx.drawn3d.push(Drawn3d { name: name.clone(), graph: g.clone(), drawing: r.drawing, seg });
    }
    Ok(format!("{} graphs, seg <= n+2 and f >= n/2-2, slowest n=200 draw {slowest:.2?}", cx.corpus.len()))
}

fn criterion_3(_: &mut Context) -> Outcome {
    use FamilyId::*;
    let closed = |f: FamilyId, p: usize| -> usize {
        match f {
            Gcat => 6 * p - 2,
            Hcycle => 6 * p,
            Icycle => 4 * p,
            K23GadgetF => 5 * p,
            Sfan => p * p * p - p + 6,
            Tgrid => p * p - 2 * p + 3,
            _ => unreachable!(),
        }
    };
    let mut checked = 0;
    for f in [Gcat, Hcycle, Icycle, K23GadgetF, Sfan, Tgrid] {
        for p in 1..=20 {
            if f.check_param(p).is_err() {
                ensure!(generate(f, p).is_err(), "{f}({p}) should be rejected");
                continue;
            }
            let g = generate(f, p).map_err(|e| e.to_string())?;
            ensure!(g.n() == closed(f, p), "{f}({p}): n={} expected {}", g.n(), closed(f, p));
            let gamma = match f {
                Gcat => Some(1),
                Hcycle | Icycle => Some(2),
                K23GadgetF => Some(3),
                _ => None,
            };
            if let Some(gamma) = gamma {
                ensure!(g.is_cubic(), "{f}({p}) is not cubic");
                ensure!(connectivity(&g) == gamma, "{f}({p}): connectivity {} expected {gamma}", connectivity(&g));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} family members match their sizes and connectivity"))
}

fn criterion_4(cx: &mut Context) -> Outcome {
    let cases: [(FamilyId, Option<DrawingStyle>, fn(usize) -> usize); 5] = [
        (FamilyId::Gcat, None, |k| 5 * k - 1),
        (FamilyId::Icycle, None, |k| 3 * k),
        (FamilyId::Hcycle, Some(DrawingStyle::Crossing2d), |k| 4 * k),
        (FamilyId::Hcycle, Some(DrawingStyle::Free3d), |k| 5 * k),
        (FamilyId::K23GadgetF, None, |k| 7 * k / 2),
    ];
    let mut checked = 0;
    for (family, style, expected) in cases {
        for k in 3..=10 {
            if family.check_param(k).is_err() {
                continue;
            }
            let w = draw_witness(family, k, style).map_err(|e| e.to_string())?;
            let name = format!("{family}({k}) {}", w.style);
            let rep = validate(&w.drawing, &w.graph, w.style).map_err(|e| e.to_string())?;
            ensure!(rep.is_valid(), "{name}: {rep}");
            let seg = decompose(&w.drawing).map_err(|e| e.to_string())?.count();
            ensure!(seg == expected(k), "{name}: seg={seg} expected {}", expected(k));
            ensure!(w.claim == Claim::Exact(seg), "{name}: claim {:?}", w.claim);
            cx.drawn.record(&name, &w.drawing, &w.graph);
            if w.style == DrawingStyle::Free3d {
                cx.drawn3d.push(Drawn3d { name, graph: w.graph, drawing: w.drawing, seg });
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} witnesses valid with the exact counts"))
}

fn criterion_5(cx: &mut Context) -> Outcome {
    let mut checked = 0;
    for (name, g) in &cx.corpus {
        if !is_planar(g) {
            continue;
        }
        let n = g.n();
        let d = draw_bicubic_bend(g).map_err(|e| format!("{name}: {e}"))?;
        let rep = validate(&d, g, DrawingStyle::Bend2d).map_err(|e| e.to_string())?;
        ensure!(rep.is_valid(), "{name}: {rep}");
        ensure!(d.edges().all(|(_, _, b)| b.len() <= 1), "{name}: an edge has two bends");
        let bends = d.bend_count();
        ensure!(bends <= n / 2 + 1, "{name}: {bends} bends > n/2+1");
        let seg = decompose(&d).map_err(|e| e.to_string())?.count();
        ensure!(seg <= n + 1, "{name}: seg={seg} > n+1");
        if name == "K4" {
            ensure!(seg == 5, "K4: seg={seg} expected 5");
        }
        cx.drawn.record(&format!("{name} bend"), &d, g);
        checked += 1;
    }
    ensure!(checked > 0, "no planar graph in the corpus");
    Ok(format!("{checked} planar graphs, K4 on 5 segments"))
}

fn criterion_6(cx: &mut Context) -> Outcome {
    for d in &cx.drawn3d {
        let p = generic_project(&d.drawing).map_err(|e| format!("{}: {e}", d.name))?;
        let rep = validate(&p, &d.graph, DrawingStyle::Crossing2d).map_err(|e| e.to_string())?;
        ensure!(rep.is_valid(), "{}: {rep}", d.name);
        let seg = decompose(&p).map_err(|e| e.to_string())?.count();
        ensure!(seg <= d.seg, "{}: projected seg={seg} > {}", d.name, d.seg);
        cx.drawn.record(&format!("{} projected", d.name), &p, &d.graph);
    }
    Ok(format!("{} projections without overlaps, none with more segments", cx.drawn3d.len()))
}

fn criterion_7(cx: &mut Context) -> Outcome {
    let mut ratios = Vec::new();
    for i in [4, 6, 8] {
        let w = draw_witness(FamilyId::Sfan, i, Some(DrawingStyle::Free3d)).map_err(|e| e.to_string())?;
        let rep = validate(&w.drawing, &w.graph, w.style).map_err(|e| e.to_string())?;
        ensure!(rep.is_valid(), "S({i}): {rep}");
        let seg = decompose(&w.drawing).map_err(|e| e.to_string())?.count();
        ensure!(w.claim.holds(seg), "S({i}): seg={seg} vs claim {:?}", w.claim);
        let lb = s_family_2d_lower_bound(i).map_err(|e| e.to_string())?;
        cx.drawn.record(&format!("S({i})"), &w.drawing, &w.graph);
        ratios.push((i, lb, seg, lb as f64 / seg as f64));
    }
    let text: Vec<_> = ratios.iter().map(|(i, lb, seg, r)| format!("i={i}: {lb}/{seg}={r:.3}")).collect();
    // compare exactly: lb1/seg1 < lb2/seg2 iff lb1*seg2 < lb2*seg1
    ensure!(
        ratios.windows(2).all(|w| w[0].1 * w[1].2 < w[1].1 * w[0].2),
        "ratios not strictly increasing: {}",
        text.join(", ")
    );
    Ok(text.join(", "))
}

fn criterion_8(cx: &mut Context) -> Outcome {
    for (name, g) in &cx.corpus {
        let (s, t) = default_endpoints(g).ok_or("empty graph")?;
        for (a, b) in [(s, t), (t, s)] {
            let st = st_numbering(g, a, b).map_err(|e| format!("{name}: {e}"))?;
            cx.orders.push((format!("{name} ({a},{b})"), g.clone(), st));
        }
    }
    for (name, g, st) in &cx.orders {
        let n = g.n();
        let hist = classify_st(g, st).map_err(|e| format!("{name}: {e}"))?;
        let expected = [1, (n - 2) / 2, (n - 2) / 2, 1];
        ensure!(hist == expected, "{name}: histogram {hist:?} expected {expected:?}");
    }
    Ok(format!("{} st-numberings with histogram (1, (n-2)/2, (n-2)/2, 1)", cx.orders.len()))
}

fn criterion_9(cx: &mut Context) -> Outcome {
    let Some(solver) = solver_command() else {
        return Ok("skipped: no solver configured".into());
    };
    let limit = Duration::from_secs(60);
    let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
    let k4 = common::k4();
    let mut lines = Vec::new();
    for (name, g, k, want_sat) in [("K4", &k4, 6, true), ("K4", &k4, 5, false), ("triangle", &triangle, 3, true)] {
        let f = encode(g, k, Variant::Seg2).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let out = solve(&f, &solver, limit).map_err(|e| format!("{name} k={k}: {e}"))?;
        let took = start.elapsed();
        ensure!(took <= limit, "{name} k={k}: took {took:?}");
        match (out, want_sat) {
            (SolverOutcome::Sat(d), true) => {
                let rep = validate(&d, g, DrawingStyle::Planar2d).map_err(|e| e.to_string())?;
                ensure!(rep.is_valid(), "{name} k={k}: decoded drawing {rep}");
                let seg = decompose(&d).map_err(|e| e.to_string())?.count();
                ensure!(seg <= k, "{name} k={k}: decoded drawing has {seg} segments");
                cx.drawn.record(&format!("{name} k={k} model"), &d, g);
            }
            (SolverOutcome::Unsat, false) => {}
            (other, _) => {
                let got = match other {
                    SolverOutcome::Sat(_) => "sat".to_string(),
                    SolverOutcome::Unsat => "unsat".to_string(),
                    SolverOutcome::Unknown(why) => format!("unknown ({why})"),
                };
                return Err(format!("{name} k={k}: solver said {got}"));
            }
        }
        lines.push(format!("{name} k={k} {} in {took:.1?}", if want_sat { "sat" } else { "unsat" }));
    }
    Ok(lines.join(", "))
}

fn criterion_10(_: &mut Context) -> Outcome {
    let line = |a: i64, b: i64, c: i64| Line::new(q(a), q(b), q(c)).unwrap();
    let arrangements = [
        vec![line(1, 0, 0), line(0, 1, 0), line(1, 1, 1)],
        vec![line(1, 0, 0), line(0, 1, 0), line(1, 1, 1), line(1, -2, 3)],
        vec![
            line(1, 0, 0),
            line(0, 1, 0),
            line(1, 1, 1),
            line(1, -2, 3),
            Line::new(qr(3, 2), q(1), qr(-1, 3)).unwrap(),
        ],
    ];
    let mut text = Vec::new();
    for lines in &arrangements {
        let l = lines.len();
        let (g, _) = arrangement_graph(lines).map_err(|e| e.to_string())?;
        let (t, k) = tail_gadget(&g).map_err(|e| e.to_string())?;
        ensure!(k == l, "{l} lines recovered as {k}");
        for v in 0..t.n() {
            ensure!(t.degree(v) == 1 || t.degree(v) == 4, "{l} lines: vertex {v} has degree {}", t.degree(v));
        }
        ensure!((0..g.n()).all(|v| t.degree(v) == 4), "{l} lines: an arrangement vertex lacks degree 4");
        text.push(format!("l={l}: n={} leaves={}", g.n(), t.n() - g.n()));
    }
    Ok(text.join(", "))
}

fn criterion_2(cx: &mut Context) -> Outcome {
    ensure!(cx.drawn.failures.is_empty(), "{}", cx.drawn.failures.join("; "));
    ensure!(cx.drawn.checked > 0, "no drawings recorded");
    Ok(format!("identity exact on {} drawings ({} non-cubic skipped)", cx.drawn.checked, cx.drawn.skipped))
}

#[test]
fn acceptance() {
    let mut cx = Context { corpus: corpus(), drawn3d: Vec::new(), orders: Vec::new(), drawn: Drawn::default() };
    // criterion 2 reads what the others drew, so it runs last
    let order: [(usize, &str, fn(&mut Context) -> Outcome); 10] = [
        (1, "3D drawings of biconnected cubic graphs", criterion_1),
        (3, "family sizes and connectivity", criterion_3),
        (4, "witness drawings", criterion_4),
        (5, "planar drawings with bends", criterion_5),
        (6, "generic projection", criterion_6),
        (7, "fan family ratio trend", criterion_7),
        (8, "st-numbering classes", criterion_8),
        (9, "encoder with solver", criterion_9),
        (10, "tail gadget round trip", criterion_10),
        (2, "counting identity", criterion_2),
    ];
    let mut results = Vec::new();
    for (id, title, run) in order {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(|| run(&mut cx))).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        results.push((id, title, out, start.elapsed()));
    }
    results.sort_by_key(|r| r.0);
    // written to the handle directly so the lines show without --nocapture
    let mut out = std::io::stdout().lock();
    for (id, title, res, took) in &results {
        let line = match res {
            Ok(msg) => format!("criterion {id:>2} PASS  {title}: {msg} [{took:.1?}]"),
            Err(msg) => format!("criterion {id:>2} FAIL  {title}: {msg} [{took:.1?}]"),
        };
        writeln!(out, "{line}").unwrap();
    }
    drop(out);
    let failed: Vec<_> = results.iter().filter(|r| r.2.is_err()).map(|r| r.0).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
