use std::fmt::Debug;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use segforge::construct::{draw_bicubic_3d_traced, draw_bicubic_bend, draw_witness};
use segforge::drawing::{audit, decompose, from_json, to_json, to_lines3d, to_svg, validate};
use segforge::etr::{emit_smt, encode, solve, solver_command, SolverOutcome, Variant, SOLVER_ENV};
use segforge::families::{generate, tail_gadget, FamilyId};
use segforge::geom::{generic_project, parse_q, project_along};
use segforge::{Drawing, DrawingStyle, Graph};

#[derive(Parser)]
#[command(name = "segforge", version, about = "Build, check and count low-segment drawings of graphs")]
struct Cli {
    /// Reserved; every algorithm is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Generate a member of a graph family.
    Gen(GenArgs),
    /// Draw a graph with a construction, or emit a family witness drawing.
    Draw(DrawArgs),
    /// Check drawings against a style; exits 1 if any is invalid.
    Verify(VerifyArgs),
    /// Print segment, flat-vertex, tripod and bend counts.
    Count(CountArgs),
    /// Project a 3D drawing to the plane without overlaps.
    Project(ProjectArgs),
    /// Emit the real-arithmetic formula deciding whether seg <= k.
    Encode(EncodeArgs),
    /// Export a drawing as SVG or as a list of 3D lines.
    Export(ExportArgs),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: FamilyId,
    /// Family parameter (k or i).
    #[arg(long, required_unless_present = "from")]
    k: Option<usize>,
    /// Arrangement graph for the tail gadget family.
    #[arg(long)]
    from: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alg {
    /// Straight-line 3D drawing of a biconnected cubic graph.
    Bi3d,
    /// Planar polyline drawing of a biconnected planar cubic graph.
    Bend,
}

#[derive(Args)]
struct DrawArgs {
    #[arg(long, requires = "input", conflicts_with = "witness")]
    alg: Option<Alg>,
    #[arg(short, long)]
    input: Option<PathBuf>,
    #[arg(long, required_unless_present = "alg", requires = "k")]
    witness: Option<FamilyId>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    style: Option<DrawingStyle>,
    /// Print the placement log of the 3D construction to stderr.
    #[arg(long)]
    trace: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    style: DrawingStyle,
    /// Graph to check against; defaults to the graph of each drawing.
    #[arg(short, long)]
    graph: Option<PathBuf>,
    #[arg(short, long, required = true, num_args = 1..)]
    drawing: Vec<PathBuf>,
}

#[derive(Args)]
struct CountArgs {
    #[arg(short, long, required = true, num_args = 1..)]
    drawing: Vec<PathBuf>,
    #[arg(short, long)]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct ProjectArgs {
    #[arg(short, long)]
    drawing: PathBuf,
    /// Project along (a, b, 1) instead of searching for a direction.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    along: Option<Vec<String>>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EncodeArgs {
    #[arg(short, long)]
    graph: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Run the solver named by SEGFORGE_SOLVER (or z3) and report the answer.
    #[arg(long)]
    solve: bool,
    #[arg(long, default_value_t = 60)]
    timeout: u64,
    /// Where to write the decoded drawing when the formula is satisfiable.
    #[arg(long, requires = "solve")]
    drawing_out: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false, id = "format")]
struct Format {
    #[arg(long)]
    svg: bool,
    #[arg(long)]
    lines3d: bool,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    format: Format,
    #[arg(short, long)]
    drawing: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Failure of a verb: usage problems exit with 2, failed checks with 1.
enum Failure {
    Usage(String, String),
    Invalid(String, String),
}

fn code<E: Debug>(e: &E) -> String {
    let dbg = format!("{e:?}");
    let name: String = dbg.chars().take_while(|c| c.is_alphanumeric()).collect();
    // unwrap wrapper variants such as Family(BadParameter { .. })
    match dbg[name.len()..].strip_prefix('(') {
        Some(rest) if rest.starts_with(|c: char| c.is_uppercase()) => rest.chars().take_while(|c| c.is_alphanumeric()).collect(),
        _ => name,
    }
}

fn usage<E: Debug + std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(code(&e), e.to_string())
}

fn invalid<E: Debug + std::fmt::Display>(e: E) -> Failure {
    Failure::Invalid(code(&e), e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage("Io".into(), format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage("Io".into(), format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read(path)?).map_err(usage)
}

fn read_drawing(path: &Path) -> Result<Drawing, Failure> {
    from_json(&read(path)?).map_err(usage)
}

fn gen(a: GenArgs) -> Result<(), Failure> {
    let g = if a.family == FamilyId::TailGadget {
        let from = a.from.ok_or_else(|| Failure::Usage("MissingArgument".into(), "the tail family needs --from <arrangement graph>".into()))?;
        tail_gadget(&read_graph(&from)?).map_err(usage)?.0
    } else {
        let k = a.k.ok_or_else(|| Failure::Usage("MissingArgument".into(), format!("{} needs --k", a.family)))?;
        generate(a.family, k).map_err(usage)?
    };
    write(a.output.as_deref(), &g.to_text())
}

fn draw(a: DrawArgs) -> Result<(), Failure> {
    let d = match (a.alg, a.witness) {
        (Some(alg), _) => {
            let g = read_graph(a.input.as_deref().expect("clap requires --input"))?;
            match alg {
                Alg::Bi3d => {
                    let r = draw_bicubic_3d_traced(&g, false).map_err(invalid)?;
                    if a.trace {
                        for s in &r.log {
                            eprintln!("{s}");
                        }
                    }
                    r.drawing
                }
                Alg::Bend => draw_bicubic_bend(&g).map_err(invalid)?,
            }
        }
        (None, Some(family)) => {
            let w = draw_witness(family, a.k.expect("clap requires --k"), a.style).map_err(usage)?;
            eprintln!("{} witness, claimed {}", w.style, describe(w.claim));
            w.drawing
        }
        (None, None) => unreachable!("clap requires --alg or --witness"),
    };
    write(a.output.as_deref(), &to_json(&d))
}

fn describe(c: segforge::construct::Claim) -> String {
    match c {
        segforge::construct::Claim::Exact(n) => format!("seg={n}"),
        segforge::construct::Claim::AtMost(n) => format!("seg<={n}"),
    }
}

fn verify(a: VerifyArgs) -> Result<(), Failure> {
    let given = a.graph.as_deref().map(read_graph).transpose()?;
    let drawings = a.drawing.iter().map(|p| read_drawing(p)).collect::<Result<Vec<_>, _>>()?;
    let reports: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = drawings
            .iter()
            .map(|d| {
                let g = given.clone().unwrap_or_else(|| d.graph());
                s.spawn(move || validate(d, &g, a.style))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("validation thread panicked")).collect()
    });
    let mut all_valid = true;
    for (path, rep) in a.drawing.iter().zip(reports) {
        let rep = rep.map_err(usage)?;
        all_valid &= rep.is_valid();
        if a.drawing.len() > 1 {
            print!("{}: ", path.display());
        }
        print!("{rep}");
    }
    if all_valid {
        Ok(())
    } else {
        Err(Failure::Invalid("InvalidDrawing".into(), "drawing violates the style".into()))
    }
}

fn count_one(d: &Drawing, g: &Graph) -> Result<(String, bool), Failure> {
    use std::fmt::Write;
    let mut out = String::new();
    let seg = decompose(d).map_err(usage)?.count();
    writeln!(out, "seg={seg}").unwrap();
    if g.is_cubic() && g.n() == d.n() {
        let r = audit(d, g).map_err(usage)?;
        let ok = r.identity_holds();
        writeln!(out, "f={}\nt={}\nb={}", r.counts.flat, r.counts.tripods, r.counts.bends).unwrap();
        let verdict = if ok { "holds" } else { "fails" };
        writeln!(out, "identity={verdict} (3n/2-f+b={}, n/2+t+b={})", r.via_flat(), r.via_tripods()).unwrap();
        Ok((out, ok))
    } else {
        writeln!(out, "b={}\nidentity=n/a (graph is not cubic)", d.bend_count()).unwrap();
        Ok((out, true))
    }
}

fn count(a: CountArgs) -> Result<(), Failure> {
    let given = a.graph.as_deref().map(read_graph).transpose()?;
    let drawings = a.drawing.iter().map(|p| read_drawing(p)).collect::<Result<Vec<_>, _>>()?;
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = drawings
            .iter()
            .map(|d| {
                let g = given.clone().unwrap_or_else(|| d.graph());
                s.spawn(move || count_one(d, &g))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("count thread panicked")).collect()
    });
    let mut all_hold = true;
    for (path, r) in a.drawing.iter().zip(results) {
        let (out, ok) = r?;
        all_hold &= ok;
        if a.drawing.len() > 1 {
            println!("{}:", path.display());
        }
        print!("{out}");
    }
    if all_hold {
        Ok(())
    } else {
        Err(Failure::Invalid("IdentityFails".into(), "counting identity does not hold".into()))
    }
}

fn project(a: ProjectArgs) -> Result<(), Failure> {
    let d = read_drawing(&a.drawing)?;
    let p = match a.along {
        Some(v) => {
            let x = parse_q(&v[0]).map_err(usage)?;
            let y = parse_q(&v[1]).map_err(usage)?;
            let p = project_along(&d, &x, &y).map_err(usage)?;
            let rep = validate(&p, &d.graph(), DrawingStyle::Crossing2d).map_err(usage)?;
            if !rep.is_valid() {
                eprint!("{rep}");
                return Err(Failure::Invalid("DegenerateProjection".into(), "projection creates overlaps".into()));
            }
            p
        }
        None => generic_project(&d).map_err(invalid)?,
    };
    write(a.output.as_deref(), &to_json(&p))
}

fn encode_verb(a: EncodeArgs) -> Result<(), Failure> {
    let g = read_graph(&a.graph)?;
    let f = encode(&g, a.k, Variant::Seg2).map_err(usage)?;
    if a.output.is_some() || !a.solve {
        write(a.output.as_deref(), &emit_smt(&f))?;
    }
    if !a.solve {
        return Ok(());
    }
    let solver = solver_command()
        .ok_or_else(|| Failure::Usage("NoSolver".into(), format!("no solver found; set {SOLVER_ENV} or install z3")))?;
    match solve(&f, &solver, Duration::from_secs(a.timeout)).map_err(invalid)? {
        SolverOutcome::Sat(d) => {
            println!("sat");
            if let Some(p) = a.drawing_out {
                write(Some(&p), &to_json(&d))?;
            }
        }
        SolverOutcome::Unsat => println!("unsat"),
        SolverOutcome::Unknown(why) => println!("unknown ({why})"),
    }
    Ok(())
}

fn export(a: ExportArgs) -> Result<(), Failure> {
    let d = read_drawing(&a.drawing)?;
    let text = if a.format.svg {
        // 3D drawings are shown through a generic projection
        let flat = if d.dim() == 3 { generic_project(&d).map_err(invalid)? } else { d };
        to_svg(&flat).map_err(usage)?
    } else {
        to_lines3d(&d)
    };
    write(a.output.as_deref(), &text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seed;
    let result = match cli.verb {
        Verb::Gen(a) => gen(a),
        Verb::Draw(a) => draw(a),
        Verb::Verify(a) => verify(a),
        Verb::Count(a) => count(a),
        Verb::Project(a) => project(a),
        Verb::Encode(a) => encode_verb(a),
        Verb::Export(a) => export(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(code, msg)) => {
            eprintln!("error[{code}]: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(code, msg)) => {
            eprintln!("error[{code}]: {msg}");
            ExitCode::from(2)
        }
    }
}
