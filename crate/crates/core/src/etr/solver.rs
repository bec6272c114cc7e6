//! Running an external SMT solver on an emitted formula.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use super::{decode_model, emit_smt, EtrError, EtrFormula};
use crate::drawing::Drawing;

/// Environment variable naming the solver executable.
pub const SOLVER_ENV: &str = "SEGFORGE_SOLVER";
pub const DEFAULT_SOLVER: &str = "z3";

#[derive(Clone, Debug)]
pub enum SolverOutcome {
    /// Satisfiable, with the decoded and re-validated drawing.
    Sat(Drawing),
    Unsat,
    /// The solver gave up or ran out of time.
    Unknown(String),
}

fn find_executable(name: &str) -> Option<PathBuf> {
    let p = Path::new(name);
    if p.components().count() > 1 {
        return p.is_file().then(|| p.to_path_buf());
    }
    std::env::split_paths(&std::env::var_os("PATH")?).map(|d| d.join(name)).find(|c| c.is_file())
}

/// The solver named by `SEGFORGE_SOLVER`, else `z3` when it is on the path.
pub fn solver_command() -> Option<PathBuf> {
    match std::env::var(SOLVER_ENV) {
        Ok(s) if !s.trim().is_empty() => find_executable(s.trim()),
        _ => find_executable(DEFAULT_SOLVER),
    }
}

static RUN: AtomicUsize = AtomicUsize::new(0);

/// Runs `solver` on the formula, killing it after `timeout`.
pub fn solve(f: &EtrFormula, solver: &Path, timeout: Duration) -> Result<SolverOutcome, EtrError> {
    let file = std::env::temp_dir().join(format!(
        "segforge-{}-{}.smt2",
        std::process::id(),
        RUN.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::write(&file, emit_smt(f)).map_err(|e| EtrError::Solver(e.to_string()))?;
    let result = run(solver, &file, timeout);
    let _ = std::fs::remove_file(&file);
    let out = result?;
    let mut words = out.split_whitespace();
    match words.next() {
        Some("sat") => Ok(SolverOutcome::Sat(decode_model(f, out.trim_start().trim_start_matches("sat"))?)),
        Some("unsat") => Ok(SolverOutcome::Unsat),
        Some("unknown") => Ok(SolverOutcome::Unknown("solver answered unknown".into())),
        Some("timeout") | None => Ok(SolverOutcome::Unknown("no answer".into())),
        Some(_) => Err(EtrError::Solver(out.lines().next().unwrap_or_default().to_string())),
    }
}

fn run(solver: &Path, file: &Path, timeout: Duration) -> Result<String, EtrError> {
    let mut child = Command::new(solver)
        .arg(file)
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(|e| EtrError::Solver(format!("{}: {e}", solver.display())))?;
    let mut stdout = child.stdout.take().unwrap();
    let reader = std::thread::spawn(move || {
        let mut s = String::new();
        let _ = stdout.read_to_string(&mut s);
        s
    });
    let start = Instant::now();
    loop {
        if child.try_wait().map_err(|e| EtrError::Solver(e.to_string()))?.is_some() {
            break;
        }
        if start.elapsed() > timeout {
            let _ = child.kill();
            let _ = child.wait();
            return Ok("timeout".into());
        }
        std::thread::sleep(Duration::from_millis(20));
    }
    Ok(reader.join().unwrap_or_default())
}
