//! Adapter for an external MILP solver run as a subprocess.
//!
//! The command template is a shell command in which `{lp}` is replaced by
//! the path of the emitted LP file and `{sol}` by the path the solver must
//! write its solution to. The solution file holds whitespace-separated
//! `name value` lines; a line `status infeasible` reports infeasibility and
//! unrecognised lines are ignored.

use std::path::Path;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::ip::lp_format::emit_lp;
use crate::ip::model::IpModel;
use crate::ip::program::LinearProgram;
use crate::ip::IpSolution;

pub const SOLVER_ENV: &str = "NANIP_SOLVER_CMD";

/// Exit status `sh` uses for a command it cannot find.
const COMMAND_NOT_FOUND: i32 = 127;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverCommand {
    pub template: String,
}

impl SolverCommand {
    pub fn new(template: impl Into<String>) -> Self {
        Self {
            template: template.into(),
        }
    }

    /// The template in `NANIP_SOLVER_CMD`, if set and non-empty.
    pub fn from_env() -> Option<Self> {
        std::env::var(SOLVER_ENV)
            .ok()
            .filter(|s| !s.trim().is_empty())
            .map(Self::new)
    }

    fn render(&self, lp: &Path, sol: &Path) -> String {
        self.template
            .replace("{lp}", &shell_quote(lp))
            .replace("{sol}", &shell_quote(sol))
    }
}

fn shell_quote(path: &Path) -> String {
    format!("'{}'", path.display().to_string().replace('\'', r"'\''"))
}

/// Solves `model` to integrality with the external solver.
pub fn solve_external(model: &IpModel, command: &SolverCommand) -> Result<IpSolution> {
    solve_external_with(model, command, None)
}

/// As [`solve_external`], killing the solver once `time_limit` elapses.
pub fn solve_external_with(
    model: &IpModel,
    command: &SolverCommand,
    time_limit: Option<Duration>,
) -> Result<IpSolution> {
    if command.template.trim().is_empty() {
        return Err(Error::SolverUnavailable("empty solver command".into()));
    }
    let dir = tempfile::tempdir()?;
    let lp = dir.path().join("model.lp");
    let sol = dir.path().join("model.sol");
    std::fs::write(&lp, emit_lp(&model.program))?;

    let mut child = match Command::new("sh")
        .arg("-c")
        .arg(command.render(&lp, &sol))
        .stdin(Stdio::null())
        .stdout(Stdio::null())
        .stderr(Stdio::piped())
        .spawn()
    {
        Ok(child) => child,
        Err(e) => return Err(Error::SolverUnavailable(format!("cannot spawn sh: {e}"))),
    };
    let start = Instant::now();
    let status = loop {
        if let Some(status) = child.try_wait()? {
            break status;
        }
        if let Some(limit) = time_limit {
            if start.elapsed() >= limit {
                let _ = child.kill();
                let _ = child.wait();
                return Err(Error::Timeout {
                    algorithm: "ip-external",
                    seconds: limit.as_secs_f64(),
                });
            }
        }
        std::thread::sleep(Duration::from_millis(5));
    };
    let mut stderr = String::new();
    if let Some(mut pipe) = child.stderr.take() {
        use std::io::Read;
        let _ = pipe.read_to_string(&mut stderr);
    }
    match status.code() {
        Some(0) => {}
        Some(COMMAND_NOT_FOUND) => return Err(Error::SolverUnavailable(stderr.trim().to_string())),
        code => {
            return Err(Error::SolverFailed {
                status: code.unwrap_or(-1),
                stderr: stderr.trim().to_string(),
            })
        }
    }
    let text = std::fs::read_to_string(&sol).map_err(|e| Error::SolverOutput {
        path: sol.clone(),
        message: e.to_string(),
    })?;
    let values = parse_solution(&text, &model.program).map_err(|e| match e {
        Error::SolverOutput { message, .. } => Error::SolverOutput { path: sol, message },
        other => other,
    })?;
    Ok(IpSolution::new(&model.program, values))
}

/// Reads `name value` lines into a value per variable of `program`.
/// Variables not mentioned are zero.
pub fn parse_solution(text: &str, program: &LinearProgram) -> Result<Vec<f64>> {
    let mut values = vec![0.0; program.variables.len()];
    let mut matched = 0;
    for line in text.lines() {
        let mut fields = line.split_whitespace();
        let (Some(name), Some(value)) = (fields.next(), fields.next()) else {
            continue;
        };
        if name.eq_ignore_ascii_case("status") {
            if value.eq_ignore_ascii_case("infeasible") {
                return Err(Error::SolverInfeasible);
            }
            continue;
        }
        let Some(index) = program.variable_index(name) else {
            continue;
        };
        let value: f64 = value.parse().map_err(|_| Error::SolverOutput {
            path: Default::default(),
            message: format!("bad value {value:?} for {name}"),
        })?;
        values[index] = value;
        matched += 1;
    }
    if matched == 0 && !program.variables.is_empty() {
        return Err(Error::SolverOutput {
            path: Default::default(),
            message: "no variable values found".into(),
        });
    }
    Ok(values)
}
