//! Integer program for NANIP with Miller-Tucker-Zemlin ordering constraints.
//!
//! Each edge is oriented by binary arc variables (`e_i_j = 1` when `i` is
//! installed before `j`), order variables `u_i` in `[0, n]` rule out
//! directed cycles, and an epigraph variable `z_i` per vertex is held above
//! the secants of the cost table so that minimising `sum z_i` reproduces
//! `sum f(d_i)` at integral points.

mod decode;
mod external;
mod lp_format;
mod model;
mod program;
mod simplex;

pub use decode::decode_solution;
pub use external::{parse_solution, solve_external, solve_external_with, SolverCommand, SOLVER_ENV};
pub use lp_format::{emit_lp, parse_lp};
pub use model::{build_ip, IpModel, IpOptions, Linearization};
pub use program::{Constraint, LinearProgram, Sense, VarKind, Variable};
pub use simplex::{solve_lp, LpSolution, MAX_PIVOTS};

use crate::error::Result;

/// Tolerance for constraint satisfaction and integrality of a solution.
pub const SOLUTION_TOLERANCE: f64 = 1e-6;

/// An assignment to every variable of an [`IpModel`].
#[derive(Clone, Debug, PartialEq)]
pub struct IpSolution {
    pub values: Vec<f64>,
    pub objective: f64,
    /// All binary variables within tolerance of 0 or 1.
    pub integral: bool,
}

impl IpSolution {
    pub(crate) fn new(program: &LinearProgram, values: Vec<f64>) -> Self {
        let objective = program.objective_value(&values);
        let integral = program
            .variables
            .iter()
            .zip(&values)
            .filter(|(var, _)| var.kind == VarKind::Binary)
            .all(|(_, &x)| (x - x.round()).abs() <= SOLUTION_TOLERANCE);
        Self {
            values,
            objective,
            integral,
        }
    }
}

/// Optimum of the linear relaxation (binaries relaxed to `[0, 1]`), solved
/// with the internal dense simplex.
pub fn solve_lp_relaxation(model: &IpModel) -> Result<IpSolution> {
    let lp = solve_lp(&model.program)?;
    Ok(IpSolution::new(&model.program, lp.values))
}
