use std::path::PathBuf;

use thiserror::Error;

/// Errors raised by graph construction, instance parsing, the solvers and the
/// integer-programming layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },

    #[error("order is not a permutation of 0..{n}: {reason}")]
    NotAPermutation { n: usize, reason: String },

    #[error("cost table must contain at least one value")]
    EmptyCostTable,

    #[error("cost value f({index}) = {value} is not a finite non-negative number")]
    InvalidCostValue { index: usize, value: f64 },

    #[error("{algorithm} is limited to {limit} vertices, instance has {n}")]
    TooLarge {
        algorithm: &'static str,
        limit: usize,
        n: usize,
    },

    #[error("{algorithm} requires a {predicate} cost function")]
    CostPredicate {
        algorithm: &'static str,
        predicate: &'static str,
    },

    #[error("{0} requires a connected graph")]
    Disconnected(&'static str),

    #[error("{algorithm} exceeded its time limit of {seconds} s")]
    Timeout { algorithm: &'static str, seconds: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("simplex did not converge within {0} pivots")]
    IterationLimit(usize),

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("solution is not integral: {name} = {value}")]
    Fractional { name: String, value: f64 },

    #[error("solution violates a constraint by {0}")]
    Violated(f64),

    #[error("decoded traversal costs {cost}, solution objective is {objective}")]
    Inconsistent { cost: f64, objective: f64 },

    #[error("external solver unavailable: {0}")]
    SolverUnavailable(String),

    #[error("external solver exited with status {status}: {stderr}")]
    SolverFailed { status: i32, stderr: String },

    #[error("could not parse solver output {path}: {message}")]
    SolverOutput { path: PathBuf, message: String },

    #[error("external solver reported the model infeasible")]
    SolverInfeasible,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
