//! Exact and heuristic solvers.
//!
//! Every solver returns a [`SolveResult`] whose cost is the re-evaluated cost
//! of its witness order. Exact solvers other than brute force split the graph
//! into connected components and concatenate the per-component optima.

mod bnb;
mod bound;
mod brute;
mod connected;
mod dp;
mod greedy;

use std::time::{Duration, Instant};

pub use bnb::{branch_and_bound, branch_and_bound_with};
pub use bound::lower_bound;
pub use brute::{brute_force, BRUTE_FORCE_LIMIT};
pub use connected::{connected_dp, connected_dp_with};
pub use dp::{exact_dp, exact_dp_with, DP_LIMIT};
pub use greedy::{greedy, TieBreak};

pub use crate::traversal::is_connected_traversal;

use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::traversal::evaluate_cost;

/// Absolute tolerance used when comparing costs.
pub const COST_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct SolveResult {
    pub order: Vec<usize>,
    pub cost: f64,
    /// True when the solver proves `cost` minimal.
    pub optimal: bool,
    pub nodes_expanded: u64,
    pub wall_time: Duration,
}

/// Resource limits for the exact solvers.
#[derive(Clone, Copy, Debug, Default)]
pub struct Limits {
    pub time_limit: Option<Duration>,
}

impl Limits {
    pub fn with_time_limit(limit: Duration) -> Self {
        Self {
            time_limit: Some(limit),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Deadline {
    start: Instant,
    limit: Option<Duration>,
    algorithm: &'static str,
}

impl Deadline {
    pub(crate) fn start(limits: &Limits, algorithm: &'static str) -> Self {
        Self {
            start: Instant::now(),
            limit: limits.time_limit,
            algorithm,
        }
    }

    pub(crate) fn check(&self) -> Result<()> {
        match self.limit {
            Some(limit) if self.start.elapsed() > limit => Err(Error::Timeout {
                algorithm: self.algorithm,
                seconds: limit.as_secs_f64(),
            }),
            _ => Ok(()),
        }
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}

pub(crate) struct ComponentSolution {
    pub order: Vec<usize>,
    pub nodes_expanded: u64,
}

/// Solves each connected component with `solve` (on the induced subgraph,
/// local labels) and concatenates the orders in global labels.
pub(crate) fn solve_by_components(
    graph: &Graph,
    cost: &CostFunction,
    deadline: Deadline,
    optimal: bool,
    mut solve: impl FnMut(&Graph) -> Result<ComponentSolution>,
) -> Result<SolveResult> {
    let mut order = Vec::with_capacity(graph.n());
    let mut nodes_expanded = 0;
    for comp in graph.components() {
        let sub = graph.induced(&comp);
        let part = solve(&sub)?;
        nodes_expanded += part.nodes_expanded;
        order.extend(part.order.into_iter().map(|v| comp[v]));
    }
    finish(graph, cost, order, optimal, nodes_expanded, deadline)
}

pub(crate) fn finish(
    graph: &Graph,
    cost: &CostFunction,
    order: Vec<usize>,
    optimal: bool,
    nodes_expanded: u64,
    deadline: Deadline,
) -> Result<SolveResult> {
    let total = evaluate_cost(graph, cost, &order)?.total_cost;
    Ok(SolveResult {
        order,
        cost: total,
        optimal,
        nodes_expanded,
        wall_time: deadline.elapsed(),
    })
}

/// Largest component size; the exact solvers' size guards apply to this.
pub(crate) fn largest_component(graph: &Graph) -> usize {
    graph.components().iter().map(Vec::len).max().unwrap_or(0)
}
