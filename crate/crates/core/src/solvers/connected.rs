use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::dp::{subset_dp, DP_LIMIT};
use crate::solvers::{finish, Deadline, Limits, SolveResult};

/// Cheapest order among those whose every prefix induces a connected
/// subgraph.
pub fn connected_dp(graph: &Graph, cost: &CostFunction) -> Result<SolveResult> {
    connected_dp_with(graph, cost, &Limits::default())
}

pub fn connected_dp_with(
    graph: &Graph,
    cost: &CostFunction,
    limits: &Limits,
) -> Result<SolveResult> {
    if !graph.is_connected() {
        return Err(Error::Disconnected("connected DP"));
    }
    if graph.n() > DP_LIMIT {
        return Err(Error::TooLarge {
            algorithm: "connected DP",
            limit: DP_LIMIT,
            n: graph.n(),
        });
    }
    let deadline = Deadline::start(limits, "connected DP");
    let part = subset_dp(graph, cost, &deadline, true)?;
    finish(graph, cost, part.order, true, part.nodes_expanded, deadline)
}
