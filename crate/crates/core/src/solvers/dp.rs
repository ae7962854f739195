//! Dynamic programming over vertex subsets.
//!
//! The cost of installing `v` depends only on which vertices precede it, not
//! their order, so the cheapest way to install a set `S` first is
//! `C(S) = min_{v in S} C(S \ v) + f(|N(v) ∩ (S \ v)|)` with `C(∅) = 0`.

use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{
    largest_component, solve_by_components, ComponentSolution, Deadline, Limits, SolveResult,
    COST_TOLERANCE,
};

/// Largest component the subset DP accepts (`2^n` table entries).
pub const DP_LIMIT: usize = 24;

pub fn exact_dp(graph: &Graph, cost: &CostFunction) -> Result<SolveResult> {
    exact_dp_with(graph, cost, &Limits::default())
}

pub fn exact_dp_with(graph: &Graph, cost: &CostFunction, limits: &Limits) -> Result<SolveResult> {
    let size = largest_component(graph);
    if size > DP_LIMIT {
        return Err(Error::TooLarge {
            algorithm: "exact DP",
            limit: DP_LIMIT,
            n: size,
        });
    }
    let deadline = Deadline::start(limits, "exact DP");
    solve_by_components(graph, cost, deadline, true, |sub| {
        subset_dp(sub, cost, &deadline, false)
    })
}

pub(crate) fn adjacency_masks(graph: &Graph) -> Vec<u32> {
    (0..graph.n())
        .map(|v| graph.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Shared by [`exact_dp`] and the connected variant: with `connected_only`
/// set, a vertex may only be appended to a non-empty set it is adjacent to.
pub(crate) fn subset_dp(
    graph: &Graph,
    cost: &CostFunction,
    deadline: &Deadline,
    connected_only: bool,
) -> Result<ComponentSolution> {
    let n = graph.n();
    debug_assert!(n <= DP_LIMIT);
    let adj = adjacency_masks(graph);
    let f: Vec<f64> = (0..=n).map(|r| cost.value(r)).collect();
    let full = (1usize << n) - 1;

    let mut best = vec![f64::INFINITY; full + 1];
    best[0] = 0.0;
    for set in 1..=full {
        if set & 0xFFFF == 0 {
            deadline.check()?;
        }
        let mut value = f64::INFINITY;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = set & !(1 << v);
            let seen = adj[v] & prev as u32;
            if connected_only && prev != 0 && seen == 0 {
                continue;
            }
            let candidate = best[prev] + f[seen.count_ones() as usize];
            if candidate < value {
                value = candidate;
            }
        }
        best[set] = value;
    }

    // Walk back from the full set, peeling off a vertex that attains the
    // minimum at each step.
    let mut order = Vec::with_capacity(n);
    let mut set = full;
    while set != 0 {
        let mut rest = set;
        let mut chosen = None;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = set & !(1 << v);
            let seen = adj[v] & prev as u32;
            if connected_only && prev != 0 && seen == 0 {
                continue;
            }
            if best[prev] + f[seen.count_ones() as usize] <= best[set] + COST_TOLERANCE {
                chosen = Some((v, prev));
                break;
            }
        }
        let (v, prev) = chosen.expect("some vertex attains the subset minimum");
        order.push(v);
        set = prev;
    }
    order.reverse();
    Ok(ComponentSolution {
        order,
        nodes_expanded: full as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::brute_force;
    use crate::traversal::evaluate_cost;

    fn tree_cost() -> CostFunction {
        CostFunction::new(vec![2.0, 1.0, 0.0]).unwrap()
    }

    #[test]
    fn p3_optimum() {
        let r = exact_dp(&Graph::path(3), &tree_cost()).unwrap();
        assert_eq!(r.cost, 4.0);
        assert!(r.optimal);
    }

    #[test]
    fn complete_graphs() {
        let r = exact_dp(&Graph::complete(5), &CostFunction::countdown(4)).unwrap();
        assert_eq!(r.cost, 10.0);
    }

    #[test]
    fn witness_cost_matches() {
        let g = Graph::petersen();
        let f = CostFunction::new(vec![5.0, 2.0, 0.5, 0.0]).unwrap();
        let r = exact_dp(&g, &f).unwrap();
        assert_eq!(evaluate_cost(&g, &f, &r.order).unwrap().total_cost, r.cost);
        assert_eq!(r.cost, brute_force(&g, &f).unwrap().cost);
    }

    #[test]
    fn disconnected_graph_decomposes() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let r = exact_dp(&g, &tree_cost()).unwrap();
        // P3 (4) + K2 (2 + 1) + isolated vertex (2)
        assert_eq!(r.cost, 9.0);
        assert_eq!(r.cost, brute_force(&g, &tree_cost()).unwrap().cost);
    }

    #[test]
    fn guard_on_component_size() {
        let err = exact_dp(&Graph::path(25), &tree_cost()).unwrap_err();
        assert!(matches!(err, Error::TooLarge { limit: 24, n: 25, .. }));
    }
}
