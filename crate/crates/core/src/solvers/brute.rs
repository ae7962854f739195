use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{finish, Deadline, Limits, SolveResult};

pub const BRUTE_FORCE_LIMIT: usize = 10;

/// Enumerates all `n!` orders (Heap's algorithm) and keeps the first
/// minimiser. Deliberately does no decomposition or pruning so it can serve
/// as an oracle for the other solvers.
pub fn brute_force(graph: &Graph, cost: &CostFunction) -> Result<SolveResult> {
    let n = graph.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            algorithm: "brute force",
            limit: BRUTE_FORCE_LIMIT,
            n,
        });
    }
    let deadline = Deadline::start(&Limits::default(), "brute force");
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best_order = perm.clone();
    let mut best = order_cost(graph, cost, &perm);
    let mut visited = 1u64;

    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visited += 1;
            let value = order_cost(graph, cost, &perm);
            if value < best {
                best = value;
                best_order.copy_from_slice(&perm);
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    finish(graph, cost, best_order, true, visited, deadline)
}

fn order_cost(graph: &Graph, cost: &CostFunction, order: &[usize]) -> f64 {
    let mut position = [usize::MAX; BRUTE_FORCE_LIMIT];
    for (t, &v) in order.iter().enumerate() {
        position[v] = t;
    }
    order
        .iter()
        .enumerate()
        .map(|(t, &v)| {
            let credit = graph
                .neighbors(v)
                .iter()
                .filter(|&&w| position[w] < t)
                .count();
            cost.value(credit)
        })
        .sum()
}
