use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cost::CostFunction;
use crate::error::Result;
use crate::graph::Graph;
use crate::solvers::{finish, Deadline, Limits, SolveResult, COST_TOLERANCE};

/// How the greedy solver picks among equally cheap vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TieBreak {
    LowestIndex,
    /// Uniform choice among the tied vertices from a seeded stream.
    SeededRandom(u64),
    /// Earlier in the list wins; unlisted vertices rank after listed ones,
    /// by index.
    Preference(Vec<usize>),
}

/// Installs, at every step, an uninstalled vertex whose current cost is
/// minimal.
pub fn greedy(graph: &Graph, cost: &CostFunction, policy: &TieBreak) -> Result<SolveResult> {
    let deadline = Deadline::start(&Limits::default(), "greedy");
    let n = graph.n();
    let rank: Vec<usize> = match policy {
        TieBreak::Preference(list) => {
            let mut rank: Vec<usize> = (0..n).map(|v| list.len() + v).collect();
            for (i, &v) in list.iter().enumerate().rev() {
                if v < n {
                    rank[v] = i;
                }
            }
            rank
        }
        _ => (0..n).collect(),
    };
    let mut rng = match policy {
        TieBreak::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };

    let mut placed = vec![false; n];
    let mut credit = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut tied = Vec::with_capacity(n);
    for _ in 0..n {
        let cheapest = (0..n)
            .filter(|&v| !placed[v])
            .map(|v| cost.value(credit[v]))
            .fold(f64::INFINITY, f64::min);
        tied.clear();
        tied.extend(
            (0..n).filter(|&v| !placed[v] && cost.value(credit[v]) <= cheapest + COST_TOLERANCE),
        );
        let v = match rng.as_mut() {
            Some(rng) => tied[rng.random_range(0..tied.len())],
            None => *tied.iter().min_by_key(|&&v| rank[v]).expect("a vertex remains"),
        };
        placed[v] = true;
        order.push(v);
        for &w in graph.neighbors(v) {
            credit[w] += 1;
        }
    }
    finish(graph, cost, order, false, n as u64, deadline)
}
