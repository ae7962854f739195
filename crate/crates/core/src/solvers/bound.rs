//! Lower bound on the cost of completing a partial installation.
//!
//! Every edge not yet paid out (crossing into, or lying inside, the
//! unvisited set) will credit exactly one unvisited endpoint. An unvisited
//! vertex `v` already holds `c_v` credits from visited neighbours and can
//! gain at most one per unvisited neighbour. In each connected component of
//! the unvisited subgraph the first vertex installed gains nothing from
//! inside the component.
//!
//! Relaxing the order away and keeping only those counting constraints, a
//! convex `f` is minimised by handing out the internal credits where the
//! marginal saving `f(i) - f(i+1)` is largest, which is the balanced
//! (water-filling) allocation of the piecewise-linear extension of `f`.

use std::collections::VecDeque;

use crate::cost::CostFunction;
use crate::graph::Graph;

/// `accrued` plus a relaxed minimum of the cost of installing every vertex
/// not in `visited`. Never exceeds the true cheapest completion when `cost`
/// is convex and decreasing.
pub fn lower_bound(graph: &Graph, cost: &CostFunction, visited: &[usize], accrued: f64) -> f64 {
    debug_assert!(cost.is_convex_decreasing());
    let mut flags = vec![false; graph.n()];
    for &v in visited {
        flags[v] = true;
    }
    let credit: Vec<usize> = (0..graph.n())
        .map(|v| graph.neighbors(v).iter().filter(|&&w| flags[w]).count())
        .collect();
    accrued + Relaxation::new(cost).remaining(graph, &flags, &credit)
}

/// Precomputed marginal savings of a cost table.
pub(crate) struct Relaxation {
    values: Vec<f64>,
    /// `saving[i] = f(i) - f(i+1)`, non-increasing for convex `f`.
    saving: Vec<f64>,
}

impl Relaxation {
    pub(crate) fn new(cost: &CostFunction) -> Self {
        let table = cost.table();
        Self {
            values: table.to_vec(),
            saving: table.windows(2).map(|w| w[0] - w[1]).collect(),
        }
    }

    fn value(&self, credits: usize) -> f64 {
        self.values[credits.min(self.values.len() - 1)]
    }

    /// Bound on the cost still to be paid given which vertices are visited
    /// and how many visited neighbours each vertex has.
    pub(crate) fn remaining(&self, graph: &Graph, visited: &[bool], credit: &[usize]) -> f64 {
        let n = graph.n();
        let levels = self.saving.len();
        let mut seen = visited.to_vec();
        let mut total = 0.0;
        let mut comp = Vec::new();
        let mut hist = vec![0usize; levels];
        let mut queue = VecDeque::new();

        for start in 0..n {
            if seen[start] {
                continue;
            }
            comp.clear();
            seen[start] = true;
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                comp.push(v);
                for &w in graph.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }

            hist.iter_mut().for_each(|h| *h = 0);
            let mut base = 0.0;
            let mut twice_internal = 0;
            for &v in &comp {
                let inside = graph.degree(v) - credit[v];
                twice_internal += inside;
                base += self.value(credit[v]);
                let top = (credit[v] + inside).min(levels);
                if credit[v] < top {
                    hist[credit[v]..top].iter_mut().for_each(|h| *h += 1);
                }
            }
            let internal = twice_internal / 2;

            let mut best = f64::INFINITY;
            for &w in &comp {
                let inside = graph.degree(w) - credit[w];
                let lo = credit[w];
                let hi = (credit[w] + inside).min(levels);
                // Take the `internal` largest savings, skipping w's own.
                let mut left = internal;
                let mut saved = 0.0;
                for (level, &count) in hist.iter().enumerate() {
                    if left == 0 || self.saving[level] <= 0.0 {
                        break;
                    }
                    let own = usize::from(level >= lo && level < hi);
                    let take = (count - own).min(left);
                    saved += take as f64 * self.saving[level];
                    left -= take;
                }
                best = best.min(base - saved);
            }
            total += best;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::exact_dp;

    #[allow(clippy::needless_range_loop)]
    fn all_orders_completion(graph: &Graph, cost: &CostFunction, visited: u32) -> f64 {
        // Cheapest completion from `visited`, by DP over supersets.
        let n = graph.n();
        let full = (1u32 << n) - 1;
        let adj: Vec<u32> = (0..n)
            .map(|v| graph.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
            .collect();
        let mut best = vec![f64::INFINITY; 1 << n];
        best[full as usize] = 0.0;
        for set in (0..full).rev() {
            if set & visited != visited {
                continue;
            }
            for v in 0..n {
                if set & 1 << v == 0 {
                    let next = set | 1 << v;
                    let c = cost.value((adj[v] & set).count_ones() as usize) + best[next as usize];
                    if c < best[set as usize] {
                        best[set as usize] = c;
                    }
                }
            }
        }
        best[visited as usize]
    }

    #[test]
    fn complete_graph_root_bound_is_tight() {
        let g = Graph::complete(4);
        let f = CostFunction::countdown(3);
        assert_eq!(lower_bound(&g, &f, &[], 0.0), 6.0);
        assert_eq!(exact_dp(&g, &f).unwrap().cost, 6.0);
    }

    #[test]
    fn everything_visited_returns_accrued() {
        let g = Graph::petersen();
        let f = CostFunction::countdown(3);
        let all: Vec<usize> = (0..10).collect();
        assert_eq!(lower_bound(&g, &f, &all, 7.25), 7.25);
    }

    #[test]
    fn star_bound_below_optimum() {
        let g = Graph::star(3);
        let f = CostFunction::new(vec![2.0, 1.0, 0.0]).unwrap();
        let bound = lower_bound(&g, &f, &[], 0.0);
        assert!(bound <= 5.0);
        assert_eq!(exact_dp(&g, &f).unwrap().cost, 5.0);
    }

    #[test]
    fn admissible_on_every_prefix_set() {
        let graphs = [
            Graph::petersen().induced(&[0, 1, 2, 3, 4, 5, 7]),
            Graph::star(5),
            Graph::cycle(6),
            Graph::new(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 3)])
                .unwrap(),
            Graph::new(6, &[(0, 1), (2, 3), (3, 4)]).unwrap(),
        ];
        let costs = [
            CostFunction::new(vec![2.0, 1.0, 0.0]).unwrap(),
            CostFunction::new(vec![8.0, 4.0, 2.0, 1.0, 0.0]).unwrap(),
            CostFunction::new(vec![3.0, 1.0, 0.5, 0.25]).unwrap(),
            CostFunction::countdown(3),
        ];
        for g in &graphs {
            for f in &costs {
                for set in 0u32..1 << g.n() {
                    let visited: Vec<usize> = (0..g.n()).filter(|&v| set & 1 << v != 0).collect();
                    let bound = lower_bound(g, f, &visited, 0.0);
                    let exact = all_orders_completion(g, f, set);
                    assert!(bound <= exact + 1e-9, "set {set:b}: bound {bound} > {exact}");
                }
            }
        }
    }
}
