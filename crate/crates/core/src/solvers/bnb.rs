//! Depth-first branch and bound over installation orders.
//!
//! Branches on the next vertex to install, cheapest first, and prunes a node
//! once its lower bound reaches the incumbent. Three reductions keep the tree
//! small without losing exactness (all need `f` decreasing):
//!
//! * a vertex whose current cost is already `min f` is installed at once:
//!   moving it to the front of any completion cannot raise its cost and only
//!   adds credit to the others;
//! * twins (equal open or closed neighbourhoods) are interchangeable, so they
//!   are installed in index order;
//! * a node whose visited set was already reached at no greater cost is cut.

use std::collections::HashMap;

use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::bound::Relaxation;
use crate::solvers::{
    greedy, solve_by_components, ComponentSolution, Deadline, Limits, SolveResult, TieBreak,
    COST_TOLERANCE,
};

pub fn branch_and_bound(graph: &Graph, cost: &CostFunction) -> Result<SolveResult> {
    branch_and_bound_with(graph, cost, &Limits::default())
}

pub fn branch_and_bound_with(
    graph: &Graph,
    cost: &CostFunction,
    limits: &Limits,
) -> Result<SolveResult> {
    for (holds, predicate) in [(cost.is_convex(), "convex"), (cost.is_decreasing(), "decreasing")] {
        if !holds {
            return Err(Error::CostPredicate {
                algorithm: "branch and bound",
                predicate,
            });
        }
    }
    let deadline = Deadline::start(limits, "branch and bound");
    solve_by_components(graph, cost, deadline, true, |sub| {
        Search::new(sub, cost, deadline)?.run()
    })
}

struct Search<'a> {
    graph: &'a Graph,
    relaxation: Relaxation,
    values: Vec<f64>,
    floor: f64,
    /// Next lower-index twin that must be installed first.
    twin_before: Vec<Option<usize>>,
    deadline: Deadline,

    visited: Vec<bool>,
    words: Vec<u64>,
    credit: Vec<usize>,
    order: Vec<usize>,
    accrued: f64,

    best_cost: f64,
    best_order: Vec<usize>,
    seen: HashMap<Box<[u64]>, f64>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(graph: &'a Graph, cost: &CostFunction, deadline: Deadline) -> Result<Self> {
        let n = graph.n();
        let incumbent = greedy(graph, cost, &TieBreak::LowestIndex)?;
        Ok(Self {
            graph,
            relaxation: Relaxation::new(cost),
            values: (0..=graph.max_degree()).map(|r| cost.value(r)).collect(),
            floor: cost.min_value(),
            twin_before: twin_chains(graph),
            deadline,
            visited: vec![false; n],
            words: vec![0; n.div_ceil(64)],
            credit: vec![0; n],
            order: Vec::with_capacity(n),
            accrued: 0.0,
            best_cost: incumbent.cost,
            best_order: incumbent.order,
            seen: HashMap::new(),
            nodes: 0,
        })
    }

    fn run(mut self) -> Result<ComponentSolution> {
        self.expand()?;
        Ok(ComponentSolution {
            order: self.best_order,
            nodes_expanded: self.nodes,
        })
    }

    fn place(&mut self, v: usize) {
        self.accrued += self.values[self.credit[v]];
        self.visited[v] = true;
        self.words[v / 64] |= 1 << (v % 64);
        self.order.push(v);
        for &w in self.graph.neighbors(v) {
            self.credit[w] += 1;
        }
    }

    fn unplace(&mut self) {
        let v = self.order.pop().expect("unplace follows place");
        for &w in self.graph.neighbors(v) {
            self.credit[w] -= 1;
        }
        self.visited[v] = false;
        self.words[v / 64] &= !(1 << (v % 64));
        self.accrued -= self.values[self.credit[v]];
    }

    fn is_free(&self, v: usize) -> bool {
        !self.visited[v] && self.values[self.credit[v]] <= self.floor + COST_TOLERANCE
    }

    fn close_free(&mut self) {
        let mut stack: Vec<usize> = (0..self.graph.n()).filter(|&v| self.is_free(v)).collect();
        while let Some(v) = stack.pop() {
            if !self.is_free(v) {
                continue;
            }
            self.place(v);
            stack.extend(self.graph.neighbors(v).iter().copied().filter(|&w| self.is_free(w)));
        }
    }

    fn expand(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) {
            self.deadline.check()?;
        }
        let depth = self.order.len();
        let accrued_before = self.accrued;
        self.close_free();
        let result = self.expand_closed();
        while self.order.len() > depth {
            self.unplace();
        }
        self.accrued = accrued_before;
        result
    }

    fn expand_closed(&mut self) -> Result<()> {
        let n = self.graph.n();
        if self.order.len() == n {
            if self.accrued < self.best_cost - COST_TOLERANCE {
                self.best_cost = self.accrued;
                self.best_order.clone_from(&self.order);
            }
            return Ok(());
        }
        if let Some(&cheapest) = self.seen.get(self.words.as_slice()) {
            if self.accrued >= cheapest - COST_TOLERANCE {
                return Ok(());
            }
        }
        self.seen
            .insert(self.words.clone().into_boxed_slice(), self.accrued);

        let bound =
            self.accrued + self.relaxation.remaining(self.graph, &self.visited, &self.credit);
        if bound >= self.best_cost - COST_TOLERANCE {
            return Ok(());
        }

        let mut children: Vec<usize> = (0..n)
            .filter(|&v| !self.visited[v] && self.twin_before[v].is_none_or(|t| self.visited[t]))
            .collect();
        children.sort_by(|&a, &b| {
            self.values[self.credit[a]]
                .total_cmp(&self.values[self.credit[b]])
                .then(a.cmp(&b))
        });
        for v in children {
            if self.accrued + self.values[self.credit[v]] >= self.best_cost - COST_TOLERANCE {
                // Children are sorted by immediate cost.
                break;
            }
            self.place(v);
            let outcome = self.expand();
            self.unplace();
            outcome?;
        }
        Ok(())
    }
}

/// For each vertex, the previous vertex (by index) with the same open or
/// closed neighbourhood, if any.
fn twin_chains(graph: &Graph) -> Vec<Option<usize>> {
    let mut open: HashMap<&[usize], usize> = HashMap::new();
    let mut closed: HashMap<Vec<usize>, usize> = HashMap::new();
    (0..graph.n())
        .map(|v| {
            let nbrs = graph.neighbors(v);
            let mut key = nbrs.to_vec();
            let pos = key.binary_search(&v).unwrap_err();
            key.insert(pos, v);
            let prev_open = open.insert(nbrs, v);
            let prev_closed = closed.insert(key, v);
            // Isolated vertices and other degenerate cases only ever match
            // through one of the two maps.
            prev_open.or(prev_closed)
        })
        .collect()
}
