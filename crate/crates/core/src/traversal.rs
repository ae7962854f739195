//! Evaluation of an installation order.

use crate::cost::CostFunction;
use crate::error::Result;
use crate::graph::Graph;

/// An installation order together with the credit each vertex received and
/// the resulting total cost.
#[derive(Clone, Debug, PartialEq)]
pub struct Traversal {
    pub order: Vec<usize>,
    /// `credits[t]` is the number of neighbours of `order[t]` placed before it.
    pub credits: Vec<usize>,
    pub total_cost: f64,
}

/// Total installation cost of `order`: the sum of `f` over the credit vector.
pub fn evaluate_cost(graph: &Graph, cost: &CostFunction, order: &[usize]) -> Result<Traversal> {
    let credits = graph.credit_vector(order)?;
    let total_cost = credits.iter().map(|&r| cost.value(r)).sum();
    Ok(Traversal {
        order: order.to_vec(),
        credits,
        total_cost,
    })
}

/// True when every prefix of `order` induces a connected subgraph.
pub fn is_connected_traversal(graph: &Graph, order: &[usize]) -> Result<bool> {
    let credits = graph.credit_vector(order)?;
    Ok(credits.iter().skip(1).all(|&r| r > 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_costs_four() {
        let f = CostFunction::new(vec![2.0, 1.0, 0.0]).unwrap();
        let t = evaluate_cost(&Graph::path(3), &f, &[0, 1, 2]).unwrap();
        assert_eq!(t.credits, vec![0, 1, 1]);
        assert_eq!(t.total_cost, 4.0);
    }

    #[test]
    fn k3_costs_three() {
        let f = CostFunction::new(vec![2.0, 1.0, 0.0]).unwrap();
        let t = evaluate_cost(&Graph::complete(3), &f, &[1, 2, 0]).unwrap();
        assert_eq!(t.total_cost, 3.0);
    }

    #[test]
    fn connected_prefixes() {
        let p3 = Graph::path(3);
        assert!(is_connected_traversal(&p3, &[0, 1, 2]).unwrap());
        assert!(is_connected_traversal(&p3, &[1, 0, 2]).unwrap());
        assert!(!is_connected_traversal(&p3, &[0, 2, 1]).unwrap());
    }
}
