use crate::error::{Error, Result};
use crate::ip::model::IpModel;
use crate::ip::program::VarKind;
use crate::ip::{IpSolution, SOLUTION_TOLERANCE};
use crate::traversal::{evaluate_cost, Traversal};

/// Recovers the installation order from an integral solution: vertices by
/// ascending `u`, ties by index.
pub fn decode_solution(model: &IpModel, sol: &IpSolution) -> Result<Traversal> {
    let program = &model.program;
    if sol.values.len() != program.variables.len() {
        return Err(Error::InvalidParameter(format!(
            "solution has {} values, model has {} variables",
            sol.values.len(),
            program.variables.len()
        )));
    }
    for (var, &x) in program.variables.iter().zip(&sol.values) {
        if var.kind == VarKind::Binary && (x - x.round()).abs() > SOLUTION_TOLERANCE {
            return Err(Error::Fractional {
                name: var.name.clone(),
                value: x,
            });
        }
    }
    let violation = program.max_violation(&sol.values);
    if violation > SOLUTION_TOLERANCE {
        return Err(Error::Violated(violation));
    }

    let u = model.order_vars();
    let mut order: Vec<usize> = (0..model.graph.n()).collect();
    order.sort_by(|&a, &b| sol.values[u[a]].total_cmp(&sol.values[u[b]]).then(a.cmp(&b)));
    let traversal = evaluate_cost(&model.graph, &model.cost, &order)?;
    if (traversal.total_cost - sol.objective).abs() > SOLUTION_TOLERANCE {
        return Err(Error::Inconsistent {
            cost: traversal.total_cost,
            objective: sol.objective,
        });
    }
    Ok(traversal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::CliqueGadget;
    use crate::ip::{build_ip, IpOptions};
    use crate::solvers::exact_dp;
    use crate::{CostFunction, Graph};

    fn optimal_solution(model: &IpModel) -> IpSolution {
        let best = exact_dp(&model.graph, &model.cost).unwrap();
        let values = model.assignment_for_order(&best.order).unwrap();
        IpSolution::new(&model.program, values)
    }

    #[test]
    fn k2_decodes_to_cost_one() {
        let cost = CostFunction::new(vec![1.0, 0.0]).unwrap();
        let model = build_ip(&Graph::complete(2), &cost, IpOptions::default()).unwrap();
        let t = decode_solution(&model, &optimal_solution(&model)).unwrap();
        assert_eq!(t.order.len(), 2);
        assert_eq!(t.total_cost, 1.0);
    }

    #[test]
    fn p3_decodes_to_optimum() {
        let cost = CostFunction::new(vec![2.0, 1.0, 0.0]).unwrap();
        let model = build_ip(&Graph::path(3), &cost, IpOptions::default()).unwrap();
        let sol = optimal_solution(&model);
        assert_eq!(sol.objective, 4.0);
        assert_eq!(decode_solution(&model, &sol).unwrap().total_cost, 4.0);
    }

    #[test]
    fn clique_gadget_prefix_is_a_triangle() {
        let gadget = CliqueGadget::new(&Graph::complete(3), 3).unwrap();
        let model = build_ip(&gadget.graph, &gadget.cost, IpOptions::default()).unwrap();
        let t = decode_solution(&model, &optimal_solution(&model)).unwrap();
        assert_eq!(t.total_cost, 6.0);
        let prefix = &t.order[..3];
        for (i, &a) in prefix.iter().enumerate() {
            for &b in &prefix[i + 1..] {
                assert!(gadget.graph.has_edge(a, b));
            }
        }
    }

    #[test]
    fn refuses_fractional_and_inconsistent() {
        let cost = CostFunction::new(vec![1.0, 0.0]).unwrap();
        let model = build_ip(&Graph::complete(2), &cost, IpOptions::default()).unwrap();
        let mut values = optimal_solution(&model).values;
        let e = model.program.variable_index("e_0_1").unwrap();
        values[e] = 0.5;
        let sol = IpSolution::new(&model.program, values);
        assert!(matches!(decode_solution(&model, &sol), Err(Error::Fractional { .. })));

        // Slack in an epigraph variable: feasible, but the objective no
        // longer matches the traversal.
        let mut values = optimal_solution(&model).values;
        values[model.epigraph_vars()[0]] += 1.0;
        let sol = IpSolution::new(&model.program, values);
        assert!(matches!(decode_solution(&model, &sol), Err(Error::Inconsistent { .. })));
    }

    #[test]
    fn refuses_violated_mtz() {
        let cost = CostFunction::new(vec![1.0, 0.0]).unwrap();
        let model = build_ip(&Graph::complete(2), &cost, IpOptions::default()).unwrap();
        let mut values = optimal_solution(&model).values;
        let [a, b] = [model.order_vars()[0], model.order_vars()[1]];
        values.swap(a, b);
        let sol = IpSolution::new(&model.program, values);
        assert!(matches!(decode_solution(&model, &sol), Err(Error::Violated(_))));
    }
}
