use nanip_core::gadgets::{tree_gadget_cost, CliqueGadget, TreeGadget};
use nanip_core::solvers::{branch_and_bound, connected_dp, exact_dp, greedy};
use nanip_core::{evaluate_cost, is_connected_traversal, Graph, TieBreak};

#[test]
fn single_tree_gadget_costs_four() {
    let f = tree_gadget_cost();
    for m in 2..=4 {
        let g = TreeGadget::new(m, false).unwrap();
        assert_eq!(exact_dp(&g.graph, &f).unwrap().cost, 4.0, "m = {m}");
    }
}

#[test]
fn doubled_tree_optima() {
    let f = tree_gadget_cost();
    // Small doubled gadgets undercut the hubs-first order: once one copy is
    // done the shared root is free, and for m <= 3 the leaves' parents touch
    // the root, so the second copy needs one hub and one leaf only.
    let expected = [(2, 6.0), (3, 7.0), (4, 8.0), (5, 8.0)];
    for (m, value) in expected {
        let g = TreeGadget::new(m, true).unwrap();
        let bnb = branch_and_bound(&g.graph, &f).unwrap();
        assert_eq!(bnb.cost, value, "m = {m}");
        assert!(bnb.cost <= evaluate_cost(&g.graph, &f, &g.hubs_first_order()).unwrap().total_cost);
        if g.graph.n() <= 24 {
            assert_eq!(exact_dp(&g.graph, &f).unwrap().cost, value, "m = {m}");
        }
    }
}

#[test]
fn connected_optimum_on_doubled_b3() {
    let f = tree_gadget_cost();
    let g = TreeGadget::new(3, true).unwrap();
    let r = connected_dp(&g.graph, &f).unwrap();
    assert!(is_connected_traversal(&g.graph, &r.order).unwrap());
    assert_eq!(r.cost, 7.0);
}

#[test]
fn adversarial_greedy_grows_linearly() {
    let f = tree_gadget_cost();
    let costs: Vec<f64> = (3..=8)
        .map(|m| {
            let g = TreeGadget::new(m, true).unwrap();
            let r = greedy(&g.graph, &f, &TieBreak::Preference(g.adversarial_preference())).unwrap();
            assert!(is_connected_traversal(&g.graph, &r.order).unwrap());
            r.cost
        })
        .collect();
    // Root pays 2 and every interior vertex 1. In each copy two leaves pay 1,
    // after which both hubs and the remaining leaves are free: 2^m + 2.
    let expected: Vec<f64> = (3..=8).map(|m| ((1usize << m) + 2) as f64).collect();
    assert_eq!(costs, expected);
}

#[test]
fn clique_gadget_optima() {
    let k3 = CliqueGadget::new(&Graph::complete(3), 3).unwrap();
    let r = exact_dp(&k3.graph, &k3.cost).unwrap();
    assert_eq!(r.cost, k3.certificate());

    // C5 has no triangle, so M = 6 is out of reach.
    let c5 = CliqueGadget::new(&Graph::cycle(5), 3).unwrap();
    let r = exact_dp(&c5.graph, &c5.cost).unwrap();
    assert!(r.cost > 6.0);
    assert_eq!(branch_and_bound(&c5.graph, &c5.cost).unwrap().cost, r.cost);
}
