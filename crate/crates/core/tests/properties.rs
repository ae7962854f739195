use nanip_core::gadgets::{
    normalize_traversal, random_connected_graph, random_convex_cost, turan_clique_bound,
    CliqueGadget,
};
use nanip_core::solvers::{
    branch_and_bound, brute_force, connected_dp, exact_dp, greedy, lower_bound, COST_TOLERANCE,
};
use nanip_core::{evaluate_cost, is_connected_traversal, CostFunction, Graph, TieBreak};
use proptest::prelude::*;

fn connected_instance(max_n: usize) -> impl Strategy<Value = (Graph, CostFunction)> {
    (2..=max_n, any::<u64>(), 0.0..1.0f64).prop_map(|(n, seed, density)| {
        let lo = n - 1;
        let hi = n * (n - 1) / 2;
        let m = lo + ((hi - lo) as f64 * density).round() as usize;
        let graph = random_connected_graph(n, m, seed).unwrap();
        let cost = random_convex_cost(graph.max_degree() + 1, seed ^ 0x9e37);
        (graph, cost)
    })
}

fn with_order(max_n: usize) -> impl Strategy<Value = (Graph, CostFunction, Vec<usize>)> {
    connected_instance(max_n).prop_flat_map(|(g, c)| {
        let order: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(c), Just(order).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn exact_solvers_agree((graph, cost) in connected_instance(8)) {
        let dp = exact_dp(&graph, &cost).unwrap();
        let brute = brute_force(&graph, &cost).unwrap();
        let bnb = branch_and_bound(&graph, &cost).unwrap();
        prop_assert!((dp.cost - brute.cost).abs() <= COST_TOLERANCE);
        prop_assert!((bnb.cost - brute.cost).abs() <= COST_TOLERANCE);
        prop_assert!(dp.optimal && brute.optimal && bnb.optimal);
    }

    #[test]
    fn heuristics_and_bounds_bracket_the_optimum((graph, cost) in connected_instance(9), seed: u64) {
        let opt = exact_dp(&graph, &cost).unwrap().cost;
        let g = greedy(&graph, &cost, &TieBreak::SeededRandom(seed)).unwrap();
        prop_assert!(g.cost >= opt - COST_TOLERANCE);
        prop_assert!(lower_bound(&graph, &cost, &[], 0.0) <= opt + COST_TOLERANCE);
        let connected = connected_dp(&graph, &cost).unwrap();
        prop_assert!(connected.cost >= opt - COST_TOLERANCE);
        prop_assert!(is_connected_traversal(&graph, &connected.order).unwrap());
    }

    #[test]
    fn credits_sum_to_edge_count((graph, cost, order) in with_order(12)) {
        let t = evaluate_cost(&graph, &cost, &order).unwrap();
        prop_assert_eq!(t.credits.iter().sum::<usize>(), graph.m());
    }

    #[test]
    fn linear_costs_are_order_independent(
        (graph, _, order) in with_order(12),
        a in -1.0..0.0f64,
        b in 1.0..3.0f64,
    ) {
        let len = graph.max_degree() + 1;
        let b = b - a * len as f64;
        let cost = CostFunction::linear(a, b, len).unwrap();
        let t = evaluate_cost(&graph, &cost, &order).unwrap();
        let expected = a * graph.m() as f64 + b * graph.n() as f64;
        prop_assert!((t.total_cost - expected).abs() <= 1e-9);
    }

    #[test]
    fn normalization_is_cost_monotone(order in Just((0..7).collect::<Vec<usize>>()).prop_shuffle()) {
        let base = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
        let gadget = CliqueGadget::new(&base, 3).unwrap();
        let normal = normalize_traversal(&gadget, &order).unwrap();
        let before = evaluate_cost(&gadget.graph, &gadget.cost, &order).unwrap().total_cost;
        let after = evaluate_cost(&gadget.graph, &gadget.cost, &normal).unwrap().total_cost;
        prop_assert!(after <= before);
    }
}

#[test]
fn components_solve_independently() {
    let graph = Graph::new(7, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 3)]).unwrap();
    let cost = CostFunction::new(vec![2.0, 1.0, 0.0]).unwrap();
    // P3 costs 4, K3 costs 3, the isolated vertex 2.
    assert_eq!(exact_dp(&graph, &cost).unwrap().cost, 9.0);
    assert_eq!(branch_and_bound(&graph, &cost).unwrap().cost, 9.0);
    assert_eq!(brute_force(&graph, &cost).unwrap().cost, 9.0);
}

#[test]
fn turan_bound_is_sound_on_all_six_vertex_graphs() {
    let pairs: Vec<(usize, usize)> = (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
    for mask in 0u32..1 << pairs.len() {
        let mut adj = [0u32; 6];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let clique_number = (1u32..1 << 6)
            .filter(|&s| (0..6).all(|v| s >> v & 1 == 0 || (adj[v] | 1 << v) & s == s))
            .map(u32::count_ones)
            .max()
            .unwrap() as usize;
        assert!(
            clique_number >= turan_clique_bound(6, mask.count_ones() as usize),
            "mask {mask:b}"
        );
    }
}
