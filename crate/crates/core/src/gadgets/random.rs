use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Connected graph with `n` vertices and exactly `m` edges: a uniformly
/// random labelled spanning tree (decoded from a random Prüfer sequence)
/// plus `m - (n-1)` further edges drawn uniformly without replacement.
pub fn random_connected_graph(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max_edges = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n || m > max_edges {
        return Err(Error::InvalidParameter(format!(
            "a connected graph on {n} vertices needs {} <= m <= {max_edges}, got m = {m}",
            n.saturating_sub(1)
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = random_tree(n, &mut rng);

    let mut in_tree = vec![false; max_edges];
    for &(u, v) in &edges {
        in_tree[pair_index(n, u.min(v), u.max(v))] = true;
    }
    let rest: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !in_tree[pair_index(n, u, v)])
        .collect();
    let extra = m - (n - 1);
    edges.extend(sample(&mut rng, rest.len(), extra).into_iter().map(|i| rest[i]));
    Graph::new(n, &edges)
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    // Row-major index of (u, v), u < v, in the strict upper triangle.
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

fn random_tree(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return Vec::new();
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> =
        (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = leaves.pop_first().expect("a Prüfer sequence always leaves a leaf");
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 {
            leaves.insert(c);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    edges.push((last[0], last[1]));
    edges
}

/// Random convex decreasing table with `len` entries: a non-negative tail
/// value plus non-increasing non-negative savings, all multiples of 1/8 so
/// sums are exact.
pub fn random_convex_cost(len: usize, seed: u64) -> CostFunction {
    let len = len.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut savings: Vec<f64> = (0..len - 1)
        .map(|_| f64::from(rng.random_range(0u32..=32)) / 8.0)
        .collect();
    savings.sort_by(|a, b| b.total_cmp(a));
    let mut table = vec![f64::from(rng.random_range(0u32..=8)) / 8.0; len];
    for i in (0..len - 1).rev() {
        table[i] = table[i + 1] + savings[i];
    }
    CostFunction::new(table).expect("constructed non-negative")
}
