/// Clique size guaranteed in every graph on `k` vertices with `edges` edges.
///
/// A graph with no `(r+1)`-clique has at most `(1 - 1/r) k^2 / 2` edges, so
/// exceeding that count forces an `(r+1)`-clique. Returns the largest such
/// `r + 1`, or 1 when no bound applies. Expects `edges <= k(k-1)/2`.
pub fn turan_clique_bound(k: usize, edges: usize) -> usize {
    debug_assert!(edges <= k * k.saturating_sub(1) / 2);
    // edges > (r-1) k^2 / (2r)  <=>  2 r edges > (r-1) k^2
    (1..=k.max(1))
        .filter(|&r| 2 * r * edges > (r - 1) * k * k)
        .map(|r| r + 1)
        .max()
        .unwrap_or(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert_eq!(turan_clique_bound(4, 6), 4);
        assert_eq!(turan_clique_bound(4, 0), 1);
        assert_eq!(turan_clique_bound(6, 13), 4);
        assert_eq!(turan_clique_bound(6, 12), 3);
        assert_eq!(turan_clique_bound(5, 1), 2);
    }

    #[test]
    fn complete_graph_bound_is_exact() {
        for k in 2..20 {
            assert_eq!(turan_clique_bound(k, k * (k - 1) / 2), k);
        }
    }
}
