use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// CLIQUE reduction: the base graph plus `k` pairwise non-adjacent vertices
/// joined to every base vertex, with cost `f_k(i) = max(k - i, 0)`.
///
/// The gadget can be installed for `M = k(k+1)/2` exactly when the base
/// graph has a `k`-clique. Base vertices keep their labels; the added
/// vertices are `n..n+k`.
#[derive(Clone, Debug)]
pub struct CliqueGadget {
    pub base: Graph,
    pub k: usize,
    pub graph: Graph,
    pub cost: CostFunction,
}

impl CliqueGadget {
    pub fn new(base: &Graph, k: usize) -> Result<Self> {
        let n = base.n();
        if k == 0 || k > n {
            return Err(Error::InvalidParameter(format!(
                "clique gadget needs 1 <= k <= {n}, got k = {k}"
            )));
        }
        let mut edges = base.edges().to_vec();
        for u in n..n + k {
            edges.extend((0..n).map(|v| (v, u)));
        }
        Ok(Self {
            base: base.clone(),
            k,
            graph: Graph::new(n + k, &edges)?,
            cost: CostFunction::countdown(k),
        })
    }

    /// `M = k(k+1)/2`, the cost that certifies a `k`-clique.
    pub fn certificate(&self) -> f64 {
        (self.k * (self.k + 1) / 2) as f64
    }

    pub fn is_added(&self, v: usize) -> bool {
        v >= self.base.n()
    }

    pub fn added(&self) -> std::ops::Range<usize> {
        self.base.n()..self.base.n() + self.k
    }

    /// The order `clique, added vertices, rest of base` for a `k`-clique of
    /// the base graph.
    pub fn order_from_clique(&self, clique: &[usize]) -> Vec<usize> {
        let mut order = clique.to_vec();
        order.extend(self.added());
        order.extend((0..self.base.n()).filter(|v| !clique.contains(v)));
        order
    }
}
