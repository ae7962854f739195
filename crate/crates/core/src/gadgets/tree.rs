//! The binary-tree gadget `B(m)` that separates connected from unrestricted
//! installation orders.
//!
//! `B(m)` is a complete binary tree with `m` levels whose `2^(m-1)` leaves
//! are all joined to two extra hub vertices `u` and `v`. The doubled variant
//! glues two copies at the tree root.
//!
//! Labels: the first tree is stored in heap order (root `0`, children of `i`
//! at `2i+1` and `2i+2`). In the doubled variant the second tree's non-root
//! vertices follow, also in heap order, then the hubs `u, v` of the first
//! copy and `u, v` of the second.

use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `f(0) = 2, f(1) = 1, f(i) = 0` for `i >= 2`.
pub fn tree_gadget_cost() -> CostFunction {
    CostFunction::new(vec![2.0, 1.0, 0.0]).expect("static table is valid")
}

pub fn build_tree_gadget(levels: usize, doubled: bool) -> Result<Graph> {
    Ok(TreeGadget::new(levels, doubled)?.graph)
}

#[derive(Clone, Debug)]
pub struct TreeGadget {
    pub levels: usize,
    pub doubled: bool,
    pub graph: Graph,
}

impl TreeGadget {
    pub fn new(levels: usize, doubled: bool) -> Result<Self> {
        if !(2..=24).contains(&levels) {
            return Err(Error::InvalidParameter(format!(
                "tree gadget needs 2 <= m <= 24 levels, got {levels}"
            )));
        }
        let heap = (1usize << levels) - 1;
        let first_leaf = (1usize << (levels - 1)) - 1;
        let copies = if doubled { 2 } else { 1 };
        let tree_size = copies * heap - (copies - 1);
        let mut edges = Vec::new();
        for copy in 0..copies {
            let label = |h: usize| tree_label(levels, copy, h);
            for h in 1..heap {
                edges.push(((label((h - 1) / 2)), label(h)));
            }
            let hub_u = tree_size + 2 * copy;
            for leaf in first_leaf..heap {
                edges.push((label(leaf), hub_u));
                edges.push((label(leaf), hub_u + 1));
            }
        }
        let graph = Graph::new(tree_size + 2 * copies, &edges)?;
        Ok(Self {
            levels,
            doubled,
            graph,
        })
    }

    fn copies(&self) -> usize {
        if self.doubled {
            2
        } else {
            1
        }
    }

    fn tree_size(&self) -> usize {
        self.graph.n() - 2 * self.copies()
    }

    /// The hub vertices, `u, v` per copy.
    pub fn hubs(&self) -> Vec<usize> {
        (self.tree_size()..self.graph.n()).collect()
    }

    /// Depth in the tree (root 0), or `None` for a hub.
    pub fn depth(&self, v: usize) -> Option<usize> {
        let heap = (1usize << self.levels) - 1;
        let h = if v < heap {
            v
        } else if v < self.tree_size() {
            v - heap + 1
        } else {
            return None;
        };
        Some((h + 1).ilog2() as usize)
    }

    /// Tree vertices that are not leaves.
    pub fn interior(&self) -> Vec<usize> {
        (0..self.tree_size())
            .filter(|&v| self.depth(v) != Some(self.levels - 1))
            .collect()
    }

    /// Hubs first, then the tree bottom-up. Costs `f(0)` per hub and nothing
    /// else: each leaf sees both hubs and every interior vertex sees its
    /// children.
    pub fn hubs_first_order(&self) -> Vec<usize> {
        let mut tree: Vec<usize> = (0..self.tree_size()).collect();
        tree.sort_by_key(|&v| std::cmp::Reverse(self.depth(v)));
        let mut order = self.hubs();
        order.extend(tree);
        order
    }

    /// Greedy preference that descends the tree level by level before
    /// touching the hubs, which makes greedy pay for almost every tree
    /// vertex.
    pub fn adversarial_preference(&self) -> Vec<usize> {
        let mut tree: Vec<usize> = (0..self.tree_size()).collect();
        tree.sort_by_key(|&v| (self.depth(v), v));
        tree.extend(self.hubs());
        tree
    }
}

fn tree_label(levels: usize, copy: usize, h: usize) -> usize {
    if copy == 0 || h == 0 {
        h
    } else {
        (1usize << levels) - 2 + h
    }
}
