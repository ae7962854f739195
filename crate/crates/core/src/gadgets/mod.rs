//! Instances from the hardness and lower-bound constructions, plus seeded
//! random instances for benchmarking.

mod clique;
mod normalize;
mod random;
mod tree;
mod turan;

pub use clique::CliqueGadget;
pub use normalize::{normalize_traversal, normalize_traversal_steps};
pub use random::{random_connected_graph, random_convex_cost};
pub use tree::{build_tree_gadget, tree_gadget_cost, TreeGadget};
pub use turan::turan_clique_bound;
