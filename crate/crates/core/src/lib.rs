//! Solvers, integer-programming model and gadget constructions for the
//! neighbor-aided network installation problem (NANIP): order the vertices of
//! a graph so that the total installation cost is minimal, where installing
//! a vertex costs `f(r)` and `r` counts its neighbours installed earlier.

pub mod cost;
pub mod error;
pub mod gadgets;
pub mod graph;
pub mod instance;
pub mod ip;
pub mod solvers;
pub mod traversal;

pub use cost::CostFunction;
pub use error::{Error, Result};
pub use graph::Graph;
pub use instance::Instance;
pub use solvers::{Limits, SolveResult, TieBreak};
pub use traversal::{evaluate_cost, is_connected_traversal, Traversal};
