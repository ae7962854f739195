//! Library side of the `nanip` command: algorithm dispatch, instance
//! generation and the benchmark harness.

pub mod algorithm;
pub mod bench;
pub mod generate;

pub use algorithm::{run_algorithm, Algorithm, TieBreakArg};
pub use bench::{run_bench, BenchPlan, BenchRecord, BenchReport, Status};
pub use generate::{generate, GenSpec};
