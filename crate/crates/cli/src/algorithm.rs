use std::str::FromStr;
use std::time::{Duration, Instant};

use nanip_core::ip::{build_ip, decode_solution, solve_external_with, IpOptions, SolverCommand};
use nanip_core::solvers::{
    branch_and_bound_with, brute_force, connected_dp_with, exact_dp_with, greedy,
};
use nanip_core::{Instance, Limits, SolveResult, TieBreak};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Algorithm {
    Greedy,
    Brute,
    Dp,
    ConnectedDp,
    Bnb,
    IpExternal,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Greedy => "greedy",
            Algorithm::Brute => "brute",
            Algorithm::Dp => "dp",
            Algorithm::ConnectedDp => "connected-dp",
            Algorithm::Bnb => "bnb",
            Algorithm::IpExternal => "ip-external",
        }
    }

    /// Solves the unrestricted problem to optimality when it finishes.
    /// `connected-dp` is exact only over connected orders.
    pub fn is_exact(self) -> bool {
        matches!(
            self,
            Algorithm::Brute | Algorithm::Dp | Algorithm::Bnb | Algorithm::IpExternal
        )
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// `lowest`, `random` or an explicit preference list `pref:3,1,2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TieBreakArg {
    Lowest,
    Random,
    Preference(Vec<usize>),
}

impl TieBreakArg {
    pub fn resolve(&self, seed: u64) -> TieBreak {
        match self {
            TieBreakArg::Lowest => TieBreak::LowestIndex,
            TieBreakArg::Random => TieBreak::SeededRandom(seed),
            TieBreakArg::Preference(list) => TieBreak::Preference(list.clone()),
        }
    }
}

impl FromStr for TieBreakArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lowest" => Ok(TieBreakArg::Lowest),
            "random" => Ok(TieBreakArg::Random),
            _ => {
                let list = s
                    .strip_prefix("pref:")
                    .ok_or_else(|| format!("unknown tie-break {s:?} (lowest, random, pref:v1,v2,..)"))?;
                list.split(',')
                    .map(|v| v.trim().parse::<usize>().map_err(|e| format!("{v:?}: {e}")))
                    .collect::<Result<_, _>>()
                    .map(TieBreakArg::Preference)
            }
        }
    }
}

/// Runs one algorithm on `instance`. `solver` is only consulted for
/// `ip-external`; `None` there means no solver is configured.
pub fn run_algorithm(
    algorithm: Algorithm,
    instance: &Instance,
    tie_break: &TieBreak,
    time_limit: Option<Duration>,
    solver: Option<&SolverCommand>,
) -> nanip_core::Result<SolveResult> {
    let (graph, cost) = (&instance.graph, &instance.cost);
    let limits = Limits { time_limit };
    match algorithm {
        Algorithm::Greedy => greedy(graph, cost, tie_break),
        Algorithm::Brute => brute_force(graph, cost),
        Algorithm::Dp => exact_dp_with(graph, cost, &limits),
        Algorithm::ConnectedDp => connected_dp_with(graph, cost, &limits),
        Algorithm::Bnb => branch_and_bound_with(graph, cost, &limits),
        Algorithm::IpExternal => {
            let solver = solver.ok_or_else(|| {
                nanip_core::Error::SolverUnavailable(format!(
                    "set {} or pass --solver-cmd",
                    nanip_core::ip::SOLVER_ENV
                ))
            })?;
            let model = build_ip(graph, cost, IpOptions::default())?;
            let start = Instant::now();
            let sol = solve_external_with(&model, solver, time_limit)?;
            let wall_time = start.elapsed();
            let traversal = decode_solution(&model, &sol)?;
            Ok(SolveResult {
                order: traversal.order,
                cost: traversal.total_cost,
                optimal: true,
                nodes_expanded: 0,
                wall_time,
            })
        }
    }
}
