use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use nanip_cli::bench::default_bench_cost;
use nanip_cli::generate::parse_cost;
use nanip_cli::{generate, run_algorithm, run_bench, Algorithm, BenchPlan, GenSpec, Status, TieBreakArg};
use nanip_core::ip::{build_ip, emit_lp, IpOptions, SolverCommand, SOLVER_ENV};
use nanip_core::{is_connected_traversal, Instance};

#[derive(Parser)]
#[command(name = "nanip", version, about = "Installation-order solvers for the neighbor-aided network installation problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one instance file.
    Solve(SolveArgs),
    /// Write a generated instance file.
    Gen(GenArgs),
    /// Run an edge-density sweep and write a CSV.
    Bench(BenchArgs),
    /// Write the integer program of an instance in LP format.
    IpEmit(IpEmitArgs),
}

#[derive(Args)]
struct SolverArg {
    /// External MILP command; `{lp}` and `{sol}` are replaced by file paths.
    #[arg(long, env = SOLVER_ENV)]
    solver_cmd: Option<String>,
}

impl SolverArg {
    fn command(&self) -> Option<SolverCommand> {
        self.solver_cmd
            .as_deref()
            .filter(|s| !s.trim().is_empty())
            .map(SolverCommand::new)
    }
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long, value_enum, default_value_t = Algorithm::Dp)]
    algorithm: Algorithm,
    /// Greedy tie-break: lowest, random or pref:v1,v2,...
    #[arg(long, default_value = "lowest")]
    tie_break: TieBreakArg,
    /// Seed for `--tie-break random`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Seconds per solve.
    #[arg(long, default_value_t = 3600.0)]
    time_limit: f64,
    #[command(flatten)]
    solver: SolverArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenType {
    Btree,
    CliqueGadget,
    Random,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long = "type", value_enum)]
    kind: GenType,
    /// Tree levels for `btree`.
    #[arg(long, default_value_t = 3)]
    levels: usize,
    /// Glue two trees at the root (`btree`).
    #[arg(long)]
    doubled: bool,
    /// Base graph for `clique-gadget`: K<n>, C<n>, P<n>, S<n>, petersen,
    /// K<n>-pendant, or an instance file.
    #[arg(long, default_value = "K3")]
    base: String,
    /// Clique size for `clique-gadget`.
    #[arg(long, default_value_t = 3)]
    k: usize,
    #[arg(long, default_value_t = 15)]
    nodes: usize,
    #[arg(long, default_value_t = 30)]
    edges: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cost table for `random`, e.g. "8 4 2 1 0".
    #[arg(long)]
    cost: Option<String>,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 15)]
    nodes: usize,
    #[arg(long, default_value_t = 14)]
    edges_min: usize,
    #[arg(long, default_value_t = 45)]
    edges_max: usize,
    #[arg(long, default_value_t = 1)]
    edges_step: usize,
    #[arg(long, default_value_t = 5)]
    per_density: usize,
    /// Repeat or comma-separate to run several.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Algorithm::Dp, Algorithm::Bnb])]
    algorithm: Vec<Algorithm>,
    /// Seconds per solve.
    #[arg(long, default_value_t = 3600.0)]
    time_limit: f64,
    /// Master seed for the instance set.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    cost: Option<String>,
    /// CSV output; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[command(flatten)]
    solver: SolverArg,
}

#[derive(Args)]
struct IpEmitArgs {
    #[arg(long)]
    instance: PathBuf,
    /// Keep both arc variables per edge with an explicit equality.
    #[arg(long)]
    explicit_antisymmetry: bool,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn seconds(value: f64) -> Result<Duration> {
    Duration::try_from_secs_f64(value)
        .ok()
        .filter(|d| !d.is_zero())
        .with_context(|| format!("time limit must be a positive number of seconds, got {value}"))
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    })
}

fn read_instance(path: &PathBuf) -> Result<Instance> {
    Instance::read(path).with_context(|| format!("cannot read instance {}", path.display()))
}

fn solve(args: SolveArgs) -> Result<()> {
    let instance = read_instance(&args.instance)?;
    let tie_break = args.tie_break.resolve(args.seed);
    let solver = args.solver.command();
    let result = run_algorithm(
        args.algorithm,
        &instance,
        &tie_break,
        Some(seconds(args.time_limit)?),
        solver.as_ref(),
    )
    .with_context(|| format!("{} failed", args.algorithm))?;
    let order: Vec<String> = result.order.iter().map(usize::to_string).collect();
    println!("algorithm: {}", args.algorithm);
    println!("n: {}", instance.graph.n());
    println!("m: {}", instance.graph.m());
    println!("order: {}", order.join(" "));
    println!("cost: {}", result.cost);
    println!("optimal: {}", result.optimal);
    println!("connected: {}", is_connected_traversal(&instance.graph, &result.order)?);
    println!("nodes_expanded: {}", result.nodes_expanded);
    println!("wall_time_s: {:.6}", result.wall_time.as_secs_f64());
    Ok(())
}

fn gen(args: GenArgs) -> Result<()> {
    let spec = match args.kind {
        GenType::Btree => GenSpec::Btree {
            levels: args.levels,
            doubled: args.doubled,
        },
        GenType::CliqueGadget => GenSpec::CliqueGadget {
            base: args.base,
            k: args.k,
        },
        GenType::Random => GenSpec::Random {
            nodes: args.nodes,
            edges: args.edges,
            seed: args.seed,
            cost: match &args.cost {
                Some(text) => parse_cost(text)?,
                None => default_bench_cost(),
            },
        },
    };
    let instance = generate(&spec)?;
    let mut out = output(args.out.as_ref())?;
    out.write_all(instance.to_text().as_bytes())?;
    out.flush()?;
    Ok(())
}

fn bench(args: BenchArgs) -> Result<bool> {
    let plan = BenchPlan {
        nodes: args.nodes,
        edges_min: args.edges_min,
        edges_max: args.edges_max,
        edges_step: args.edges_step,
        per_density: args.per_density,
        algorithms: args.algorithm,
        time_limit: seconds(args.time_limit)?,
        seed: args.seed,
        cost: match &args.cost {
            Some(text) => parse_cost(text)?,
            None => default_bench_cost(),
        },
    };
    plan.validate()?;
    let solver = args.solver.command();
    let report = run_bench(&plan, solver.as_ref(), |r| {
        if let Some(message) = &r.message {
            if r.status == Status::Error {
                eprintln!("{} {}: {message}", r.instance_id, r.algorithm);
            }
        }
        if r.status == Status::Timeout {
            eprintln!("{} {}: timeout", r.instance_id, r.algorithm);
        }
    })?;
    if report.records.iter().any(|r| r.status == Status::Unavailable) {
        eprintln!("ip-external rows marked unavailable: no solver configured ({SOLVER_ENV})");
    }
    let mut out = output(args.out.as_ref())?;
    report.write_csv(&mut out)?;
    out.flush()?;
    for d in &report.disagreements {
        eprintln!("disagreement: {d}");
    }
    Ok(report.disagreements.is_empty())
}

fn ip_emit(args: IpEmitArgs) -> Result<()> {
    let instance = read_instance(&args.instance)?;
    let options = IpOptions {
        explicit_antisymmetry: args.explicit_antisymmetry,
    };
    let model = build_ip(&instance.graph, &instance.cost, options)?;
    let mut out = output(args.out.as_ref())?;
    out.write_all(emit_lp(&model.program).as_bytes())?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve(a) => solve(a).map(|()| true),
        Command::Gen(a) => gen(a).map(|()| true),
        Command::Bench(a) => bench(a),
        Command::IpEmit(a) => ip_emit(a).map(|()| true),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn rejects_bad_time_limit() {
        assert!(seconds(0.0).is_err());
        assert!(seconds(-1.0).is_err());
        assert!(seconds(f64::NAN).is_err());
        assert_eq!(seconds(1.5).unwrap(), Duration::from_millis(1500));
    }
}
