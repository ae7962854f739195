//! Edge-density sweep: random connected graphs on a fixed vertex count,
//! several instances per edge count, each solved by every selected
//! algorithm.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Duration;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nanip_core::gadgets::random_connected_graph;
use nanip_core::ip::SolverCommand;
use nanip_core::solvers::COST_TOLERANCE;
use nanip_core::{evaluate_cost, CostFunction, Error, Instance, TieBreak};

use crate::algorithm::{run_algorithm, Algorithm};

pub const CSV_COLUMNS: [&str; 10] = [
    "instance_id",
    "n",
    "m",
    "seed",
    "algorithm",
    "objective",
    "optimal",
    "nodes_expanded",
    "wall_time_s",
    "status",
];

/// Cost table used when a plan does not give one.
pub fn default_bench_cost() -> CostFunction {
    CostFunction::new(vec![8.0, 4.0, 2.0, 1.0, 0.0]).expect("static table is valid")
}

#[derive(Clone, Debug)]
pub struct BenchPlan {
    pub nodes: usize,
    pub edges_min: usize,
    pub edges_max: usize,
    pub edges_step: usize,
    pub per_density: usize,
    pub algorithms: Vec<Algorithm>,
    pub time_limit: Duration,
    pub seed: u64,
    pub cost: CostFunction,
}

impl BenchPlan {
    pub fn validate(&self) -> nanip_core::Result<()> {
        let n = self.nodes;
        let max_edges = n * n.saturating_sub(1) / 2;
        let invalid = |msg: String| Err(Error::InvalidParameter(msg));
        if n == 0 {
            return invalid("bench needs at least one vertex".into());
        }
        if self.edges_min < n - 1 || self.edges_max > max_edges || self.edges_min > self.edges_max {
            return invalid(format!(
                "edge range {}..={} must lie within {}..={} for {n} vertices",
                self.edges_min,
                self.edges_max,
                n - 1,
                max_edges
            ));
        }
        if self.edges_step == 0 {
            return invalid("edge step must be positive".into());
        }
        if self.per_density == 0 {
            return invalid("need at least one instance per density".into());
        }
        if self.algorithms.is_empty() {
            return invalid("no algorithms selected".into());
        }
        if self.time_limit.is_zero() {
            return invalid("time limit must be positive".into());
        }
        Ok(())
    }

    pub fn densities(&self) -> impl Iterator<Item = usize> {
        (self.edges_min..=self.edges_max).step_by(self.edges_step.max(1))
    }

    /// The generated instances in (density, index) order with their ids and
    /// seeds. Depends only on the plan.
    pub fn instances(&self) -> nanip_core::Result<Vec<(String, u64, Instance)>> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut out = Vec::new();
        for m in self.densities() {
            for i in 0..self.per_density {
                let seed = rng.next_u64();
                let graph = random_connected_graph(self.nodes, m, seed)?;
                let id = format!("n{}-m{m}-{i}", self.nodes);
                out.push((id, seed, Instance::new(graph, self.cost.clone())));
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Timeout,
    Unavailable,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Timeout => "timeout",
            Status::Unavailable => "unavailable",
            Status::Error => "error",
        }
    }
}

#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub instance_id: String,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub algorithm: Algorithm,
    /// `None` unless the solve completed.
    pub objective: Option<f64>,
    pub optimal: bool,
    pub nodes_expanded: u64,
    pub wall_time: Duration,
    pub status: Status,
    /// Error text for `Error` and `Unavailable` rows.
    pub message: Option<String>,
}

/// Per (density, algorithm) means over completed solves.
#[derive(Clone, Debug)]
pub struct Summary {
    pub m: usize,
    pub algorithm: Algorithm,
    pub completed: usize,
    pub timeouts: usize,
    pub mean_objective: Option<f64>,
    pub mean_nodes: Option<f64>,
    pub mean_wall_time: Option<f64>,
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub summaries: Vec<Summary>,
    /// Instances where completed exact algorithms disagree.
    pub disagreements: Vec<String>,
}

impl BenchReport {
    pub fn max_wall_time(&self) -> Duration {
        self.records.iter().map(|r| r.wall_time).max().unwrap_or_default()
    }

    /// Writes the header, one row per record, then one summary row per
    /// (density, algorithm). Summary rows have instance id `mean`, an empty
    /// seed and a status counting completed solves and timeouts.
    pub fn write_csv<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(CSV_COLUMNS)?;
        for r in &self.records {
            w.write_record([
                r.instance_id.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.seed.to_string(),
                r.algorithm.to_string(),
                r.objective.map(|x| x.to_string()).unwrap_or_default(),
                r.optimal.to_string(),
                r.nodes_expanded.to_string(),
                format!("{:.6}", r.wall_time.as_secs_f64()),
                r.status.as_str().to_string(),
            ])?;
        }
        let n = self.records.first().map(|r| r.n).unwrap_or(0);
        let fmt = |x: Option<f64>| x.map(|x| x.to_string()).unwrap_or_default();
        for s in &self.summaries {
            let status = if s.timeouts > 0 {
                format!("mean completed={} timeouts={}", s.completed, s.timeouts)
            } else {
                format!("mean completed={}", s.completed)
            };
            w.write_record([
                "mean".to_string(),
                n.to_string(),
                s.m.to_string(),
                String::new(),
                s.algorithm.to_string(),
                fmt(s.mean_objective),
                String::new(),
                fmt(s.mean_nodes),
                s.mean_wall_time.map(|t| format!("{t:.6}")).unwrap_or_default(),
                status,
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Runs `plan` sequentially; `progress` sees every record as it is made.
pub fn run_bench(
    plan: &BenchPlan,
    solver: Option<&SolverCommand>,
    mut progress: impl FnMut(&BenchRecord),
) -> nanip_core::Result<BenchReport> {
    plan.validate()?;
    let mut report = BenchReport::default();
    for (id, seed, instance) in plan.instances()? {
        let first = report.records.len();
        for &algorithm in &plan.algorithms {
            let record = solve_one(&id, seed, &instance, algorithm, plan.time_limit, solver)?;
            progress(&record);
            report.records.push(record);
        }
        let exact: Vec<f64> = report.records[first..]
            .iter()
            .filter(|r| r.algorithm.is_exact() && r.optimal)
            .filter_map(|r| r.objective)
            .collect();
        if let (Some(lo), Some(hi)) = (
            exact.iter().copied().reduce(f64::min),
            exact.iter().copied().reduce(f64::max),
        ) {
            if hi - lo > COST_TOLERANCE {
                report.disagreements.push(format!("{id}: exact objectives {exact:?}"));
            }
        }
    }
    report.summaries = summarise(plan, &report.records);
    Ok(report)
}

fn solve_one(
    id: &str,
    seed: u64,
    instance: &Instance,
    algorithm: Algorithm,
    time_limit: Duration,
    solver: Option<&SolverCommand>,
) -> nanip_core::Result<BenchRecord> {
    let mut record = BenchRecord {
        instance_id: id.to_string(),
        n: instance.graph.n(),
        m: instance.graph.m(),
        seed,
        algorithm,
        objective: None,
        optimal: false,
        nodes_expanded: 0,
        wall_time: Duration::ZERO,
        status: Status::Ok,
        message: None,
    };
    match run_algorithm(algorithm, instance, &TieBreak::LowestIndex, Some(time_limit), solver) {
        Ok(result) => {
            let check = evaluate_cost(&instance.graph, &instance.cost, &result.order)?;
            if (check.total_cost - result.cost).abs() > COST_TOLERANCE {
                return Err(Error::Inconsistent {
                    cost: check.total_cost,
                    objective: result.cost,
                });
            }
            record.objective = Some(result.cost);
            record.optimal = result.optimal;
            record.nodes_expanded = result.nodes_expanded;
            record.wall_time = result.wall_time;
        }
        Err(Error::Timeout { .. }) => {
            record.status = Status::Timeout;
            record.wall_time = time_limit;
        }
        Err(e @ Error::SolverUnavailable(_)) => {
            record.status = Status::Unavailable;
            record.message = Some(e.to_string());
        }
        Err(e) => {
            record.status = Status::Error;
            record.message = Some(e.to_string());
        }
    }
    Ok(record)
}

fn summarise(plan: &BenchPlan, records: &[BenchRecord]) -> Vec<Summary> {
    let mut groups: BTreeMap<(usize, usize), Vec<&BenchRecord>> = BTreeMap::new();
    for r in records {
        let slot = plan.algorithms.iter().position(|&a| a == r.algorithm).unwrap_or(0);
        groups.entry((r.m, slot)).or_default().push(r);
    }
    groups
        .into_iter()
        .map(|((m, slot), rows)| {
            let done: Vec<&&BenchRecord> = rows.iter().filter(|r| r.status == Status::Ok).collect();
            let mean = |f: &dyn Fn(&BenchRecord) -> f64| {
                (!done.is_empty()).then(|| done.iter().map(|r| f(r)).sum::<f64>() / done.len() as f64)
            };
            Summary {
                m,
                algorithm: plan.algorithms[slot],
                completed: done.len(),
                timeouts: rows.iter().filter(|r| r.status == Status::Timeout).count(),
                mean_objective: mean(&|r| r.objective.unwrap_or(0.0)),
                mean_nodes: mean(&|r| r.nodes_expanded as f64),
                mean_wall_time: mean(&|r| r.wall_time.as_secs_f64()),
            }
        })
        .collect()
}
