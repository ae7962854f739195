use std::path::Path;

use nanip_core::gadgets::{random_connected_graph, tree_gadget_cost, CliqueGadget, TreeGadget};
use nanip_core::{CostFunction, Error, Graph, Instance, Result};

/// Parameters of one generated instance.
#[derive(Clone, Debug, PartialEq)]
pub enum GenSpec {
    /// Binary-tree gadget with `levels` levels, optionally doubled.
    Btree { levels: usize, doubled: bool },
    /// Clique gadget over a named base graph or an instance file.
    CliqueGadget { base: String, k: usize },
    /// Random connected graph.
    Random {
        nodes: usize,
        edges: usize,
        seed: u64,
        cost: CostFunction,
    },
}

/// Builds the instance with provenance comments naming the generator and
/// its parameters.
pub fn generate(spec: &GenSpec) -> Result<Instance> {
    match spec {
        GenSpec::Btree { levels, doubled } => {
            let gadget = TreeGadget::new(*levels, *doubled)?;
            Ok(Instance::new(gadget.graph, tree_gadget_cost())
                .with_comment(format!("generator: btree levels={levels} doubled={doubled}")))
        }
        GenSpec::CliqueGadget { base, k } => {
            let graph = base_graph(base)?;
            let gadget = CliqueGadget::new(&graph, *k)?;
            Ok(Instance::new(gadget.graph, gadget.cost)
                .with_comment(format!("generator: clique-gadget base={base} k={k}"))
                .with_comment(format!(
                    "vertices {}..{} are the added clique",
                    graph.n(),
                    graph.n() + k
                )))
        }
        GenSpec::Random {
            nodes,
            edges,
            seed,
            cost,
        } => {
            let graph = random_connected_graph(*nodes, *edges, *seed)?;
            Ok(Instance::new(graph, cost.clone()).with_comment(format!(
                "generator: random nodes={nodes} edges={edges} seed={seed} model=pruefer-tree+uniform-edges"
            )))
        }
    }
}

/// `K<n>`, `C<n>`, `P<n>`, `S<n>` (star with n leaves), `petersen`,
/// `K<n>-pendant`, or the path of an instance file.
pub fn base_graph(name: &str) -> Result<Graph> {
    if Path::new(name).is_file() {
        return Ok(Instance::read(name)?.graph);
    }
    let lower = name.to_ascii_lowercase();
    if lower == "petersen" {
        return Ok(Graph::petersen());
    }
    let (body, pendant) = match lower.strip_suffix("-pendant") {
        Some(body) => (body, true),
        None => (lower.as_str(), false),
    };
    let bad = || Error::InvalidParameter(format!("unknown base graph {name:?}"));
    let mut chars = body.chars();
    let kind = chars.next().ok_or_else(bad)?;
    let size: usize = chars.as_str().parse().map_err(|_| bad())?;
    let graph = match kind {
        'k' => Graph::complete(size),
        'c' if size >= 3 => Graph::cycle(size),
        'p' => Graph::path(size),
        's' => Graph::star(size),
        _ => return Err(bad()),
    };
    if !pendant {
        return Ok(graph);
    }
    let mut edges = graph.edges().to_vec();
    edges.push((0, graph.n()));
    Graph::new(graph.n() + 1, &edges)
}

/// Parses a whitespace- or comma-separated cost table.
pub fn parse_cost(text: &str) -> Result<CostFunction> {
    let values = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| Error::InvalidParameter(format!("bad cost value {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    CostFunction::new(values)
}
