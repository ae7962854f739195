//! Plain-text instance files.
//!
//! ```text
//! # comment
//! nodes 3
//! edge 0 1
//! edge 1 2
//! cost 2 1 0
//! ```
//!
//! Edges are 0-based. The cost line lists `f(0) .. f(Δ)`; the last value
//! repeats for larger arguments.

use std::fmt::Write as _;
use std::path::Path;

use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub graph: Graph,
    pub cost: CostFunction,
    /// Free-form comment lines (without the leading `#`), emitted first.
    pub comments: Vec<String>,
}

impl Instance {
    pub fn new(graph: Graph, cost: CostFunction) -> Self {
        Self {
            graph,
            cost,
            comments: Vec::new(),
        }
    }

    pub fn with_comment(mut self, line: impl Into<String>) -> Self {
        self.comments.push(line.into());
        self
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut nodes = None;
        let mut edges = Vec::new();
        let mut table = None;
        let mut comments = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let trimmed = raw.trim();
            if let Some(comment) = trimmed.strip_prefix('#') {
                comments.push(comment.strip_prefix(' ').unwrap_or(comment).to_string());
                continue;
            }
            let content = trimmed.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut tokens = content.split_whitespace();
            let directive = tokens.next().unwrap_or_default();
            let args: Vec<&str> = tokens.collect();
            match directive {
                "nodes" => {
                    if nodes.is_some() {
                        return Err(err("duplicate nodes directive".into()));
                    }
                    let [n] = args[..] else {
                        return Err(err("expected `nodes <n>`".into()));
                    };
                    nodes = Some(parse_usize(n).map_err(err)?);
                }
                "edge" => {
                    let [u, v] = args[..] else {
                        return Err(err("expected `edge <u> <v>`".into()));
                    };
                    let pair = (parse_usize(u).map_err(err)?, parse_usize(v).map_err(err)?);
                    edges.push((line_no, pair));
                }
                "cost" => {
                    if table.is_some() {
                        return Err(err("duplicate cost directive".into()));
                    }
                    let values = args
                        .iter()
                        .map(|a| {
                            a.parse::<f64>()
                                .map_err(|_| err(format!("invalid cost value `{a}`")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let f = CostFunction::new(values).map_err(|e| err(e.to_string()))?;
                    table = Some(f);
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }

        let n = nodes.ok_or(Error::Parse {
            line: 0,
            message: "missing `nodes` directive".into(),
        })?;
        let cost = table.ok_or(Error::Parse {
            line: 0,
            message: "missing `cost` directive".into(),
        })?;
        // Validate edge by edge so diagnostics carry the offending line.
        for &(line, (u, v)) in &edges {
            Graph::new(n, &[(u, v)]).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
        }
        let pairs: Vec<_> = edges.into_iter().map(|(_, p)| p).collect();
        let graph = Graph::new(n, &pairs)?;
        Ok(Self {
            graph,
            cost,
            comments,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            writeln!(out, "# {c}").unwrap();
        }
        writeln!(out, "nodes {}", self.graph.n()).unwrap();
        for &(u, v) in self.graph.edges() {
            writeln!(out, "edge {u} {v}").unwrap();
        }
        out.push_str("cost");
        for v in self.cost.table() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
        out
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

fn parse_usize(s: &str) -> Result<usize, String> {
    s.parse().map_err(|_| format!("invalid integer `{s}`"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_p3() {
        let text = "# path\nnodes 3\nedge 0 1\nedge 1 2  # tail comment\ncost 2 1 0\n";
        let inst = Instance::parse(text).unwrap();
        assert_eq!(inst.graph, Graph::path(3));
        assert_eq!(inst.cost.table(), &[2.0, 1.0, 0.0]);
        assert_eq!(inst.comments, vec!["path".to_string()]);
        assert_eq!(inst.to_text(), "# path\nnodes 3\nedge 0 1\nedge 1 2\ncost 2 1 0\n");
    }

    #[test]
    fn diagnostics_name_the_line() {
        let err = Instance::parse("nodes 2\nedge 0 0\ncost 1\n").unwrap_err();
        assert!(err.to_string().starts_with("line 2:"), "{err}");
        let err = Instance::parse("nodes 2\nedge 0 5\ncost 1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = Instance::parse("nodes 2\ncost 1 -1\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!(Instance::parse("edge 0 1\ncost 1\n").is_err());
        assert!(Instance::parse("nodes 2\n").is_err());
        assert!(Instance::parse("nodes 2\ncost 1\nvertex 3\n").is_err());
    }

    proptest! {
        #[test]
        fn text_round_trip(
            n in 1usize..12,
            raw_edges in proptest::collection::vec((0usize..12, 0usize..12), 0..30),
            table in proptest::collection::vec(0.0f64..1e6, 1..6),
        ) {
            let edges: Vec<_> = raw_edges
                .into_iter()
                .map(|(u, v)| (u % n, v % n))
                .filter(|(u, v)| u != v)
                .collect();
            let inst = Instance::new(Graph::new(n, &edges).unwrap(), CostFunction::new(table).unwrap())
                .with_comment("generator: proptest");
            let text = inst.to_text();
            let back = Instance::parse(&text).unwrap();
            prop_assert_eq!(&back, &inst);
            prop_assert_eq!(back.to_text(), text);
        }
    }
}
