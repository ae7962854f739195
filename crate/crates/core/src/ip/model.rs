use crate::cost::CostFunction;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ip::program::{LinearProgram, Sense, VarKind};

/// Secant lines of a cost table: segment `j` passes through `(j, f(j))` and
/// `(j+1, f(j+1))`. For convex `f` the upper envelope of the secants and the
/// floor `f(Δ)` equals the piecewise-linear interpolant, and hits `f` exactly
/// at every integer.
#[derive(Clone, Debug, PartialEq)]
pub struct Linearization {
    /// `(slope, intercept)` per segment.
    pub secants: Vec<(f64, f64)>,
    pub floor: f64,
}

impl Linearization {
    pub fn new(cost: &CostFunction) -> Self {
        let secants = cost
            .table()
            .windows(2)
            .enumerate()
            .map(|(j, w)| {
                let slope = w[1] - w[0];
                (slope, w[0] - slope * j as f64)
            })
            .collect();
        Self {
            secants,
            floor: cost.tail(),
        }
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        self.secants
            .iter()
            .map(|&(a, b)| a * x + b)
            .fold(self.floor, f64::max)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IpOptions {
    /// Keep both arc variables per edge tied by `e_i_j + e_j_i = 1` instead
    /// of substituting `e_j_i = 1 - e_i_j`.
    pub explicit_antisymmetry: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum ArcVars {
    /// `e_u_v` for `u < v`; the reverse arc is `1 - e_u_v`.
    Substituted(usize),
    Explicit { forward: usize, backward: usize },
}

/// The integer program for one instance, with the bookkeeping needed to read
/// solutions back.
#[derive(Clone, Debug)]
pub struct IpModel {
    pub graph: Graph,
    pub cost: CostFunction,
    pub options: IpOptions,
    pub linearization: Linearization,
    pub program: LinearProgram,
    arcs: Vec<ArcVars>,
    order_vars: Vec<usize>,
    epigraph_vars: Vec<usize>,
}

pub fn build_ip(graph: &Graph, cost: &CostFunction, options: IpOptions) -> Result<IpModel> {
    if !cost.is_convex() {
        return Err(Error::CostPredicate {
            algorithm: "the integer program",
            predicate: "convex",
        });
    }
    let n = graph.n();
    if n == 0 {
        return Err(Error::InvalidParameter("integer program needs at least one vertex".into()));
    }
    let big = n as f64;
    let mut program = LinearProgram::default();

    let arcs: Vec<ArcVars> = graph
        .edges()
        .iter()
        .map(|&(u, v)| {
            let mut arc = |a: usize, b: usize| {
                program.add_variable(format!("e_{a}_{b}"), VarKind::Binary, 0.0, 1.0)
            };
            if options.explicit_antisymmetry {
                ArcVars::Explicit {
                    forward: arc(u, v),
                    backward: arc(v, u),
                }
            } else {
                ArcVars::Substituted(arc(u, v))
            }
        })
        .collect();
    let order_vars: Vec<usize> = (0..n)
        .map(|i| program.add_variable(format!("u_{i}"), VarKind::Continuous, 0.0, big))
        .collect();
    let linearization = Linearization::new(cost);
    let epigraph_vars: Vec<usize> = (0..n)
        .map(|i| {
            program.add_variable(
                format!("z_{i}"),
                VarKind::Continuous,
                linearization.floor,
                f64::INFINITY,
            )
        })
        .collect();
    program.objective = epigraph_vars.iter().map(|&z| (z, 1.0)).collect();

    let mut model = IpModel {
        graph: graph.clone(),
        cost: cost.clone(),
        options,
        linearization,
        program,
        arcs,
        order_vars,
        epigraph_vars,
    };
    model.add_rows();
    Ok(model)
}

impl IpModel {
    fn add_rows(&mut self) {
        let n = self.graph.n();
        let big = n as f64;

        for (&(u, v), &arc) in self.graph.edges().iter().zip(&self.arcs) {
            if let ArcVars::Explicit { forward, backward } = arc {
                self.program.add_constraint(
                    format!("anti_{u}_{v}"),
                    vec![(forward, 1.0), (backward, 1.0)],
                    Sense::Eq,
                    1.0,
                );
            }
        }

        // u_a - u_b + 1 <= n (1 - e_a_b) for both orientations of each edge.
        for (&(u, v), &arc) in self.graph.edges().iter().zip(&self.arcs) {
            for (a, b) in [(u, v), (v, u)] {
                let (ua, ub) = (self.order_vars[a], self.order_vars[b]);
                let (var, coef, constant) = self.arc_term(arc, a < b);
                // n * (coef * var + constant) moved to the left-hand side.
                self.program.add_constraint(
                    format!("mtz_{a}_{b}"),
                    vec![(ua, 1.0), (ub, -1.0), (var, big * coef)],
                    Sense::Le,
                    big - 1.0 - big * constant,
                );
            }
        }

        // z_i >= slope * d_i + intercept
        for i in 0..n {
            let (constant, terms) = self.credit_expression(i);
            for (j, &(slope, intercept)) in self.linearization.secants.iter().enumerate() {
                let mut row = vec![(self.epigraph_vars[i], 1.0)];
                row.extend(
                    terms
                        .iter()
                        .filter(|_| slope != 0.0)
                        .map(|&(var, c)| (var, -slope * c)),
                );
                self.program.add_constraint(
                    format!("sec_{i}_{j}"),
                    row,
                    Sense::Ge,
                    intercept + slope * constant,
                );
            }
        }
    }

    /// `(variable, coefficient, constant)` with `e_{lo,hi}` (forward) or
    /// `e_{hi,lo}` equal to `coefficient * variable + constant`.
    fn arc_term(&self, arc: ArcVars, forward: bool) -> (usize, f64, f64) {
        match (arc, forward) {
            (ArcVars::Substituted(x), true) => (x, 1.0, 0.0),
            (ArcVars::Substituted(x), false) => (x, -1.0, 1.0),
            (ArcVars::Explicit { forward: x, .. }, true) => (x, 1.0, 0.0),
            (ArcVars::Explicit { backward: x, .. }, false) => (x, 1.0, 0.0),
        }
    }

    /// `d_i = sum over neighbours j of e_j_i` as `(constant, terms)`.
    pub fn credit_expression(&self, i: usize) -> (f64, Vec<(usize, f64)>) {
        let mut constant = 0.0;
        let mut terms = Vec::new();
        for (&(u, v), &arc) in self.graph.edges().iter().zip(&self.arcs) {
            // Arc into i: from the other endpoint.
            let into = if v == i {
                true
            } else if u == i {
                false
            } else {
                continue;
            };
            let (var, coef, c) = self.arc_term(arc, into);
            constant += c;
            terms.push((var, coef));
        }
        (constant, terms)
    }

    /// Value of `e_a_b` in `values`, for an edge `{a, b}`.
    pub fn arc_value(&self, values: &[f64], a: usize, b: usize) -> Option<f64> {
        let idx = self
            .graph
            .edges()
            .binary_search(&(a.min(b), a.max(b)))
            .ok()?;
        let (var, coef, constant) = self.arc_term(self.arcs[idx], a < b);
        Some(coef * values[var] + constant)
    }

    pub fn order_vars(&self) -> &[usize] {
        &self.order_vars
    }

    pub fn epigraph_vars(&self) -> &[usize] {
        &self.epigraph_vars
    }

    pub fn arc_var_count(&self) -> usize {
        self.program
            .variables
            .iter()
            .filter(|v| v.kind == VarKind::Binary)
            .count()
    }

    /// The integral assignment encoding `order`: arcs oriented by position,
    /// `u` the position, `z` the installation cost.
    pub fn assignment_for_order(&self, order: &[usize]) -> Result<Vec<f64>> {
        let credits = self.graph.credit_vector(order)?;
        let mut position = vec![0usize; self.graph.n()];
        for (t, &v) in order.iter().enumerate() {
            position[v] = t;
        }
        let mut values = vec![0.0; self.program.variables.len()];
        for (&(u, v), &arc) in self.graph.edges().iter().zip(&self.arcs) {
            let u_first = position[u] < position[v];
            match arc {
                ArcVars::Substituted(x) => values[x] = f64::from(u8::from(u_first)),
                ArcVars::Explicit { forward, backward } => {
                    values[forward] = f64::from(u8::from(u_first));
                    values[backward] = f64::from(u8::from(!u_first));
                }
            }
        }
        for (t, &v) in order.iter().enumerate() {
            values[self.order_vars[v]] = t as f64;
            values[self.epigraph_vars[v]] = self.cost.value(credits[t]);
        }
        Ok(values)
    }
}
