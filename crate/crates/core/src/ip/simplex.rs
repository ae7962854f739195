//! Dense two-phase tableau simplex with Bland's anti-cycling rule.
//!
//! Sized for the relaxations of small instances (a few hundred rows);
//! integrality markers are ignored.

use crate::error::{Error, Result};
use crate::ip::program::{LinearProgram, Sense};

pub const MAX_PIVOTS: usize = 1_000_000;
const FEASIBILITY_TOLERANCE: f64 = 1e-7;
const PIVOT_TOLERANCE: f64 = 1e-9;

type Row = (Vec<(usize, f64)>, Sense, f64);

#[derive(Clone, Debug, PartialEq)]
pub struct LpSolution {
    pub values: Vec<f64>,
    pub objective: f64,
    pub pivots: usize,
}

/// Minimises `program` over its continuous relaxation.
pub fn solve_lp(program: &LinearProgram) -> Result<LpSolution> {
    let nv = program.variables.len();
    for v in &program.variables {
        if !v.lower.is_finite() || v.upper < v.lower {
            return Err(Error::InvalidParameter(format!(
                "variable {} needs a finite lower bound below its upper bound",
                v.name
            )));
        }
    }

    // Shift x = lower + y, y >= 0, and turn finite upper bounds into rows.
    let mut rows: Vec<Row> = program
        .constraints
        .iter()
        .map(|c| {
            let shift: f64 = c.terms.iter().map(|&(j, a)| a * program.variables[j].lower).sum();
            (c.terms.clone(), c.sense, c.rhs - shift)
        })
        .collect();
    for (j, v) in program.variables.iter().enumerate() {
        if v.upper.is_finite() {
            rows.push((vec![(j, 1.0)], Sense::Le, v.upper - v.lower));
        }
    }
    for row in &mut rows {
        if row.2 < 0.0 {
            row.0.iter_mut().for_each(|t| t.1 = -t.1);
            row.2 = -row.2;
            row.1 = match row.1 {
                Sense::Le => Sense::Ge,
                Sense::Ge => Sense::Le,
                Sense::Eq => Sense::Eq,
            };
        }
    }

    let m = rows.len();
    let slack_count = rows.iter().filter(|r| r.1 != Sense::Eq).count();
    let art_count = rows.iter().filter(|r| r.1 != Sense::Le).count();
    let art_start = nv + slack_count;
    let cols = art_start + art_count;

    let mut t = Tableau::new(m, cols);
    let mut slack = nv;
    let mut art = art_start;
    for (i, (terms, sense, rhs)) in rows.iter().enumerate() {
        for &(j, a) in terms {
            *t.at(i, j) += a;
        }
        *t.rhs(i) = *rhs;
        match sense {
            Sense::Le => {
                *t.at(i, slack) = 1.0;
                t.basis[i] = slack;
                slack += 1;
            }
            Sense::Ge => {
                *t.at(i, slack) = -1.0;
                slack += 1;
                *t.at(i, art) = 1.0;
                t.basis[i] = art;
                art += 1;
            }
            Sense::Eq => {
                *t.at(i, art) = 1.0;
                t.basis[i] = art;
                art += 1;
            }
        }
    }

    // Phase one: minimise the sum of artificials.
    let mut phase_one = vec![0.0; cols];
    phase_one[art_start..].iter_mut().for_each(|c| *c = 1.0);
    t.set_objective(&phase_one);
    let mut pivots = t.optimise(cols, 0)?;
    let scale = rows.iter().map(|r| r.2.abs()).fold(1.0, f64::max);
    if -t.objective_value() > FEASIBILITY_TOLERANCE * scale {
        return Err(Error::Infeasible);
    }
    t.drive_out_artificials(art_start);

    let mut cost = vec![0.0; cols];
    for &(j, c) in &program.objective {
        cost[j] += c;
    }
    t.set_objective(&cost);
    pivots += t.optimise(art_start, pivots)?;

    let mut values: Vec<f64> = program.variables.iter().map(|v| v.lower).collect();
    for (i, &b) in t.basis.iter().enumerate() {
        if b < nv && t.active[i] {
            values[b] += t.rhs_value(i).max(0.0);
        }
    }
    let objective = program.objective_value(&values);
    Ok(LpSolution {
        values,
        objective,
        pivots,
    })
}

struct Tableau {
    m: usize,
    width: usize,
    /// `m` constraint rows then the reduced-cost row; last column is the
    /// right-hand side (for the cost row, minus the objective).
    data: Vec<f64>,
    basis: Vec<usize>,
    /// False for rows found redundant after phase one.
    active: Vec<bool>,
}

impl Tableau {
    fn new(m: usize, cols: usize) -> Self {
        Self {
            m,
            width: cols + 1,
            data: vec![0.0; (m + 1) * (cols + 1)],
            basis: vec![0; m],
            active: vec![true; m],
        }
    }

    fn at(&mut self, i: usize, j: usize) -> &mut f64 {
        &mut self.data[i * self.width + j]
    }

    fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.width + j]
    }

    fn rhs(&mut self, i: usize) -> &mut f64 {
        let w = self.width;
        &mut self.data[i * w + w - 1]
    }

    fn rhs_value(&self, i: usize) -> f64 {
        self.get(i, self.width - 1)
    }

    fn objective_value(&self) -> f64 {
        self.rhs_value(self.m)
    }

    /// Loads cost vector `c` into the last row as reduced costs for the
    /// current basis.
    fn set_objective(&mut self, c: &[f64]) {
        let w = self.width;
        let cost_row = self.m * w;
        self.data[cost_row..cost_row + w].fill(0.0);
        self.data[cost_row..cost_row + c.len()].copy_from_slice(c);
        for i in 0..self.m {
            if !self.active[i] {
                continue;
            }
            let cb = c[self.basis[i]];
            if cb != 0.0 {
                for j in 0..w {
                    self.data[cost_row + j] -= cb * self.data[i * w + j];
                }
            }
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let w = self.width;
        let p = self.get(r, c);
        for j in 0..w {
            self.data[r * w + j] /= p;
        }
        let (before, rest) = self.data.split_at_mut(r * w);
        let (pivot_row, after) = rest.split_at_mut(w);
        for row in before.chunks_mut(w).chain(after.chunks_mut(w)) {
            let factor = row[c];
            if factor != 0.0 {
                for (x, &y) in row.iter_mut().zip(pivot_row.iter()) {
                    *x -= factor * y;
                }
                row[c] = 0.0;
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule over columns `0..limit`. Returns the number of pivots.
    fn optimise(&mut self, limit: usize, already: usize) -> Result<usize> {
        let mut pivots = 0;
        loop {
            if already + pivots >= MAX_PIVOTS {
                return Err(Error::IterationLimit(MAX_PIVOTS));
            }
            let Some(enter) = (0..limit).find(|&j| self.get(self.m, j) < -PIVOT_TOLERANCE) else {
                return Ok(pivots);
            };
            let mut leave: Option<(usize, f64)> = None;
            for i in 0..self.m {
                if !self.active[i] {
                    continue;
                }
                let a = self.get(i, enter);
                if a > PIVOT_TOLERANCE {
                    let ratio = self.rhs_value(i) / a;
                    leave = match leave {
                        Some((r, best))
                            if ratio > best + PIVOT_TOLERANCE
                                || (ratio >= best - PIVOT_TOLERANCE
                                    && self.basis[r] < self.basis[i]) =>
                        {
                            Some((r, best.min(ratio)))
                        }
                        _ => Some((i, ratio)),
                    };
                }
            }
            let Some((r, _)) = leave else {
                return Err(Error::Unbounded);
            };
            self.pivot(r, enter);
            pivots += 1;
        }
    }

    /// Pivots zero-level artificials out of the basis; rows where that is
    /// impossible are linearly dependent and get deactivated.
    fn drive_out_artificials(&mut self, art_start: usize) {
        for i in 0..self.m {
            if self.basis[i] < art_start {
                continue;
            }
            match (0..art_start).find(|&j| self.get(i, j).abs() > PIVOT_TOLERANCE) {
                Some(j) => self.pivot(i, j),
                None => self.active[i] = false,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ip::program::VarKind;

    #[allow(clippy::type_complexity)]
    fn program(
        vars: &[(f64, f64)],
        objective: &[(usize, f64)],
        rows: &[(&[(usize, f64)], Sense, f64)],
    ) -> LinearProgram {
        let mut p = LinearProgram::default();
        for (i, &(lo, hi)) in vars.iter().enumerate() {
            p.add_variable(format!("x{i}"), VarKind::Continuous, lo, hi);
        }
        p.objective = objective.to_vec();
        for (i, (terms, sense, rhs)) in rows.iter().enumerate() {
            p.add_constraint(format!("r{i}"), terms.to_vec(), *sense, *rhs);
        }
        p
    }

    #[test]
    fn textbook_maximisation() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
        let p = program(
            &[(0.0, f64::INFINITY), (0.0, f64::INFINITY)],
            &[(0, -3.0), (1, -5.0)],
            &[
                (&[(0, 1.0)], Sense::Le, 4.0),
                (&[(1, 2.0)], Sense::Le, 12.0),
                (&[(0, 3.0), (1, 2.0)], Sense::Le, 18.0),
            ],
        );
        let s = solve_lp(&p).unwrap();
        assert!((s.objective + 36.0).abs() < 1e-9);
        assert!((s.values[0] - 2.0).abs() < 1e-9 && (s.values[1] - 6.0).abs() < 1e-9);
    }

    #[test]
    fn equality_and_ge_rows_with_bounds() {
        // min x + 2y, x + y = 3, x >= 1 (row), 0 <= x <= 2, y >= 0.5 -> x=2, y=1
        let p = program(
            &[(0.0, 2.0), (0.5, f64::INFINITY)],
            &[(0, 1.0), (1, 2.0)],
            &[(&[(0, 1.0), (1, 1.0)], Sense::Eq, 3.0), (&[(0, 1.0)], Sense::Ge, 1.0)],
        );
        let s = solve_lp(&p).unwrap();
        assert!((s.objective - 4.0).abs() < 1e-9, "{s:?}");
        assert!(p.max_violation(&s.values) < 1e-9);
    }

    #[test]
    fn detects_infeasible_and_unbounded() {
        let infeasible = program(
            &[(0.0, 1.0)],
            &[(0, 1.0)],
            &[(&[(0, 1.0)], Sense::Ge, 2.0)],
        );
        assert!(matches!(solve_lp(&infeasible), Err(Error::Infeasible)));
        let unbounded = program(&[(0.0, f64::INFINITY)], &[(0, -1.0)], &[]);
        assert!(matches!(solve_lp(&unbounded), Err(Error::Unbounded)));
    }

    #[test]
    fn redundant_equalities() {
        // x + y = 1 stated twice.
        let p = program(
            &[(0.0, f64::INFINITY), (0.0, f64::INFINITY)],
            &[(0, 1.0), (1, 3.0)],
            &[
                (&[(0, 1.0), (1, 1.0)], Sense::Eq, 1.0),
                (&[(0, 2.0), (1, 2.0)], Sense::Eq, 2.0),
            ],
        );
        let s = solve_lp(&p).unwrap();
        assert!((s.objective - 1.0).abs() < 1e-9);
    }

    #[test]
    fn beale_cycling_example() {
        // Beale's classic cycling example under the textbook rule.
        let p = program(
            &[(0.0, f64::INFINITY); 4],
            &[(0, -0.75), (1, 150.0), (2, -0.02), (3, 6.0)],
            &[
                (&[(0, 0.25), (1, -60.0), (2, -0.04), (3, 9.0)], Sense::Le, 0.0),
                (&[(0, 0.5), (1, -90.0), (2, -0.02), (3, 3.0)], Sense::Le, 0.0),
                (&[(2, 1.0)], Sense::Le, 1.0),
            ],
        );
        let s = solve_lp(&p).unwrap();
        assert!((s.objective + 0.05).abs() < 1e-9, "{s:?}");
    }
}
