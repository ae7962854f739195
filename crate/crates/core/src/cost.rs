//! Tabulated installation cost functions.

use crate::error::{Error, Result};

/// Tolerance for second-difference and monotonicity checks.
pub const SHAPE_TOLERANCE: f64 = 1e-12;

/// Cost of installing a vertex as a function of how many of its neighbours
/// are already installed.
///
/// Stored as the table `[f(0), ..., f(Δ)]`; arguments beyond `Δ` take the
/// last value.
#[derive(Clone, Debug, PartialEq)]
pub struct CostFunction {
    table: Vec<f64>,
}

impl CostFunction {
    pub fn new(table: Vec<f64>) -> Result<Self> {
        if table.is_empty() {
            return Err(Error::EmptyCostTable);
        }
        if let Some((index, &value)) = table
            .iter()
            .enumerate()
            .find(|(_, v)| !v.is_finite() || **v < 0.0)
        {
            return Err(Error::InvalidCostValue { index, value });
        }
        Ok(Self { table })
    }

    /// `f(i) = max(k - i, 0)`: the table `[k, k-1, ..., 1, 0]`.
    pub fn countdown(k: usize) -> Self {
        Self::new((0..=k).rev().map(|i| i as f64).collect()).expect("countdown is non-negative")
    }

    /// `f(k) = a*k + b` tabulated on `0..=len-1`. The constant tail makes
    /// this linear only for arguments below `len`.
    pub fn linear(a: f64, b: f64, len: usize) -> Result<Self> {
        Self::new((0..len.max(1)).map(|k| a * k as f64 + b).collect())
    }

    pub fn table(&self) -> &[f64] {
        &self.table
    }

    /// Largest tabulated argument, `Δ`.
    pub fn support(&self) -> usize {
        self.table.len() - 1
    }

    pub fn value(&self, credits: usize) -> f64 {
        self.table[credits.min(self.support())]
    }

    pub fn tail(&self) -> f64 {
        self.table[self.support()]
    }

    pub fn min_value(&self) -> f64 {
        self.table.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Piecewise-linear interpolant of the table, constant past `Δ`.
    pub fn interpolate(&self, x: f64) -> f64 {
        if x <= 0.0 {
            return self.table[0];
        }
        let lo = x.floor() as usize;
        if lo >= self.support() {
            return self.tail();
        }
        let t = x - lo as f64;
        self.table[lo] * (1.0 - t) + self.table[lo + 1] * t
    }

    pub fn is_decreasing(&self) -> bool {
        self.table.windows(2).all(|w| w[1] <= w[0] + SHAPE_TOLERANCE)
    }

    /// Non-negative second differences over the table extended by one tail
    /// value.
    pub fn is_convex(&self) -> bool {
        let mut ext = self.table.clone();
        ext.push(self.tail());
        ext.windows(3)
            .all(|w| w[2] - 2.0 * w[1] + w[0] >= -SHAPE_TOLERANCE)
    }

    pub fn is_convex_decreasing(&self) -> bool {
        self.is_convex() && self.is_decreasing()
    }
}
