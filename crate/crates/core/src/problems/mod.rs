//! Objective functions, box bounds and the quadratic penalty transform.
//!
//! An [`ObjectiveProblem`] is a raw objective over a box plus an ordered list
//! of inequality constraints `g_j(x) <= 0`. [`ObjectiveProblem::evaluate`]
//! folds the constraints into the objective:
//!
//! ```text
//! value = raw(x) + phi * sum_j max(g_j(x), 0)^2
//! ```
//!
//! Any externally supplied function can be wrapped with
//! [`ObjectiveProblem::new`]; the built-in suites live in [`benchmarks`] and
//! [`engineering`].

pub mod benchmarks;
pub mod engineering;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::RandomSource;

pub use benchmarks::make_benchmark;
pub use engineering::{himmelblau_problem, spring_problem};

/// Cap applied to a single constraint's squared violation, and the value used
/// when a constraint is not finite (e.g. a zero denominator).
pub const VIOLATION_CAP: f64 = 1e30;

/// Raw objective. Receives the caller's random stream so noisy objectives
/// stay reproducible.
pub type RawObjective = Arc<dyn Fn(&[f64], &mut RandomSource) -> f64 + Send + Sync>;

/// Inequality constraint in `g(x) <= 0` form.
pub type Constraint = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// Per-dimension search box.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() || lower.len() != upper.len() {
            return Err(Error::domain(format!(
                "bounds need equal non-zero lengths, got {} and {}",
                lower.len(),
                upper.len()
            )));
        }
        for (k, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::domain(format!(
                    "dimension {k}: need finite lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// `[-half_width, half_width]` in each of `dim` dimensions.
    pub fn symmetric(dim: usize, half_width: f64) -> Result<Self> {
        Self::new(vec![-half_width; dim], vec![half_width; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Box width per dimension, `upper - lower`.
    pub fn hop(&self) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| u - l)
            .collect()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dim()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (lo, hi))| lo <= v && v <= hi)
    }

    /// Clamp in place. NaN coordinates are left untouched.
    pub(crate) fn clamp_in_place(&self, x: &mut [f64]) {
        for (v, (lo, hi)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.clamp(*lo, *hi);
        }
    }
}

/// Clamp each coordinate of `x` into its bound interval.
pub fn clamp_to_bounds(x: &[f64], bounds: &Bounds) -> Result<Vec<f64>> {
    if x.len() != bounds.dim() {
        return Err(Error::domain(format!(
            "expected {} coordinates, got {}",
            bounds.dim(),
            x.len()
        )));
    }
    if let Some(k) = x.iter().position(|v| v.is_nan()) {
        return Err(Error::domain(format!("coordinate {k} is NaN")));
    }
    let mut out = x.to_vec();
    bounds.clamp_in_place(&mut out);
    Ok(out)
}

/// Result of one objective evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Fitness {
    /// Penalized objective; this is what the optimizer minimizes.
    pub value: f64,
    pub raw_value: f64,
    /// Sum of squared positive constraint values.
    pub violation: f64,
}

impl Fitness {
    pub fn is_feasible(&self) -> bool {
        self.violation == 0.0
    }
}

/// A minimization problem over a box, optionally with inequality constraints.
#[derive(Clone)]
pub struct ObjectiveProblem {
    name: String,
    bounds: Bounds,
    raw: RawObjective,
    constraints: Vec<Constraint>,
    phi: f64,
    known_minimum: Option<f64>,
}

impl fmt::Debug for ObjectiveProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ObjectiveProblem")
            .field("name", &self.name)
            .field("dim", &self.dim())
            .field("bounds", &self.bounds)
            .field("constraints", &self.constraints.len())
            .field("phi", &self.phi)
            .field("known_minimum", &self.known_minimum)
            .finish()
    }
}

impl ObjectiveProblem {
    /// Unconstrained problem from an objective that does not need randomness.
    pub fn new<F>(name: impl Into<String>, bounds: Bounds, objective: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::with_noisy_objective(name, bounds, move |x, _| objective(x))
    }

    /// Unconstrained problem whose objective draws from the evaluator's stream.
    pub fn with_noisy_objective<F>(name: impl Into<String>, bounds: Bounds, objective: F) -> Self
    where
        F: Fn(&[f64], &mut RandomSource) -> f64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            bounds,
            raw: Arc::new(objective),
            constraints: Vec::new(),
            phi: 0.0,
            known_minimum: None,
        }
    }

    /// Add a constraint `g(x) <= 0`.
    pub fn with_constraint<G>(mut self, g: G) -> Self
    where
        G: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        self.constraints.push(Arc::new(g));
        self
    }

    /// Add `lo <= q(x) <= hi` as the two constraints `lo - q(x)` and `q(x) - hi`.
    pub fn with_interval_constraint<Q>(self, q: Q, lo: f64, hi: f64) -> Self
    where
        Q: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        let q = Arc::new(q);
        let q_hi = Arc::clone(&q);
        self.with_constraint(move |x| lo - q(x))
            .with_constraint(move |x| q_hi(x) - hi)
    }

    /// Set the penalty parameter. Must be finite and nonnegative.
    pub fn with_penalty(mut self, phi: f64) -> Result<Self> {
        if !(phi.is_finite() && phi >= 0.0) {
            return Err(Error::domain(format!(
                "penalty parameter must be finite and >= 0, got {phi}"
            )));
        }
        self.phi = phi;
        Ok(self)
    }

    pub fn with_known_minimum(mut self, f_min: f64) -> Self {
        self.known_minimum = Some(f_min);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.bounds.dim()
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    pub fn known_minimum(&self) -> Option<f64> {
        self.known_minimum
    }

    /// Constraint values `g_j(x)` in declaration order.
    pub fn constraint_values(&self, x: &[f64]) -> Result<Vec<f64>> {
        self.check_input(x)?;
        Ok(self.constraints.iter().map(|g| g(x)).collect())
    }

    /// Penalized fitness of `x`. `rng` feeds noisy objectives only.
    pub fn evaluate(&self, x: &[f64], rng: &mut RandomSource) -> Result<Fitness> {
        self.check_input(x)?;
        let raw_value = (self.raw)(x, rng);
        if self.constraints.is_empty() {
            return Ok(Fitness {
                value: saturate(raw_value),
                raw_value,
                violation: 0.0,
            });
        }
        let violation: f64 = self.constraints.iter().map(|g| squared_excess(g(x))).sum();
        let value = if violation == 0.0 {
            raw_value
        } else {
            raw_value + self.phi * violation
        };
        Ok(Fitness {
            value: saturate(value),
            raw_value,
            violation,
        })
    }

    fn check_input(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim() {
            return Err(Error::domain(format!(
                "{}: expected {} coordinates, got {}",
                self.name,
                self.dim(),
                x.len()
            )));
        }
        if let Some(k) = x.iter().position(|v| !v.is_finite()) {
            return Err(Error::domain(format!(
                "{}: coordinate {k} is not finite",
                self.name
            )));
        }
        Ok(())
    }
}

/// `max(g, 0)^2`, capped at [`VIOLATION_CAP`]; non-finite positive or NaN `g`
/// maps to the cap.
fn squared_excess(g: f64) -> f64 {
    if g.is_nan() {
        VIOLATION_CAP
    } else if g > 0.0 {
        (g * g).min(VIOLATION_CAP)
    } else {
        0.0
    }
}

/// Overflowed or undefined values become the largest finite real so that
/// comparisons still rank them last.
fn saturate(value: f64) -> f64 {
    if value.is_nan() || value == f64::INFINITY {
        f64::MAX
    } else {
        value
    }
}
