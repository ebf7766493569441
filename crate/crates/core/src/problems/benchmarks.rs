//! The seven classical unimodal benchmarks F1 to F7. All have minimum 0.

use crate::error::{Error, Result};
use crate::problems::{Bounds, ObjectiveProblem};

/// Symmetric search half-widths for F1 to F7.
pub const HALF_WIDTHS: [f64; 7] = [100.0, 10.0, 100.0, 100.0, 30.0, 100.0, 1.28];

/// Sphere: `sum x_i^2`.
pub fn sphere(x: &[f64]) -> f64 {
    x.iter().map(|v| v * v).sum()
}

/// `sum |x_i| + prod |x_i|`.
pub fn abs_sum_product(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|v| v.abs()).sum();
    let product: f64 = x.iter().map(|v| v.abs()).product();
    sum + product
}

/// Sum of squared prefix sums.
pub fn prefix_sum_squares(x: &[f64]) -> f64 {
    x.iter()
        .scan(0.0, |acc, v| {
            *acc += v;
            Some(*acc * *acc)
        })
        .sum()
}

/// `max |x_i|`.
pub fn max_abs(x: &[f64]) -> f64 {
    x.iter().fold(0.0, |m, v| m.max(v.abs()))
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2)
        .map(|p| 100.0 * (p[1] - p[0] * p[0]).powi(2) + (p[0] - 1.0).powi(2))
        .sum()
}

/// `sum floor(x_i + 0.5)^2`.
pub fn step(x: &[f64]) -> f64 {
    x.iter().map(|v| (v + 0.5).floor().powi(2)).sum()
}

/// `sum i * x_i^4` with 1-based `i`; the noise term is added by the problem.
pub fn weighted_quartic(x: &[f64]) -> f64 {
    x.iter()
        .enumerate()
        .map(|(i, v)| (i + 1) as f64 * v.powi(4))
        .sum()
}

/// Benchmark `F{id}` in `dim` dimensions, `id` in `1..=7`.
pub fn make_benchmark(id: usize, dim: usize) -> Result<ObjectiveProblem> {
    if !(1..=7).contains(&id) {
        return Err(Error::domain(format!(
            "benchmark id must be in 1..=7, got {id}"
        )));
    }
    if dim == 0 {
        return Err(Error::domain("benchmark dimension must be >= 1"));
    }
    let bounds = Bounds::symmetric(dim, HALF_WIDTHS[id - 1])?;
    let name = format!("f{id}");
    let problem = match id {
        1 => ObjectiveProblem::new(name, bounds, sphere),
        2 => ObjectiveProblem::new(name, bounds, abs_sum_product),
        3 => ObjectiveProblem::new(name, bounds, prefix_sum_squares),
        4 => ObjectiveProblem::new(name, bounds, max_abs),
        5 => ObjectiveProblem::new(name, bounds, rosenbrock),
        6 => ObjectiveProblem::new(name, bounds, step),
        _ => ObjectiveProblem::with_noisy_objective(name, bounds, |x, rng| {
            weighted_quartic(x) + rng.unit()
        }),
    };
    Ok(problem.with_known_minimum(0.0))
}
