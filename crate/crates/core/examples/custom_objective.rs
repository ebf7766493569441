//! Plug in an objective that is not part of the built-in suites: a shifted
//! Rastrigin function with one linear inequality constraint.
//!
//! ```bash
//! cargo run --release -p esoa --example custom_objective
//! ```

use std::f64::consts::TAU;

use esoa::{optimize, Bounds, ObjectiveProblem, RandomSource, RunConfig};

fn main() -> esoa::Result<()> {
    let dim = 10;
    let shift: Vec<f64> = (0..dim).map(|k| 0.5 * k as f64 - 2.0).collect();
    let centre = shift.clone();
    let rastrigin = move |x: &[f64]| {
        x.iter()
            .zip(&centre)
            .map(|(v, s)| {
                let z = v - s;
                z * z - 10.0 * (TAU * z).cos() + 10.0
            })
            .sum::<f64>()
    };

    let problem = ObjectiveProblem::new(
        "shifted-rastrigin",
        Bounds::symmetric(dim, 5.12)?,
        rastrigin,
    )
    // sum(x) <= 5
    .with_constraint(|x| x.iter().sum::<f64>() - 5.0)
    .with_penalty(1e6)?;

    let config = RunConfig {
        population: 40,
        max_iterations: 1000,
        ..RunConfig::default()
    };
    let report = optimize(&problem, &config, RandomSource::new(1))?;
    println!("best value {:.6}", report.best_fitness.value);
    println!("raw        {:.6}", report.best_fitness.raw_value);
    println!("violation  {:e}", report.best_fitness.violation);
    println!("sum(x)     {:.6}", report.best_position.iter().sum::<f64>());
    println!("x*         {:.3?}", report.best_position);
    Ok(())
}
