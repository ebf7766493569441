//! Minimize the 30-dimensional sphere with the default swarm settings.
//!
//! ```bash
//! cargo run --release -p esoa --example sphere_quickstart
//! ```

use esoa::{optimize, problems, RandomSource, RunConfig};

fn main() -> esoa::Result<()> {
    let problem = problems::make_benchmark(1, 30)?;
    let config = RunConfig::default();
    let report = optimize(&problem, &config, RandomSource::new(42))?;

    println!("problem      {}", problem.name());
    println!("initial best {:e}", report.initial_best);
    for t in [1, 10, 50, 100, 500] {
        println!("iteration {t:>3} {:e}", report.trace[t - 1]);
    }
    println!("evaluations  {}", report.evaluations);
    Ok(())
}
