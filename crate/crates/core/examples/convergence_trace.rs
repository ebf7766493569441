//! Drive the swarm one iteration at a time, watch every evaluation through a
//! hook and write the convergence trace as CSV.
//!
//! ```bash
//! cargo run --release -p esoa --example convergence_trace -- /tmp/f5.csv
//! ```

use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};

use esoa::harness::write_convergence_csv;
use esoa::optimizer::{step, SwarmState};
use esoa::{problems, Fitness, RandomSource, RunConfig, TrialReport};

fn main() -> esoa::Result<()> {
    let path: PathBuf = std::env::args()
        .nth(1)
        .map(Into::into)
        .unwrap_or_else(|| std::env::temp_dir().join("esoa_f5_convergence.csv"));

    let problem = problems::make_benchmark(5, 30)?;
    let config = RunConfig::default();
    let rng = RandomSource::new(7);

    // Candidates are clamped into the box before evaluation; count how many
    // ended up on a face of it.
    let bounds = problem.bounds().clone();
    let on_boundary = AtomicU64::new(0);
    let hook = |x: &[f64], _: &Fitness| {
        let hit = x
            .iter()
            .zip(bounds.lower().iter().zip(bounds.upper()))
            .any(|(v, (lo, hi))| v == lo || v == hi);
        if hit {
            on_boundary.fetch_add(1, Ordering::Relaxed);
        }
    };

    let mut swarm = SwarmState::initialize(&problem, &config, &rng, &hook)?;
    let initial_best = swarm.global.fitness.value;
    let mut trace = Vec::new();
    while !swarm.is_finished() {
        step(&mut swarm, &problem, &hook)?;
        trace.push(swarm.global.fitness.value);
        if swarm.t % 100 == 0 {
            println!("t = {:>3}  best {:e}", swarm.t, swarm.global.fitness.value);
        }
    }

    let report = TrialReport {
        seed: rng.seed(),
        best_position: swarm.global.x.clone(),
        best_fitness: swarm.global.fitness,
        initial_best,
        trace,
        evaluations: swarm.evaluations(),
    };
    write_convergence_csv(&report, &path)?;
    println!(
        "{} evaluations, {} on the boundary of the search box",
        report.evaluations,
        on_boundary.load(Ordering::Relaxed)
    );
    println!("trace written to {}", path.display());
    Ok(())
}
