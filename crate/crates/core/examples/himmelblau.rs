//! Himmelblau's constrained problem: 10 squads, 500 iterations, 30 trials.
//!
//! ```bash
//! cargo run --release -p esoa --example himmelblau
//! ```

use esoa::harness::{best_trial, run_trials, summarize, ExperimentConfig};
use esoa::problems::engineering::{himmelblau_quantities, HIMMELBLAU_INTERVALS};

fn main() -> esoa::Result<()> {
    let config = ExperimentConfig {
        problem: "himmelblau".into(),
        population: 10,
        ..ExperimentConfig::default()
    };
    let reports = run_trials(&config)?;
    let stats = summarize(&reports)?;
    println!(
        "best {:.5}  worst {:.5}  ave {:.5}  std {:.5}",
        stats.best, stats.worst, stats.ave, stats.std
    );

    let best = best_trial(&reports).expect("30 trials");
    println!("x* = {:.6?}", best.best_position);
    println!("violation {:e}", best.best_fitness.violation);
    let q = himmelblau_quantities(&best.best_position);
    for (k, (v, (lo, hi))) in q.iter().zip(HIMMELBLAU_INTERVALS).enumerate() {
        println!("  {lo:>5} <= g{} = {v:.6} <= {hi}", k + 1);
    }
    Ok(())
}
