//! Tension/compression spring weight minimization.
//!
//! ```bash
//! cargo run --release -p esoa --example spring_design
//! ```

use esoa::harness::{best_trial, run_trials, summarize, ExperimentConfig};
use esoa::problems::engineering::spring_constraints;

fn main() -> esoa::Result<()> {
    let config = ExperimentConfig {
        problem: "spring".into(),
        population: 10,
        ..ExperimentConfig::default()
    };
    let reports = run_trials(&config)?;
    let stats = summarize(&reports)?;
    println!(
        "best {:.6}  worst {:.6}  ave {:.6}  std {:.2e}",
        stats.best, stats.worst, stats.ave, stats.std
    );
    let best = best_trial(&reports).expect("30 trials");
    let [d, coil, n] = [
        best.best_position[0],
        best.best_position[1],
        best.best_position[2],
    ];
    println!("wire diameter {d:.6}, coil diameter {coil:.6}, active coils {n:.6}");
    for (k, g) in spring_constraints(&best.best_position).iter().enumerate() {
        println!("  g{} = {g:+.3e}", k + 1);
    }
    Ok(())
}
