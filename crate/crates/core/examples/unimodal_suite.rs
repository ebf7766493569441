//! Run F1 to F7 (dim 30, 50 squads, 500 iterations) over several seeds and
//! print mean and sample standard deviation per function.
//!
//! ```bash
//! cargo run --release -p esoa --example unimodal_suite -- 10
//! ```

use esoa::harness::{run_trials, summarize, ExperimentConfig};

fn main() -> esoa::Result<()> {
    let trials = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    println!("{:<4} {:>24} {:>24}", "F", "ave", "std");
    for id in 1..=7 {
        let config = ExperimentConfig {
            problem: format!("f{id}"),
            trials,
            ..ExperimentConfig::default()
        };
        let stats = summarize(&run_trials(&config)?)?;
        println!(
            "{:<4} {:>24e} {:>24e}",
            config.problem, stats.ave, stats.std
        );
    }
    Ok(())
}
