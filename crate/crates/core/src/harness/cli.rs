//! Command-line entry point.
//!
//! Exit codes: 0 on success, 2 on usage or configuration errors, 1 on
//! runtime failures.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

use crate::error::Error;
use crate::harness::{best_trial, run_trials, summarize, write_outputs, ExperimentConfig};
use crate::optimizer::DEFAULT_ACCEPTANCE;
use crate::problems::engineering::PROBLEM_KEYS;
use crate::rng::DEFAULT_SEED;

#[derive(Debug, Parser)]
#[command(
    name = "esoa",
    about = "Run seeded Egret Swarm Optimization trials and summarize the results",
    arg_required_else_help = true
)]
struct Args {
    /// Problem key: f1..f7, himmelblau or spring.
    #[arg(long)]
    problem: String,
    /// Dimension of the f1..f7 benchmarks.
    #[arg(long, default_value_t = 30)]
    dim: usize,
    /// Number of squads.
    #[arg(long, default_value_t = 50)]
    pop: usize,
    #[arg(long, default_value_t = 500)]
    iters: usize,
    #[arg(long, default_value_t = 30)]
    trials: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Output directory for the summary JSON and per-trial convergence CSVs.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Parse `args` (program name first), run the trials and print one summary
/// row. Returns the process exit code.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    let config = ExperimentConfig {
        problem: args.problem,
        dim: args.dim,
        population: args.pop,
        max_iterations: args.iters,
        trials: args.trials,
        seed: args.seed,
        acceptance: DEFAULT_ACCEPTANCE,
        output_dir: args.out,
    };
    match run(&config) {
        Ok(()) => 0,
        Err(e @ (Error::Config(_) | Error::Domain(_))) => {
            eprintln!("error: {e}");
            if matches!(e, Error::Config(ref m) if m.starts_with("unknown problem")) {
                eprintln!("valid problems: {}", PROBLEM_KEYS.join(", "));
            }
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn run(config: &ExperimentConfig) -> crate::Result<()> {
    let problem = config.problem()?;
    let reports = run_trials(config)?;
    let stats = summarize(&reports)?;
    let best = best_trial(&reports).expect("trials >= 1");

    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(
        stdout,
        "{:<12} {:>24} {:>24} {:>24} {:>24}",
        "problem", "best", "worst", "ave", "std"
    );
    let _ = writeln!(
        stdout,
        "{:<12} {:>24e} {:>24e} {:>24e} {:>24e}",
        config.problem, stats.best, stats.worst, stats.ave, stats.std
    );
    if problem.constraint_count() > 0 {
        let _ = writeln!(
            stdout,
            "best point violation: {:e}",
            best.best_fitness.violation
        );
        if !best.best_fitness.is_feasible() {
            eprintln!(
                "warning: best point of {} is infeasible (violation {:e})",
                config.problem, best.best_fitness.violation
            );
        }
    }
    if let Some(dir) = &config.output_dir {
        let files = write_outputs(config, problem.dim(), &reports, dir)?;
        let _ = writeln!(
            stdout,
            "wrote {} and {} trace files",
            files.summary.display(),
            files.traces.len()
        );
    }
    Ok(())
}
