//! Seeded multi-trial experiments.
//!
//! Trial `k` runs with the stream `RandomSource::new(seed).split(k)`, so each
//! trial is reproducible on its own and independent of the trial count.
//! Trials run in parallel; results are always returned in trial order.

pub mod cli;
pub mod output;
pub mod stats;

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optimizer::{
    optimize_with_hook, EvalHook, NoHook, RunConfig, TrialReport, DEFAULT_ACCEPTANCE,
};
use crate::problems::{engineering::by_key, ObjectiveProblem};
use crate::rng::{RandomSource, DEFAULT_SEED};

pub use cli::cli_main;
pub use output::{
    read_convergence_csv, read_summary_json, write_convergence_csv, write_summary_json,
    SummaryRecord,
};
pub use stats::{summarize, SummaryStats};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    /// Problem key, see [`crate::problems::engineering::PROBLEM_KEYS`].
    pub problem: String,
    /// Benchmark dimension; ignored by the fixed-size engineering problems.
    pub dim: usize,
    pub population: usize,
    pub max_iterations: usize,
    pub trials: usize,
    pub seed: u64,
    pub acceptance: f64,
    pub output_dir: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            problem: "f1".into(),
            dim: 30,
            population: 50,
            max_iterations: 500,
            trials: 30,
            seed: DEFAULT_SEED,
            acceptance: DEFAULT_ACCEPTANCE,
            output_dir: None,
        }
    }
}

impl ExperimentConfig {
    /// Resolve the problem and check every setting.
    pub fn problem(&self) -> Result<ObjectiveProblem> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be >= 1".into()));
        }
        self.run_config().validate()?;
        by_key(&self.problem, self.dim).map_err(|e| match e {
            Error::Domain(msg) => Error::Config(msg),
            other => other,
        })
    }

    pub fn run_config(&self) -> RunConfig {
        RunConfig {
            population: self.population,
            max_iterations: self.max_iterations,
            acceptance: self.acceptance,
            parallel: false,
        }
    }

    /// Random source for trial `index`.
    pub fn trial_source(&self, index: usize) -> RandomSource {
        RandomSource::new(self.seed).split(index as u64)
    }
}

pub fn run_trials(config: &ExperimentConfig) -> Result<Vec<TrialReport>> {
    run_trials_with_hook(config, &NoHook)
}

pub fn run_trials_with_hook(
    config: &ExperimentConfig,
    hook: &dyn EvalHook,
) -> Result<Vec<TrialReport>> {
    let problem = config.problem()?;
    let run = config.run_config();
    (0..config.trials)
        .into_par_iter()
        .map(|k| optimize_with_hook(&problem, &run, config.trial_source(k), hook))
        .collect()
}

/// Trial with the lowest penalized best fitness; ties go to the lowest index.
pub fn best_trial(reports: &[TrialReport]) -> Option<&TrialReport> {
    reports.iter().reduce(|a, b| {
        if b.best_fitness.value < a.best_fitness.value {
            b
        } else {
            a
        }
    })
}

/// Files produced by [`write_outputs`].
#[derive(Debug, Clone)]
pub struct OutputFiles {
    pub summary: PathBuf,
    pub traces: Vec<PathBuf>,
}

/// Write `{problem}_summary.json` and one `{problem}_trial{k}.csv` per trial.
pub fn write_outputs(
    config: &ExperimentConfig,
    dim: usize,
    reports: &[TrialReport],
    dir: &Path,
) -> Result<OutputFiles> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let stats = summarize(reports)?;
    let best = best_trial(reports).expect("non-empty after summarize");
    let summary = dir.join(format!("{}_summary.json", config.problem));
    write_summary_json(&SummaryRecord::new(config, dim, &stats, best), &summary)?;
    let traces = reports
        .iter()
        .enumerate()
        .map(|(k, report)| {
            let path = dir.join(format!("{}_trial{:03}.csv", config.problem, k));
            write_convergence_csv(report, &path).map(|()| path)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(OutputFiles { summary, traces })
}
