//! Convergence CSV and summary JSON files.
//!
//! CSV: header `iteration,best_fitness`, then one row per iteration starting
//! at 1, with the fitness in shortest round-trip scientific notation.
//! JSON: one object, fields in the order of [`SummaryRecord`].

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::harness::stats::SummaryStats;
use crate::harness::ExperimentConfig;
use crate::optimizer::TrialReport;

pub const CSV_HEADER: &str = "iteration,best_fitness";

pub fn convergence_csv(trace: &[f64]) -> String {
    let mut out = String::with_capacity(24 * (trace.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for (i, v) in trace.iter().enumerate() {
        out.push_str(&format!("{},{:e}\n", i + 1, v));
    }
    out
}

pub fn write_convergence_csv(report: &TrialReport, path: &Path) -> Result<()> {
    fs::write(path, convergence_csv(&report.trace)).map_err(|e| Error::io(path, e))
}

/// Parse a convergence CSV back into its trace.
pub fn read_convergence_csv(path: &Path) -> Result<Vec<f64>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut lines = text.lines();
    if lines.next() != Some(CSV_HEADER) {
        return Err(Error::domain(format!(
            "{}: missing CSV header",
            path.display()
        )));
    }
    lines
        .enumerate()
        .map(|(k, line)| {
            let (iter, value) = line
                .split_once(',')
                .ok_or_else(|| Error::domain(format!("{}: bad row {}", path.display(), k + 1)))?;
            if iter.parse::<usize>().ok() != Some(k + 1) {
                return Err(Error::domain(format!(
                    "{}: bad iteration on row {}",
                    path.display(),
                    k + 1
                )));
            }
            value
                .parse::<f64>()
                .map_err(|e| Error::domain(format!("{}: row {}: {e}", path.display(), k + 1)))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SummaryRecord {
    pub problem: String,
    pub dim: usize,
    pub population: usize,
    pub max_iterations: usize,
    pub trials: usize,
    pub seed: u64,
    pub best: f64,
    pub worst: f64,
    pub ave: f64,
    pub std: f64,
    pub best_position: Vec<f64>,
    /// Penalized objective at `best_position`.
    pub value: f64,
    pub raw_value: f64,
    pub violation: f64,
}

impl SummaryRecord {
    pub fn new(
        config: &ExperimentConfig,
        dim: usize,
        stats: &SummaryStats,
        best: &TrialReport,
    ) -> Self {
        Self {
            problem: config.problem.clone(),
            dim,
            population: config.population,
            max_iterations: config.max_iterations,
            trials: config.trials,
            seed: config.seed,
            best: stats.best,
            worst: stats.worst,
            ave: stats.ave,
            std: stats.std,
            best_position: best.best_position.clone(),
            value: best.best_fitness.value,
            raw_value: best.best_fitness.raw_value,
            violation: best.best_fitness.violation,
        }
    }
}

pub fn write_summary_json(record: &SummaryRecord, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(record)?;
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn read_summary_json(path: &Path) -> Result<SummaryRecord> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    Ok(serde_json::from_str(&text)?)
}
