use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::optimizer::TrialReport;

/// Best, worst, mean and sample standard deviation of final results.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummaryStats {
    pub best: f64,
    pub worst: f64,
    pub ave: f64,
    pub std: f64,
}

impl SummaryStats {
    /// Statistics of `values`; `std` uses the `n - 1` denominator and is 0
    /// for a single value.
    pub fn from_values(values: &[f64]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::domain("cannot summarize an empty sample"));
        }
        let n = values.len() as f64;
        let best = values.iter().copied().fold(f64::INFINITY, f64::min);
        let worst = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let ave = (values.iter().sum::<f64>() / n).clamp(best, worst);
        let std = if values.len() < 2 {
            0.0
        } else {
            (values.iter().map(|v| (v - ave).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
        };
        Ok(Self {
            best,
            worst,
            ave,
            std,
        })
    }
}

/// Summary of the raw objective at each trial's best point.
pub fn summarize(reports: &[TrialReport]) -> Result<SummaryStats> {
    let values: Vec<f64> = reports.iter().map(|r| r.best_fitness.raw_value).collect();
    SummaryStats::from_values(&values)
}
