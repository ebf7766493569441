//! Egret Swarm Optimization (ESOA).
//!
//! A population metaheuristic in which every squad carries a linear
//! estimator of its own fitness surface. Each iteration a squad proposes
//! three candidates:
//!
//! * a guided step along an integrated gradient estimate with an
//!   exponentially decaying step size ([`optimizer::sit_and_wait`]),
//! * a heavy-tailed random walk ([`optimizer::random_walk`]),
//! * an encircling move toward the squad and swarm bests
//!   ([`optimizer::encircle`]),
//!
//! and keeps the best of them when it improves, or with probability 0.3
//! otherwise ([`optimizer::discriminant`]).
//!
//! The [`problems`] module provides the seven unimodal benchmarks, a
//! quadratic penalty transform for inequality constraints and two
//! constrained engineering problems. [`harness`] runs seeded multi-trial
//! experiments and writes convergence traces and summaries.
//!
//! ```
//! use esoa::{optimize, problems, RandomSource, RunConfig};
//!
//! let problem = problems::make_benchmark(1, 10).unwrap();
//! let config = RunConfig { population: 20, max_iterations: 100, ..RunConfig::default() };
//! let report = optimize(&problem, &config, RandomSource::new(7)).unwrap();
//! assert!(report.best_fitness.value < 1e-6);
//! ```

pub mod error;
pub mod harness;
pub mod optimizer;
pub mod problems;
pub mod rng;

pub use error::{Error, Result};
pub use optimizer::{optimize, optimize_with_hook, EvalHook, RunConfig, TrialReport};
pub use problems::{Bounds, Fitness, ObjectiveProblem};
pub use rng::RandomSource;
