//! The swarm optimizer.
//!
//! Each squad owns a position, its current fitness, a linear estimator
//! (`w`, with adaptive moments `m`, `v`) and a record of the best point it has
//! ever evaluated. [`step`] runs one iteration: every squad proposes a guided,
//! a random-walk and an encircling candidate, then applies the acceptance
//! rule. Squads only read the swarm best as it stood at the start of the
//! iteration, and each squad draws from its own stream, so the parallel and
//! sequential schedules give identical results.

pub mod estimator;
pub mod strategies;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problems::{Fitness, ObjectiveProblem};
use crate::rng::RandomSource;

pub use estimator::{
    direction_correction, estimate, integrated_gradient, practical_gradient, unit_direction,
};
pub use strategies::{
    discriminant, discriminant_with_draw, encircle, random_walk, sit_and_wait, Candidate,
    CandidateSet, Decision, GuidedCandidate, IterationContext, DEFAULT_ACCEPTANCE,
};

/// Observer called for every objective evaluation, with the evaluated
/// (clamped) position.
pub trait EvalHook: Sync {
    fn on_evaluate(&self, x: &[f64], fitness: &Fitness);
}

/// Hook that does nothing.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoHook;

impl EvalHook for NoHook {
    fn on_evaluate(&self, _: &[f64], _: &Fitness) {}
}

impl<F> EvalHook for F
where
    F: Fn(&[f64], &Fitness) + Sync,
{
    fn on_evaluate(&self, x: &[f64], fitness: &Fitness) {
        self(x, fitness)
    }
}

/// A best-so-far point and the estimator direction recorded with it.
#[derive(Debug, Clone, PartialEq)]
pub struct BestRecord {
    pub x: Vec<f64>,
    pub fitness: Fitness,
    /// Zero until the first improvement.
    pub d: Vec<f64>,
}

impl BestRecord {
    pub fn new(x: Vec<f64>, fitness: Fitness) -> Self {
        let n = x.len();
        Self {
            x,
            fitness,
            d: vec![0.0; n],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SquadState {
    pub x: Vec<f64>,
    /// Fitness at `x`. May get worse through chance acceptance.
    pub fitness: Fitness,
    pub w: Vec<f64>,
    pub m: Vec<f64>,
    pub v: Vec<f64>,
    /// Lowest fitness this squad has evaluated.
    pub best: BestRecord,
    pub evaluations: u64,
}

impl SquadState {
    /// Squad at an already evaluated position, with zero moments.
    pub fn new(x: Vec<f64>, fitness: Fitness, w: Vec<f64>) -> Self {
        let n = x.len();
        Self {
            best: BestRecord::new(x.clone(), fitness),
            x,
            fitness,
            w,
            m: vec![0.0; n],
            v: vec![0.0; n],
            evaluations: 0,
        }
    }

    /// Adaptive-moment update of the estimator weights along `g`.
    pub fn update_weights(&mut self, g: &[f64]) {
        estimator::adaptive_update(&mut self.w, &mut self.m, &mut self.v, g);
    }
}

/// Optimizer settings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub population: usize,
    pub max_iterations: usize,
    /// Probability of accepting a non-improving candidate.
    pub acceptance: f64,
    /// Process squads on the rayon pool. Results are identical either way.
    pub parallel: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            population: 50,
            max_iterations: 500,
            acceptance: DEFAULT_ACCEPTANCE,
            parallel: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.population == 0 {
            return Err(Error::Config("population must be >= 1".into()));
        }
        if self.max_iterations == 0 {
            return Err(Error::Config("max_iterations must be >= 1".into()));
        }
        if !(0.0..=1.0).contains(&self.acceptance) {
            return Err(Error::Config(format!(
                "acceptance probability must be in [0, 1], got {}",
                self.acceptance
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SwarmState {
    pub squads: Vec<SquadState>,
    /// One stream per squad, derived from the run seed and the squad index.
    pub streams: Vec<RandomSource>,
    pub global: BestRecord,
    pub t: usize,
    pub t_max: usize,
    pub acceptance: f64,
    pub parallel: bool,
}

impl SwarmState {
    /// Draw `population` positions uniformly in bounds and weights in
    /// `[-1, 1)`, evaluate them and seed the best records.
    pub fn initialize(
        problem: &ObjectiveProblem,
        config: &RunConfig,
        rng: &RandomSource,
        hook: &dyn EvalHook,
    ) -> Result<Self> {
        config.validate()?;
        let bounds = problem.bounds();
        let mut streams: Vec<RandomSource> = (0..config.population)
            .map(|i| rng.split(i as u64))
            .collect();
        let squads = streams
            .iter_mut()
            .map(|stream| {
                let x = stream.uniform_in_box(bounds.lower(), bounds.upper());
                let w = stream.uniform_vector(-1.0, 1.0, problem.dim())?;
                let fitness = problem.evaluate(&x, stream)?;
                hook.on_evaluate(&x, &fitness);
                let mut squad = SquadState::new(x, fitness, w);
                squad.evaluations = 1;
                Ok(squad)
            })
            .collect::<Result<Vec<_>>>()?;
        let global = leader(&squads).best.clone();
        Ok(Self {
            squads,
            streams,
            global,
            t: 0,
            t_max: config.max_iterations,
            acceptance: config.acceptance,
            parallel: config.parallel,
        })
    }

    pub fn evaluations(&self) -> u64 {
        self.squads.iter().map(|s| s.evaluations).sum()
    }

    pub fn is_finished(&self) -> bool {
        self.t >= self.t_max
    }
}

/// Squad holding the lowest best fitness; ties go to the lowest index.
fn leader(squads: &[SquadState]) -> &SquadState {
    squads
        .iter()
        .reduce(|a, b| {
            if b.best.fitness.value < a.best.fitness.value {
                b
            } else {
                a
            }
        })
        .expect("population >= 1")
}

fn advance_squad(
    squad: &mut SquadState,
    rng: &mut RandomSource,
    ctx: &IterationContext<'_>,
    acceptance: f64,
) -> Result<Decision> {
    let guided = sit_and_wait(squad, ctx, rng)?;
    let b = random_walk(squad, ctx, rng)?;
    let c = encircle(squad, ctx, rng)?;
    let cands = CandidateSet {
        a: guided.candidate,
        b,
        c,
    };
    Ok(discriminant(squad, cands, &guided.d_hat, acceptance, rng))
}

/// One iteration over every squad, then merge the swarm best.
pub fn step(swarm: &mut SwarmState, problem: &ObjectiveProblem, hook: &dyn EvalHook) -> Result<()> {
    if swarm.is_finished() {
        return Err(Error::domain(format!(
            "step called at t = {} with t_max = {}",
            swarm.t, swarm.t_max
        )));
    }
    let global = swarm.global.clone();
    let ctx = IterationContext {
        problem,
        global: &global,
        t: swarm.t,
        t_max: swarm.t_max,
        hook,
    };
    let acceptance = swarm.acceptance;
    if swarm.parallel {
        swarm
            .squads
            .par_iter_mut()
            .zip(swarm.streams.par_iter_mut())
            .try_for_each(|(squad, rng)| advance_squad(squad, rng, &ctx, acceptance).map(drop))?;
    } else {
        for (squad, rng) in swarm.squads.iter_mut().zip(swarm.streams.iter_mut()) {
            advance_squad(squad, rng, &ctx, acceptance)?;
        }
    }
    let best = &leader(&swarm.squads).best;
    if best.fitness.value < swarm.global.fitness.value {
        swarm.global = best.clone();
    }
    swarm.t += 1;
    Ok(())
}

/// Outcome of one seeded run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub seed: u64,
    pub best_position: Vec<f64>,
    pub best_fitness: Fitness,
    /// Best fitness after initialization, before the first iteration.
    pub initial_best: f64,
    /// Swarm best after each iteration; length `max_iterations`.
    pub trace: Vec<f64>,
    pub evaluations: u64,
}

/// Run the optimizer to completion.
pub fn optimize(
    problem: &ObjectiveProblem,
    config: &RunConfig,
    rng: RandomSource,
) -> Result<TrialReport> {
    optimize_with_hook(problem, config, rng, &NoHook)
}

/// [`optimize`] with an observer on every evaluation.
pub fn optimize_with_hook(
    problem: &ObjectiveProblem,
    config: &RunConfig,
    rng: RandomSource,
    hook: &dyn EvalHook,
) -> Result<TrialReport> {
    let mut swarm = SwarmState::initialize(problem, config, &rng, hook)?;
    let initial_best = swarm.global.fitness.value;
    let mut trace = Vec::with_capacity(swarm.t_max);
    while !swarm.is_finished() {
        step(&mut swarm, problem, hook)?;
        trace.push(swarm.global.fitness.value);
    }
    Ok(TrialReport {
        seed: rng.seed(),
        best_position: swarm.global.x.clone(),
        best_fitness: swarm.global.fitness,
        initial_best,
        trace,
        evaluations: swarm.evaluations(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problems::make_benchmark;
    use std::sync::atomic::{AtomicU64, Ordering};

    fn small(pop: usize, iters: usize) -> RunConfig {
        RunConfig {
            population: pop,
            max_iterations: iters,
            ..RunConfig::default()
        }
    }

    #[test]
    fn config_errors_come_before_evaluation() {
        let p = make_benchmark(1, 2).unwrap();
        let calls = AtomicU64::new(0);
        let hook = |_: &[f64], _: &Fitness| {
            calls.fetch_add(1, Ordering::Relaxed);
        };
        for cfg in [
            small(0, 10),
            small(5, 0),
            RunConfig {
                acceptance: 1.5,
                ..small(5, 5)
            },
        ] {
            let err = optimize_with_hook(&p, &cfg, RandomSource::new(1), &hook).unwrap_err();
            assert!(matches!(err, Error::Config(_)));
        }
        assert_eq!(calls.load(Ordering::Relaxed), 0);
    }

    #[test]
    fn single_iteration_run() {
        let p = make_benchmark(1, 5).unwrap();
        let r = optimize(&p, &small(8, 1), RandomSource::new(3)).unwrap();
        assert_eq!(r.trace.len(), 1);
        assert!(r.trace[0] <= r.initial_best);
        assert_eq!(r.evaluations, 8 + 3 * 8);
    }

    #[test]
    fn step_counts_three_evaluations_per_squad() {
        let p = make_benchmark(2, 4).unwrap();
        let mut swarm =
            SwarmState::initialize(&p, &small(7, 5), &RandomSource::new(2), &NoHook).unwrap();
        assert_eq!(swarm.evaluations(), 7);
        let before = swarm.global.fitness.value;
        step(&mut swarm, &p, &NoHook).unwrap();
        assert_eq!(swarm.evaluations(), 7 + 21);
        assert!(swarm.global.fitness.value <= before);
        assert_eq!(swarm.t, 1);
    }

    #[test]
    fn step_past_end_is_rejected() {
        let p = make_benchmark(1, 2).unwrap();
        let mut swarm =
            SwarmState::initialize(&p, &small(2, 1), &RandomSource::new(2), &NoHook).unwrap();
        step(&mut swarm, &p, &NoHook).unwrap();
        assert!(step(&mut swarm, &p, &NoHook).is_err());
    }

    #[test]
    fn global_best_is_min_of_squad_bests() {
        let p = make_benchmark(5, 6).unwrap();
        let mut swarm =
            SwarmState::initialize(&p, &small(10, 20), &RandomSource::new(4), &NoHook).unwrap();
        while !swarm.is_finished() {
            step(&mut swarm, &p, &NoHook).unwrap();
            let min = swarm
                .squads
                .iter()
                .map(|s| s.best.fitness.value)
                .fold(f64::INFINITY, f64::min);
            assert_eq!(swarm.global.fitness.value, min);
        }
    }

    #[test]
    fn same_seed_same_report() {
        let p = make_benchmark(7, 10).unwrap();
        let a = optimize(&p, &small(10, 30), RandomSource::new(11)).unwrap();
        let b = optimize(&p, &small(10, 30), RandomSource::new(11)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parallel_matches_sequential() {
        let p = make_benchmark(7, 10).unwrap();
        let seq = optimize(&p, &small(16, 40), RandomSource::new(8)).unwrap();
        let par = optimize(
            &p,
            &RunConfig {
                parallel: true,
                ..small(16, 40)
            },
            RandomSource::new(8),
        )
        .unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn existing_squads_unaffected_by_population_growth() {
        let p = make_benchmark(1, 3).unwrap();
        let a = SwarmState::initialize(&p, &small(3, 1), &RandomSource::new(6), &NoHook).unwrap();
        let b = SwarmState::initialize(&p, &small(5, 1), &RandomSource::new(6), &NoHook).unwrap();
        for k in 0..3 {
            assert_eq!(a.squads[k], b.squads[k]);
        }
    }
}
