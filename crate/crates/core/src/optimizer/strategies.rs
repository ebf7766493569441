//! The three candidate generators and the acceptance rule.

use crate::error::{Error, Result};
use crate::optimizer::estimator::{direction_correction, integrated_gradient, practical_gradient};
use crate::optimizer::{BestRecord, EvalHook, SquadState};
use crate::problems::{Fitness, ObjectiveProblem};
use crate::rng::RandomSource;

/// Probability of moving to a candidate that does not improve on the squad.
pub const DEFAULT_ACCEPTANCE: f64 = 0.3;

/// Read-only view shared by every squad during one iteration.
#[derive(Clone, Copy)]
pub struct IterationContext<'a> {
    pub problem: &'a ObjectiveProblem,
    /// Swarm best as of the start of the iteration.
    pub global: &'a BestRecord,
    pub t: usize,
    pub t_max: usize,
    pub hook: &'a dyn EvalHook,
}

impl IterationContext<'_> {
    /// Clamp `x` into bounds, evaluate it and report it to the hook.
    pub(crate) fn evaluate(
        &self,
        squad: &mut SquadState,
        mut x: Vec<f64>,
        rng: &mut RandomSource,
    ) -> Result<Candidate> {
        self.problem.bounds().clamp_in_place(&mut x);
        let fitness = self.problem.evaluate(&x, rng)?;
        squad.evaluations += 1;
        self.hook.on_evaluate(&x, &fitness);
        Ok(Candidate { x, fitness })
    }

    /// Step-size decay of the guided step, `exp(-t / (0.1 t_max))`.
    pub fn decay(&self) -> f64 {
        (-(self.t as f64) / (0.1 * self.t_max as f64)).exp()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub x: Vec<f64>,
    pub fitness: Fitness,
}

/// The guided candidate together with the estimator direction it was built from.
#[derive(Debug, Clone)]
pub struct GuidedCandidate {
    pub candidate: Candidate,
    /// Unit direction of the estimator gradient before blending.
    pub d_hat: Vec<f64>,
    /// Blended gradient the step followed.
    pub g: Vec<f64>,
}

/// Guided step.
///
/// Builds the estimator direction, corrects it toward the squad and swarm
/// bests, blends the three with fresh `r_h, r_g` in `[0, 0.5)`, updates the
/// squad's weights with the blend and steps
/// `x + exp(-t / (0.1 t_max)) * 0.1 * hop * g`.
pub fn sit_and_wait(
    squad: &mut SquadState,
    ctx: &IterationContext<'_>,
    rng: &mut RandomSource,
) -> Result<GuidedCandidate> {
    if ctx.t >= ctx.t_max {
        return Err(Error::domain("sit_and_wait called past the last iteration"));
    }
    let y = squad.fitness.value;
    let (_, d_hat) = practical_gradient(&squad.w, &squad.x, y)?;
    let d_h = direction_correction(
        &squad.x,
        y,
        &squad.best.x,
        squad.best.fitness.value,
        &squad.best.d,
    )?;
    let d_g = direction_correction(
        &squad.x,
        y,
        &ctx.global.x,
        ctx.global.fitness.value,
        &ctx.global.d,
    )?;
    let r_h = rng.half_unit();
    let r_g = rng.half_unit();
    let mut g = integrated_gradient(&d_hat, &d_h, &d_g, r_h, r_g)?;
    // Fitness gaps near f64::MAX can overflow the corrections.
    if g.iter().any(|c| !c.is_finite()) {
        g.clone_from(&d_hat);
    }
    squad.update_weights(&g);

    let scale = ctx.decay() * 0.1;
    let hop = ctx.problem.bounds().hop();
    let x: Vec<f64> = squad
        .x
        .iter()
        .zip(hop.iter().zip(&g))
        .map(|(xk, (h, gk))| xk + scale * h * gk)
        .collect();
    let candidate = ctx.evaluate(squad, x, rng)?;
    Ok(GuidedCandidate {
        candidate,
        d_hat,
        g,
    })
}

/// Heavy-tailed random walk `x + tan(r_b) * hop / (1 + t)`, with `r_b` drawn
/// per dimension from `(-pi/2, pi/2)`.
pub fn random_walk(
    squad: &mut SquadState,
    ctx: &IterationContext<'_>,
    rng: &mut RandomSource,
) -> Result<Candidate> {
    let hop = ctx.problem.bounds().hop();
    let shrink = 1.0 + ctx.t as f64;
    let x: Vec<f64> = squad
        .x
        .iter()
        .zip(&hop)
        .map(|(xk, h)| xk + rng.open_half_pi().tan() * h / shrink)
        .collect();
    ctx.evaluate(squad, x, rng)
}

/// Encircling move with fresh `r_h, r_g` in `[0, 0.5)`:
/// `(1 - r_h - r_g) x + r_h (x_ibest - x) + r_g (x_gbest - x)`.
pub fn encircle(
    squad: &mut SquadState,
    ctx: &IterationContext<'_>,
    rng: &mut RandomSource,
) -> Result<Candidate> {
    let r_h = rng.half_unit();
    let r_g = rng.half_unit();
    let x = encircle_position(&squad.x, &squad.best.x, &ctx.global.x, r_h, r_g);
    ctx.evaluate(squad, x, rng)
}

/// Unclamped encircling position for given coefficients.
pub fn encircle_position(
    x: &[f64],
    x_ibest: &[f64],
    x_gbest: &[f64],
    r_h: f64,
    r_g: f64,
) -> Vec<f64> {
    let own = 1.0 - r_h - r_g;
    x.iter()
        .zip(x_ibest.iter().zip(x_gbest))
        .map(|(xk, (ib, gb))| own * xk + r_h * (ib - xk) + r_g * (gb - xk))
        .collect()
}

#[derive(Debug, Clone)]
pub struct CandidateSet {
    pub a: Candidate,
    pub b: Candidate,
    pub c: Candidate,
}

impl CandidateSet {
    /// Index (0 = a, 1 = b, 2 = c) and candidate with the lowest fitness;
    /// ties go to the lowest index.
    pub fn best(&self) -> (usize, &Candidate) {
        let mut best = (0, &self.a);
        for (k, cand) in [(1, &self.b), (2, &self.c)] {
            if cand.fitness.value < best.1.fitness.value {
                best = (k, cand);
            }
        }
        best
    }

    pub fn into_vec(self) -> Vec<Candidate> {
        vec![self.a, self.b, self.c]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    /// The best candidate beat the squad's current fitness.
    Improved,
    /// The best candidate was no better but was taken by chance.
    AcceptedWorse,
    Rejected,
}

/// Acceptance rule using a fresh `[0, 1)` draw from `rng`.
pub fn discriminant(
    squad: &mut SquadState,
    cands: CandidateSet,
    d_hat: &[f64],
    acceptance: f64,
    rng: &mut RandomSource,
) -> Decision {
    let draw = rng.unit();
    discriminant_with_draw(squad, cands, d_hat, acceptance, draw)
}

/// Acceptance rule with an explicit draw.
///
/// The best candidate replaces the squad's position when it is strictly
/// better than the current fitness or when `draw < acceptance`. The squad
/// best only moves on a strict improvement of the best-ever fitness, and then
/// records `d_hat` as its direction.
pub fn discriminant_with_draw(
    squad: &mut SquadState,
    cands: CandidateSet,
    d_hat: &[f64],
    acceptance: f64,
    draw: f64,
) -> Decision {
    let (index, best) = cands.best();
    let improves = best.fitness.value < squad.fitness.value;
    if !improves && draw >= acceptance {
        return Decision::Rejected;
    }
    let chosen = cands.into_vec().swap_remove(index);
    if chosen.fitness.value < squad.best.fitness.value {
        squad.best = BestRecord {
            x: chosen.x.clone(),
            fitness: chosen.fitness,
            d: d_hat.to_vec(),
        };
    }
    squad.x = chosen.x;
    squad.fitness = chosen.fitness;
    if improves {
        Decision::Improved
    } else {
        Decision::AcceptedWorse
    }
}
