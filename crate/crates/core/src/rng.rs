//! Seeded, splittable uniform random source.
//!
//! Every stochastic quantity in a run (initial positions, estimator weights,
//! strategy coefficients, acceptance draws, objective noise) is drawn from a
//! [`RandomSource`]. A run keyed by `(seed, config)` is therefore bit-identical
//! across repetitions on one platform.

use std::f64::consts::FRAC_PI_2;

use rand::distr::{Distribution, Uniform};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Margin kept from the ends of `(-pi/2, pi/2)` so `tan` stays below ~1e6.
pub const ANGLE_MARGIN: f64 = 1e-6;

/// Default master seed used by the CLI.
pub const DEFAULT_SEED: u64 = 42;

/// Seeded stream of uniform reals. Single owner; clone to fork an identical
/// copy, [`split`](RandomSource::split) to derive an independent child.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

/// SplitMix64 finalizer.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Child seed for stream `index` under `seed`: `mix64(seed + (index + 1) * phi64)`.
///
/// Children depend only on `(seed, index)`, so adding squads or trials never
/// reorders the draws of existing ones.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;
    mix64(seed.wrapping_add(GOLDEN.wrapping_mul(index.wrapping_add(1))))
}

impl RandomSource {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Independent child stream number `index`, seeded by [`derive_seed`].
    pub fn split(&self, index: u64) -> RandomSource {
        RandomSource::new(derive_seed(self.seed, index))
    }

    /// A draw from `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> Result<f64> {
        let dist =
            Uniform::new(lo, hi).map_err(|e| Error::domain(format!("uniform({lo}, {hi}): {e}")))?;
        Ok(dist.sample(&mut self.rng))
    }

    /// `n` independent draws from `[lo, hi)`.
    pub fn uniform_vector(&mut self, lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
        if n == 0 {
            return Err(Error::domain("uniform_vector needs n >= 1"));
        }
        let dist = Uniform::new(lo, hi)
            .map_err(|e| Error::domain(format!("uniform_vector({lo}, {hi}): {e}")))?;
        Ok((0..n).map(|_| dist.sample(&mut self.rng)).collect())
    }

    /// A draw from `[0, 1)`.
    pub fn unit(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    /// A draw from `[0, 0.5)`, the range of the strategy mixing coefficients.
    pub fn half_unit(&mut self) -> f64 {
        0.5 * self.unit()
    }

    /// An angle from `(-pi/2, pi/2)` kept [`ANGLE_MARGIN`] away from both ends.
    pub fn open_half_pi(&mut self) -> f64 {
        let lo = -FRAC_PI_2 + ANGLE_MARGIN;
        let hi = FRAC_PI_2 - ANGLE_MARGIN;
        lo + (hi - lo) * self.unit()
    }

    /// A per-dimension draw from `[lower[k], upper[k])`.
    pub(crate) fn uniform_in_box(&mut self, lower: &[f64], upper: &[f64]) -> Vec<f64> {
        lower
            .iter()
            .zip(upper)
            .map(|(&lo, &hi)| (lo + (hi - lo) * self.unit()).min(hi).max(lo))
            .collect()
    }
}
