//! The per-squad linear fitness estimator and the gradient directions built
//! from it.
//!
//! A squad predicts its fitness as `w . x`. The squared prediction error
//! `e = (w . x - y)^2 / 2` has gradient `(w . x - y) x` with respect to `w`;
//! its direction, blended with corrections pointing relative to the squad
//! and swarm bests, drives the guided step.

use crate::error::{Error, Result};

/// First-moment decay.
pub const BETA1: f64 = 0.9;
/// Second-moment decay.
pub const BETA2: f64 = 0.99;
/// Added under the square root of the second moment.
pub const EPSILON: f64 = 1e-8;
/// Distances below this are treated as coincident points.
pub const MIN_DISTANCE: f64 = 1e-12;

fn check_len(a: &[f64], b: &[f64], what: &str) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::domain(format!(
            "{what}: length mismatch ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    Ok(())
}

/// Predicted fitness `w . x`.
pub fn estimate(w: &[f64], x: &[f64]) -> Result<f64> {
    check_len(w, x, "estimate")?;
    Ok(dot(w, x))
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// `v / |v|`, or zeros when `v` is zero. Scaled by the largest magnitude first
/// so very large vectors do not overflow.
pub fn unit_direction(v: &[f64]) -> Vec<f64> {
    let scale = v.iter().fold(0.0_f64, |m, c| m.max(c.abs()));
    if scale == 0.0 || !scale.is_finite() {
        return vec![0.0; v.len()];
    }
    let scaled: Vec<f64> = v.iter().map(|c| c / scale).collect();
    let n = norm(&scaled);
    scaled.into_iter().map(|c| c / n).collect()
}

/// Gradient of the estimation error with respect to the weights, and its
/// unit direction: `g = (w . x - y) x`, `d = g / |g|` (zero when `g` is zero).
pub fn practical_gradient(w: &[f64], x: &[f64], y: f64) -> Result<(Vec<f64>, Vec<f64>)> {
    check_len(w, x, "practical_gradient")?;
    if !y.is_finite() || w.iter().chain(x).any(|v| !v.is_finite()) {
        return Err(Error::domain("practical_gradient: non-finite input"));
    }
    let residual = dot(w, x) - y;
    let g: Vec<f64> = x.iter().map(|xi| residual * xi).collect();
    let d = unit_direction(&g);
    Ok((g, d))
}

/// Correction relative to a recorded best:
///
/// ```text
/// (x_best - x) / |x_best - x| * (f_best - f) / |x_best - x| + d_best
/// ```
///
/// Returns `d_best` unchanged when the two points coincide.
pub fn direction_correction(
    x: &[f64],
    f: f64,
    x_best: &[f64],
    f_best: f64,
    d_best: &[f64],
) -> Result<Vec<f64>> {
    check_len(x, x_best, "direction_correction")?;
    check_len(x, d_best, "direction_correction")?;
    let delta: Vec<f64> = x_best.iter().zip(x).map(|(b, a)| b - a).collect();
    let dist = norm(&delta);
    if dist.is_nan() || dist < MIN_DISTANCE {
        return Ok(d_best.to_vec());
    }
    let scale = (f_best - f) / dist;
    Ok(delta
        .iter()
        .zip(d_best)
        .map(|(dk, bk)| dk / dist * scale + bk)
        .collect())
}

/// Convex blend `(1 - r_h - r_g) d_hat + r_h d_h + r_g d_g`, with
/// `r_h, r_g` in `[0, 0.5)`.
pub fn integrated_gradient(
    d_hat: &[f64],
    d_h: &[f64],
    d_g: &[f64],
    r_h: f64,
    r_g: f64,
) -> Result<Vec<f64>> {
    check_len(d_hat, d_h, "integrated_gradient")?;
    check_len(d_hat, d_g, "integrated_gradient")?;
    for r in [r_h, r_g] {
        if !(0.0..0.5).contains(&r) {
            return Err(Error::domain(format!(
                "mixing coefficient {r} outside [0, 0.5)"
            )));
        }
    }
    let own = 1.0 - r_h - r_g;
    Ok(d_hat
        .iter()
        .zip(d_h.iter().zip(d_g))
        .map(|(a, (h, g))| own * a + r_h * h + r_g * g)
        .collect())
}

/// Adaptive-moment weight update, in place:
///
/// ```text
/// m <- b1 m + (1 - b1) g
/// v <- b2 v + (1 - b2) g^2
/// w <- w - m / sqrt(v + eps)
/// ```
pub fn adaptive_update(w: &mut [f64], m: &mut [f64], v: &mut [f64], g: &[f64]) {
    debug_assert!(w.len() == g.len() && m.len() == g.len() && v.len() == g.len());
    for k in 0..g.len() {
        m[k] = BETA1 * m[k] + (1.0 - BETA1) * g[k];
        v[k] = BETA2 * v[k] + (1.0 - BETA2) * g[k] * g[k];
        w[k] -= m[k] / (v[k] + EPSILON).sqrt();
    }
}
