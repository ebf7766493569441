//! Constrained engineering design problems.

use crate::error::Result;
use crate::problems::{Bounds, ObjectiveProblem};

/// Penalty parameter used for the Himmelblau problem.
pub const HIMMELBLAU_PHI: f64 = 1e100;
/// Penalty parameter used for the spring design problem.
pub const SPRING_PHI: f64 = 1e5;

pub fn himmelblau_objective(x: &[f64]) -> f64 {
    5.3578547 * x[2] * x[2] + 0.8356891 * x[0] * x[4] + 37.293239 * x[0] - 40792.141
}

/// The three constrained quantities, each required to lie in an interval.
pub fn himmelblau_quantities(x: &[f64]) -> [f64; 3] {
    let [x1, x2, x3, x4, x5] = [x[0], x[1], x[2], x[3], x[4]];
    [
        85.334407 + 0.0056858 * x2 * x5 + 0.0006262 * x1 * x4 - 0.0022053 * x3 * x5,
        80.51249 + 0.0071317 * x2 * x5 + 0.0029955 * x1 * x2 + 0.0021813 * x3 * x3,
        9.300961 + 0.0047026 * x3 * x5 + 0.0012547 * x1 * x3 + 0.0019085 * x3 * x4,
    ]
}

/// Intervals for the three Himmelblau quantities.
pub const HIMMELBLAU_INTERVALS: [(f64, f64); 3] = [(0.0, 92.0), (90.0, 110.0), (20.0, 25.0)];

/// Himmelblau's five-variable nonlinear problem with six one-sided constraints.
pub fn himmelblau_problem() -> ObjectiveProblem {
    let bounds = Bounds::new(
        vec![78.0, 33.0, 27.0, 27.0, 27.0],
        vec![102.0, 45.0, 45.0, 45.0, 45.0],
    )
    .expect("static bounds");
    let mut problem = ObjectiveProblem::new("himmelblau", bounds, himmelblau_objective);
    for (k, &(lo, hi)) in HIMMELBLAU_INTERVALS.iter().enumerate() {
        problem = problem.with_interval_constraint(move |x| himmelblau_quantities(x)[k], lo, hi);
    }
    problem
        .with_penalty(HIMMELBLAU_PHI)
        .expect("static penalty")
}

/// Spring weight `(N + 2) D d^2` for `x = (d, D, N)`: wire diameter, mean
/// coil diameter and number of active coils.
pub fn spring_objective(x: &[f64]) -> f64 {
    (x[2] + 2.0) * x[1] * x[0] * x[0]
}

/// Deflection, shear stress, surge frequency and outer diameter constraints.
pub fn spring_constraints(x: &[f64]) -> [f64; 4] {
    let [d, coil, n] = [x[0], x[1], x[2]];
    [
        1.0 - coil.powi(3) * n / (71785.0 * d.powi(4)),
        (4.0 * coil * coil - d * coil) / (12566.0 * (coil * d.powi(3) - d.powi(4)))
            + 1.0 / (5108.0 * d * d)
            - 1.0,
        1.0 - 140.45 * d / (coil * coil * n),
        (d + coil) / 1.5 - 1.0,
    ]
}

/// Tension/compression spring design.
pub fn spring_problem() -> ObjectiveProblem {
    let bounds = Bounds::new(vec![0.05, 0.25, 2.0], vec![2.0, 1.3, 15.0]).expect("static bounds");
    let mut problem = ObjectiveProblem::new("spring", bounds, spring_objective);
    for k in 0..4 {
        problem = problem.with_constraint(move |x| spring_constraints(x)[k]);
    }
    problem.with_penalty(SPRING_PHI).expect("static penalty")
}

/// Problem keys accepted by [`by_key`].
pub const PROBLEM_KEYS: [&str; 9] = [
    "f1",
    "f2",
    "f3",
    "f4",
    "f5",
    "f6",
    "f7",
    "himmelblau",
    "spring",
];

/// Look up a problem by key. `dim` applies to the benchmarks only; the
/// engineering problems have fixed dimension.
pub fn by_key(key: &str, dim: usize) -> Result<ObjectiveProblem> {
    use crate::error::Error;
    match key {
        "himmelblau" => Ok(himmelblau_problem()),
        "spring" => Ok(spring_problem()),
        _ => match key.strip_prefix('f').and_then(|s| s.parse::<usize>().ok()) {
            Some(id) if (1..=7).contains(&id) => super::make_benchmark(id, dim),
            _ => Err(Error::Config(format!(
                "unknown problem '{key}', expected one of: {}",
                PROBLEM_KEYS.join(", ")
            ))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RandomSource;
    use approx::assert_relative_eq;

    #[test]
    fn himmelblau_corner_raw_value() {
        // 5.3578547*27^2 + 0.8356891*78*27 + 37.293239*78 - 40792.141
        let expected = 5.3578547 * 729.0 + 0.8356891 * 2106.0 + 37.293239 * 78.0 - 40792.141;
        let p = himmelblau_problem();
        let f = p
            .evaluate(&[78.0, 33.0, 27.0, 27.0, 27.0], &mut RandomSource::new(0))
            .unwrap();
        assert_relative_eq!(f.raw_value, expected, max_relative = 1e-12);
        assert!((f.raw_value - (-32217.4)).abs() < 0.1);
    }

    #[test]
    fn himmelblau_shape() {
        let p = himmelblau_problem();
        assert_eq!(p.dim(), 5);
        assert_eq!(p.constraint_count(), 6);
        assert_eq!(p.phi(), 1e100);
        assert!(p.evaluate(&[78.0; 4], &mut RandomSource::new(0)).is_err());
    }

    #[test]
    fn himmelblau_literature_optimum_is_nearly_feasible() {
        let x = [78.0, 33.0, 29.995256025682, 45.0, 36.775812905788];
        let p = himmelblau_problem();
        let f = p.evaluate(&x, &mut RandomSource::new(0)).unwrap();
        assert!(f.raw_value < -30665.0);
        let worst = p
            .constraint_values(&x)
            .unwrap()
            .into_iter()
            .fold(f64::NEG_INFINITY, f64::max);
        assert!(worst < 1e-6, "max constraint {worst}");
    }

    #[test]
    fn spring_shape_and_corner() {
        let p = spring_problem();
        assert_eq!(p.dim(), 3);
        assert_eq!(p.constraint_count(), 4);
        assert_eq!(p.phi(), 1e5);
        let f = p
            .evaluate(&[0.05, 0.25, 2.0], &mut RandomSource::new(0))
            .unwrap();
        assert_relative_eq!(f.raw_value, 0.0025, max_relative = 1e-12);
        assert!(f.violation > 0.0);
        assert!(f.value > f.raw_value);
    }

    #[test]
    fn spring_outer_diameter_boundary() {
        let g = spring_constraints(&[0.5, 1.0, 10.0]);
        assert_eq!(g[3], 0.0);
    }

    #[test]
    fn spring_singular_denominator_is_finite() {
        let p = spring_problem();
        let f = p
            .evaluate(&[0.5, 0.5, 10.0], &mut RandomSource::new(0))
            .unwrap();
        assert!(f.value.is_finite());
        assert!(f.violation > 0.0);
    }

    #[test]
    fn spring_literature_optimum() {
        let x = [0.051689061, 0.356717736, 11.288964740];
        let f = spring_objective(&x);
        assert!((f - 0.012665).abs() < 1e-5);
        assert!(spring_constraints(&x).iter().all(|&g| g < 1e-5));
    }

    #[test]
    fn key_lookup() {
        assert_eq!(by_key("f3", 10).unwrap().dim(), 10);
        assert_eq!(by_key("spring", 30).unwrap().dim(), 3);
        assert!(
            matches!(by_key("nosuch", 30), Err(crate::Error::Config(m)) if m.contains("himmelblau"))
        );
        assert!(by_key("f8", 30).is_err());
        assert!(by_key("f1", 0).is_err());
    }
}
