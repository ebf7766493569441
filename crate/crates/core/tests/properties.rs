use esoa::optimizer::{
    discriminant_with_draw, integrated_gradient, practical_gradient, step, Candidate, CandidateSet,
    NoHook, SquadState, SwarmState,
};
use esoa::problems::{clamp_to_bounds, make_benchmark};
use esoa::{Bounds, Fitness, ObjectiveProblem, RandomSource, RunConfig};
use proptest::prelude::*;

fn point(dim: usize, half: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-half..=half, dim)
}

fn fit(v: f64) -> Fitness {
    Fitness {
        value: v,
        raw_value: v,
        violation: 0.0,
    }
}

proptest! {
    #[test]
    fn clamp_is_idempotent_and_contained(x in prop::collection::vec(-500.0f64..500.0, 4)) {
        let b = Bounds::new(vec![-100.0, 0.0, 3.0, -1.0], vec![100.0, 1.0, 4.0, 1.0]).unwrap();
        let once = clamp_to_bounds(&x, &b).unwrap();
        prop_assert!(b.contains(&once));
        prop_assert_eq!(clamp_to_bounds(&once, &b).unwrap(), once);
    }

    #[test]
    fn benchmarks_are_finite_in_bounds(id in 1usize..=7, seed in any::<u64>(), u in point(30, 1.0)) {
        let p = make_benchmark(id, 30).unwrap();
        let b = p.bounds();
        let x: Vec<f64> = u.iter().zip(b.upper()).map(|(s, h)| s * h).collect();
        let mut rng = RandomSource::new(seed);
        let f = p.evaluate(&x, &mut rng).unwrap();
        prop_assert!(f.value.is_finite());
        prop_assert_eq!(f.violation, 0.0);
        if id < 7 {
            prop_assert_eq!(p.evaluate(&x, &mut RandomSource::new(seed ^ 1)).unwrap(), f);
        }
    }

    #[test]
    fn penalty_grows_with_phi(x0 in 1.01f64..10.0, phi in 0.0f64..1e6, extra in 1e-3f64..1e6) {
        let make = |phi: f64| {
            ObjectiveProblem::new("c", Bounds::symmetric(1, 10.0).unwrap(), |x| x[0])
                .with_constraint(|x| x[0] - 1.0)
                .with_penalty(phi)
                .unwrap()
        };
        let mut rng = RandomSource::new(0);
        let lo = make(phi).evaluate(&[x0], &mut rng).unwrap();
        let hi = make(phi + extra).evaluate(&[x0], &mut rng).unwrap();
        prop_assert!(lo.violation > 0.0);
        prop_assert!(hi.value > lo.value);
    }

    #[test]
    fn feasible_points_are_unpenalized(x in point(3, 1.0)) {
        let p = esoa::problems::spring_problem();
        let b = p.bounds();
        let x: Vec<f64> = x
            .iter()
            .zip(b.lower().iter().zip(b.upper()))
            .map(|(s, (lo, hi))| lo + (hi - lo) * (s + 1.0) / 2.0)
            .collect();
        let f = p.evaluate(&x, &mut RandomSource::new(0)).unwrap();
        if f.violation == 0.0 {
            prop_assert_eq!(f.value, f.raw_value);
        } else {
            prop_assert!(f.value > f.raw_value);
        }
    }

    #[test]
    fn estimator_direction_is_unit_or_zero(
        w in point(6, 5.0),
        x in point(6, 50.0),
        y in -1e3f64..1e3,
    ) {
        let (g, d) = practical_gradient(&w, &x, y).unwrap();
        let n: f64 = d.iter().map(|v| v * v).sum::<f64>().sqrt();
        if g.iter().all(|v| *v == 0.0) {
            prop_assert_eq!(n, 0.0);
        } else {
            prop_assert!((n - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn integrated_gradient_is_affine(
        u in point(5, 3.0),
        r_h in 0.0f64..0.5,
        r_g in 0.0f64..0.5,
    ) {
        let g = integrated_gradient(&u, &u, &u, r_h, r_g).unwrap();
        for (a, b) in g.iter().zip(&u) {
            prop_assert!((a - b).abs() <= 1e-12 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn discriminant_picks_from_candidates_or_stays(
        y in -10.0f64..10.0,
        ys in prop::array::uniform3(-10.0f64..10.0),
        draw in 0.0f64..1.0,
    ) {
        let mut squad = SquadState::new(vec![0.0], fit(y), vec![0.0]);
        let set = CandidateSet {
            a: Candidate { x: vec![1.0], fitness: fit(ys[0]) },
            b: Candidate { x: vec![2.0], fitness: fit(ys[1]) },
            c: Candidate { x: vec![3.0], fitness: fit(ys[2]) },
        };
        discriminant_with_draw(&mut squad, set, &[1.0], 0.3, draw);
        prop_assert!([0.0, 1.0, 2.0, 3.0].contains(&squad.x[0]));
        let lowest = ys.iter().copied().fold(y, f64::min);
        prop_assert_eq!(squad.best.fitness.value, lowest);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn run_invariants(id in 1usize..=7, seed in any::<u64>(), pop in 1usize..8) {
        let p = make_benchmark(id, 6).unwrap();
        let cfg = RunConfig { population: pop, max_iterations: 40, ..RunConfig::default() };
        let mut swarm = SwarmState::initialize(&p, &cfg, &RandomSource::new(seed), &NoHook).unwrap();
        let mut prev_global = swarm.global.fitness.value;
        let mut prev_squad: Vec<f64> = swarm.squads.iter().map(|s| s.best.fitness.value).collect();
        while !swarm.is_finished() {
            step(&mut swarm, &p, &NoHook).unwrap();
            prop_assert!(swarm.global.fitness.value <= prev_global);
            prev_global = swarm.global.fitness.value;
            for (s, prev) in swarm.squads.iter().zip(prev_squad.iter_mut()) {
                prop_assert!(s.best.fitness.value <= *prev);
                prop_assert!(s.best.fitness.value <= s.fitness.value);
                prop_assert!(p.bounds().contains(&s.x));
                *prev = s.best.fitness.value;
            }
        }
        prop_assert_eq!(swarm.evaluations(), (pop + 3 * pop * 40) as u64);
    }
}
