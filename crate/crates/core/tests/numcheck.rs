use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wres_core::drivers::{boundary_phi, CaseTuple, VStarMode};
use wres_core::jets::OperatorKind::{Dv, DvStar};
use wres_core::numcheck::quad::integrate_real_line;
use wres_core::numcheck::sphere::monte_carlo_mean;
use wres_core::numcheck::{crosscheck, numeric_evaluate_case, NumericScenario, QuadConfig, SphereRule, Tolerance};
use wres_core::xi::RationalXi;
use wres_core::{GaussianRational, Generator, Poly};

fn scenario(seed: u64) -> NumericScenario {
    NumericScenario::new(4, seed, VStarMode::Dual, SphereRule::CrossPolytope { rotations: 1 }).unwrap()
}

#[test]
fn quadrature_agrees_with_residues() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let env = HashMap::from([(Generator::Pi, Complex64::new(PI, 0.0))]);
    for _ in 0..50 {
        let (a, b) = (rng.random_range(1..4u32), rng.random_range(1..4u32));
        let d = rng.random_range(0..=(a + b - 2) as usize);
        let num = (0..=d)
            .map(|_| Poly::constant(GaussianRational::from_parts(rng.random_range(-4..5), 1, rng.random_range(-4..5), 1)))
            .collect();
        let f = RationalXi::new(num, a, b);
        let exact = f.integrate_real_line().unwrap().eval_numeric(&env).unwrap();
        let q = integrate_real_line(
            |x| Ok(vec![f.eval_numeric(Complex64::new(x, 0.0), &HashMap::new())?]),
            &QuadConfig::default(),
        )
        .unwrap();
        assert!((q.value[0] - exact).norm() <= 1e-8 * exact.norm().max(1.0), "{f:?}: {} vs {exact}", q.value[0]);
    }
}

#[test]
fn sampled_sphere_moments() {
    for n in [4usize, 6] {
        let m = n - 1;
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        let (odd, se) = monte_carlo_mean(&mut rng, m, 500_000, |x| x[0] * x[1] * x[1] + x[0]);
        assert!(odd.abs() <= 3.0 * se.max(1e-15));
        let (second, _) = monte_carlo_mean(&mut rng, m, 500_000, |x| x[0] * x[0]);
        assert!((second - 1.0 / m as f64).abs() < 0.01 / m as f64, "{second}");
    }
}

#[test]
fn single_cases() {
    let sc = scenario(3);
    let t = numeric_evaluate_case(CaseTuple::new(-1, -1, 0, 0, 1), Dv, Dv, &sc).unwrap();
    assert!(t.value.norm() < 1e-8);
    let t = numeric_evaluate_case(CaseTuple::new(-1, -1, 0, 1, 0), Dv, Dv, &sc).unwrap();
    // -(3/2) π h'(0) Ω with Ω = |S²| = 4π
    let expect = -1.5 * PI * sc.h_prime * 4.0 * PI;
    assert!((t.value.re - expect).abs() < 1e-6 * expect.abs(), "{} vs {expect}", t.value);
    assert!(t.value.im.abs() < 1e-8);
}

#[test]
fn first_pair_crosscheck() {
    let exact = boundary_phi(4, Dv, Dv, VStarMode::Dual).unwrap();
    let table = crosscheck(&exact, &scenario(4), Tolerance::default()).unwrap();
    assert!(table.all_pass(), "{table:#?}");
    assert!(table.numeric_total.norm() < 1e-8);
}

#[test]
fn perturbed_exact_value_is_flagged() {
    let mut exact = boundary_phi(4, Dv, DvStar, VStarMode::Dual).unwrap();
    let bump = Poly::constant(GaussianRational::from_frac(101, 100));
    let target = exact.cases.iter_mut().find(|c| c.tuple == CaseTuple::new(-2, -1, 0, 0, 0)).unwrap();
    target.contribution = &target.contribution * &bump;
    target.fiber = &target.fiber * &bump;
    let table = crosscheck(&exact, &scenario(5), Tolerance::default()).unwrap();
    let flagged: Vec<_> = table.verdicts.iter().filter(|v| !v.pass).map(|v| v.tuple).collect();
    assert_eq!(flagged, vec![CaseTuple::new(-2, -1, 0, 0, 0)]);
}

#[test]
fn verdict_pattern_is_seed_independent() {
    let exact = boundary_phi(4, Dv, DvStar, VStarMode::Dual).unwrap();
    let first = crosscheck(&exact, &scenario(100), Tolerance::default()).unwrap().pattern();
    assert!(first.iter().all(|&p| p));
    for seed in 101..120 {
        assert_eq!(crosscheck(&exact, &scenario(seed), Tolerance::default()).unwrap().pattern(), first, "seed {seed}");
    }
}

#[test]
fn mismatched_scenario_is_rejected() {
    let exact = boundary_phi(4, Dv, Dv, VStarMode::Dual).unwrap();
    let sc = NumericScenario::new(4, 1, VStarMode::Independent, SphereRule::CrossPolytope { rotations: 1 }).unwrap();
    assert!(crosscheck(&exact, &sc, Tolerance::default()).is_err());
}
