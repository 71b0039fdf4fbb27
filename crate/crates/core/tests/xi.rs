use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use wres_core::clifford;
use wres_core::xi::{sphere_integrate, sphere_moment, MatrixSymbol, RationalXi};
use wres_core::{GaussianRational, Generator, Poly};

fn gi(re: i64, im: i64) -> Poly {
    Poly::constant(GaussianRational::from_parts(re, 1, im, 1))
}

fn random_rational(rng: &mut ChaCha8Rng, a: u32, b: u32, degree: usize) -> RationalXi {
    let num = (0..=degree).map(|_| gi(rng.random_range(-4..5), rng.random_range(-4..5))).collect();
    RationalXi::new(num, a, b)
}

fn eval(f: &RationalXi, x: f64) -> Complex64 {
    f.eval_numeric(Complex64::new(x, 0.0), &HashMap::new()).unwrap()
}

/// Midpoint rule in `θ = atan ξ`; the pulled-back integrand is π-periodic and analytic.
fn trapezoid_real_line(f: &RationalXi, points: usize) -> Complex64 {
    let h = PI / points as f64;
    (0..points)
        .map(|k| {
            let theta = -PI / 2.0 + (k as f64 + 0.5) * h;
            eval(f, theta.tan()) / theta.cos().powi(2)
        })
        .sum::<Complex64>()
        * h
}

fn pi_value(p: &Poly) -> Complex64 {
    let mut env = HashMap::new();
    env.insert(Generator::Pi, Complex64::new(PI, 0.0));
    p.eval_numeric(&env).unwrap()
}

#[test]
fn golden_projections() {
    let n = 4;
    let cp = clifford::c_xi_prime(n);
    let cn = clifford::c(n, n);
    let i = GaussianRational::i();
    // c(ξ)/|ξ|⁴ with c(ξ) = c(ξ') + ξ_n c(dx_n)
    let c_xi = MatrixSymbol::polynomial(n, &[cp.clone(), cn.clone()]);
    let f = c_xi.scale(&RationalXi::new(vec![Poly::one()], 2, 2));
    // hand partial fractions: -[2c(ξ') + i c(dx_n) + i ξ_n c(ξ')] / (4 (ξ_n - i)²)
    let expect = MatrixSymbol::polynomial(n, &[cp.scale_q(&GaussianRational::from_int(2)).add(&cn.scale_q(&i)), cp.scale_q(&i)])
        .scale(&RationalXi::new(vec![Poly::frac(-1, 4)], 2, 0));
    assert_eq!(f.pi_plus().unwrap(), expect);

    let half_h = Poly::frac(1, 2) * Poly::gen(Generator::H);
    let g = MatrixSymbol::from_clifford(&cp.scale(&(Poly::i() * half_h.clone()))).scale(&RationalXi::inv_norm_sq());
    let expect = MatrixSymbol::from_clifford(&cp.scale(&half_h)).scale(&RationalXi::new(vec![Poly::frac(1, 2)], 1, 0));
    assert_eq!(g.pi_plus().unwrap(), expect);
}

#[test]
fn projection_properties_on_random_rationals() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let (a, b) = (rng.random_range(0..4), rng.random_range(0..4));
        if a + b == 0 {
            continue;
        }
        let d = rng.random_range(0..(a + b) as usize);
        let f = random_rational(&mut rng, a, b, d);
        let p = f.pi_plus().unwrap();
        let m = f.pi_minus().unwrap();
        assert_eq!(p.pi_plus().unwrap(), p);
        assert!(m.pi_plus().unwrap().is_zero());
        assert_eq!(p.add(&m), f);
        assert_eq!(p.pole_minus(), 0);
        assert_eq!(m.pole_plus(), 0);
    }
}

#[test]
fn residue_split_on_pure_pole_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..30 {
        let (a, b) = (rng.random_range(1..4), rng.random_range(1..4));
        let up = random_rational(&mut rng, a, 0, a as usize - 1);
        let down = random_rational(&mut rng, 0, b, b as usize - 1);
        let f = up.add(&down);
        assert_eq!(f.pi_plus().unwrap(), up);
        assert_eq!(f.pi_minus().unwrap(), down);
    }
}

#[test]
fn derivatives() {
    let x = RationalXi::xi_n();
    assert_eq!(x.mul(&x).mul(&x).d_xi_n(), RationalXi::constant(Poly::int(3)).mul(&x).mul(&x));
    // (1+ξ²)^{-1}'' = (6ξ² - 2)/(1+ξ²)³
    let d2 = RationalXi::inv_norm_sq().d_xi_n().d_xi_n();
    assert_eq!(d2, RationalXi::new(vec![Poly::int(-2), Poly::zero(), Poly::int(6)], 3, 3));
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        let (a, b) = (rng.random_range(0..3), rng.random_range(0..3));
        let f = random_rational(&mut rng, a, b, 3);
        let d = f.d_xi_n();
        let x0 = rng.random_range(-2.0..2.0);
        let h = 1e-5;
        let fd = (eval(&f, x0 + h) - eval(&f, x0 - h)) / (2.0 * h);
        assert!((fd - eval(&d, x0)).norm() < 1e-5 * (1.0 + fd.norm()));
    }
}

#[test]
fn real_line_integrals_match_quadrature() {
    assert_eq!(RationalXi::new(vec![Poly::one()], 3, 3).integrate_real_line().unwrap(), Poly::frac(3, 8) * Poly::gen(Generator::Pi));
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..50 {
        let (a, b) = (rng.random_range(1..5), rng.random_range(1..5));
        let d = rng.random_range(0..=(a + b - 2) as usize);
        let f = random_rational(&mut rng, a, b, d);
        let exact = pi_value(&f.integrate_real_line().unwrap());
        let numeric = trapezoid_real_line(&f, 4096);
        assert!((exact - numeric).norm() < 1e-9 * (1.0 + numeric.norm()), "{f:?}: {exact} vs {numeric}");
    }
}

#[test]
fn sphere_moments_match_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let n = 5;
    let samples = 200_000;
    let exps = [[2u32, 0, 0, 0], [2, 2, 0, 0], [4, 0, 0, 0], [1, 1, 0, 0]];
    let mut sums = [0.0f64; 4];
    for _ in 0..samples {
        let v: Vec<f64> = (0..n - 1).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let r = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for (s, e) in sums.iter_mut().zip(&exps) {
            *s += v.iter().zip(e).map(|(x, &k)| (x / r).powi(k as i32)).product::<f64>();
        }
    }
    for (s, e) in sums.iter().zip(&exps) {
        let exact = sphere_moment(e, n).to_f64().unwrap();
        assert!((s / samples as f64 - exact).abs() < 5e-3, "{e:?}");
    }
}

#[test]
fn sphere_integrals_factor_constants() {
    let omega = Poly::gen(Generator::Omega);
    let x1 = Poly::gen(Generator::Xi(1));
    assert!(sphere_integrate(&x1, 4).unwrap().is_zero());
    assert_eq!(sphere_integrate(&Poly::one(), 4).unwrap(), omega.clone());
    assert_eq!(sphere_integrate(&x1.pow(2), 4).unwrap(), Poly::frac(1, 3) * omega);
    let q = Poly::gen(Generator::H).pow(2) + Poly::gen(Generator::V(1)) * Poly::i();
    let p = x1.pow(2) * Poly::gen(Generator::Xi(2)).pow(2) + Poly::gen(Generator::Xi(3));
    assert_eq!(sphere_integrate(&(&p * &q), 6).unwrap(), &sphere_integrate(&p, 6).unwrap() * &q);
}
