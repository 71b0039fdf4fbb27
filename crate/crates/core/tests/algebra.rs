use std::collections::HashMap;

use num_complex::Complex64;
use proptest::prelude::*;
use wres_core::{GaussianRational, Generator, Monomial, Poly};

const POOL: [Generator; 7] = [
    Generator::H,
    Generator::S,
    Generator::V(1),
    Generator::V(4),
    Generator::Xi(1),
    Generator::Xi(2),
    Generator::Xi(3),
];

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((0..POOL.len(), 1u16..3), 0..3)
        .prop_map(|fs| Monomial::from_factors(fs.into_iter().map(|(g, e)| (POOL[g], e))))
}

fn coefficient() -> impl Strategy<Value = GaussianRational> {
    (-6i64..7, 1i64..4, -6i64..7, 1i64..4).prop_map(|(a, b, c, d)| GaussianRational::from_parts(a, b, c, d))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(), coefficient()), 0..5).prop_map(Poly::from_terms)
}

fn assignment() -> impl Strategy<Value = HashMap<Generator, Complex64>> {
    prop::collection::vec((0.5f64..1.5, -1.0f64..1.0), POOL.len())
        .prop_map(|vals| POOL.iter().zip(vals).map(|(g, (re, im))| (*g, Complex64::new(re, im))).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(a.mul_ref(&b).mul_ref(&c), a.mul_ref(&b.mul_ref(&c)));
        prop_assert_eq!(a.mul_ref(&(&b + &c)), &a.mul_ref(&b) + &a.mul_ref(&c));
        prop_assert_eq!(a.mul_ref(&b), b.mul_ref(&a));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn sphere_normal_form_is_idempotent(a in poly(), n in 3usize..7) {
        let once = a.sphere_normal_form(n);
        prop_assert_eq!(once.sphere_normal_form(n), once);
    }

    #[test]
    fn leibniz_rule(a in poly(), b in poly(), g in 0..POOL.len()) {
        let g = POOL[g];
        let lhs = a.mul_ref(&b).diff(g);
        let rhs = &a.diff(g).mul_ref(&b) + &a.mul_ref(&b.diff(g));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_is_multiplicative(a in poly(), b in poly(), vals in assignment()) {
        let ab = a.mul_ref(&b).eval_numeric(&vals).unwrap();
        let prod = a.eval_numeric(&vals).unwrap() * b.eval_numeric(&vals).unwrap();
        prop_assert!((ab - prod).norm() <= 1e-10 * prod.norm().max(1.0));
    }
}

#[test]
fn evaluation_examples() {
    let h = Poly::gen(Generator::H);
    let vals = HashMap::from([(Generator::H, Complex64::new(2.0, 0.0))]);
    assert_eq!(h.pow(2).eval_numeric(&vals).unwrap(), Complex64::new(4.0, 0.0));
    let pi = HashMap::from([(Generator::Pi, Complex64::new(3.14159265358979, 0.0))]);
    assert_eq!(Poly::gen(Generator::Pi).eval_numeric(&pi).unwrap().re, 3.14159265358979);
}

#[test]
fn fifty_term_evaluation_matches_termwise_sum() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(50);
    let mut terms = Vec::new();
    while terms.len() < 50 {
        let m = Monomial::from_factors(POOL.iter().map(|g| (*g, rng.random_range(0u16..3))).filter(|(_, e)| *e > 0));
        if terms.iter().any(|(t, _)| *t == m) {
            continue;
        }
        let c = GaussianRational::from_parts(rng.random_range(-9..10), rng.random_range(1..5), rng.random_range(-9..10), 7);
        if c.is_zero() {
            continue;
        }
        terms.push((m, c));
    }
    let p = Poly::from_terms(terms.clone());
    assert_eq!(p.len(), 50);
    let vals: HashMap<Generator, Complex64> =
        POOL.iter().map(|g| (*g, Complex64::new(rng.random_range(0.5..1.5), rng.random_range(-0.5..0.5)))).collect();
    // termwise in double precision from the coefficient strings
    let mut expect = Complex64::new(0.0, 0.0);
    for (m, c) in &terms {
        let mut t = c.to_complex();
        for (g, e) in m.factors() {
            t *= vals[g].powu(*e as u32);
        }
        expect += t;
    }
    let got = p.eval_numeric(&vals).unwrap();
    assert!((got - expect).norm() <= 1e-12 * expect.norm());
}

#[test]
fn missing_generator_is_named() {
    let p = Poly::gen(Generator::V(3));
    let err = p.eval_numeric(&HashMap::new()).unwrap_err();
    assert_eq!(err, wres_core::Error::MissingAssignment(Generator::V(3)));
}
