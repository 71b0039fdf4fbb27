use wres_core::clifford::GeneratorKind;
use wres_core::drivers::interior::{commutator_trace, riemann_term, v_norm_sq, v_star_norm_sq};
use wres_core::drivers::{build_e_prime, interior_wres, InteriorVariant, VStarMode};
use wres_core::numcheck::cliff::NumericClifford;
use wres_core::{GaussianRational, Generator, Poly};

fn s() -> Poly {
    Poly::gen(Generator::S)
}

fn q(num: i64, den: i64) -> GaussianRational {
    GaussianRational::from_frac(num, den)
}

fn pi(k: u32) -> Poly {
    Poly::gen(Generator::Pi).pow(k)
}

fn trace_w(n: usize) -> Poly {
    let mut acc = Poly::zero();
    for i in 1..=n {
        acc.add_assign_ref(&Poly::gen(Generator::W(i as u8, i as u8)));
    }
    acc
}

/// Coefficient of `V(1)²`, which by symmetry is the `|v|²` coefficient.
fn v1_sq_coefficient(p: &Poly) -> GaussianRational {
    let m = Poly::gen(Generator::V(1)).pow(2);
    let (mono, _) = m.terms().next().unwrap();
    p.coefficient(mono)
}

#[test]
fn dv2_in_dimension_four() {
    let r = interior_wres(4, InteriorVariant::Dv2, VStarMode::Dual).unwrap();
    let expect = &pi(2).scale(&q(32, 1)) * &(&s().scale(&q(-4, 3)) - &v_norm_sq(4).scale(&q(4, 1)));
    assert_eq!(r.total, expect);
}

#[test]
fn squared_operators_in_general_dimension() {
    for n in [4usize, 6] {
        let scale = q(1 << n, 1);
        for (variant, norm) in [(InteriorVariant::Dv2, v_norm_sq(n)), (InteriorVariant::DvStar2, v_star_norm_sq(n))] {
            let r = interior_wres(n, variant, VStarMode::Independent).unwrap();
            let want = (&s().scale(&q(-1, 12)) - &norm.scale(&q(1, 4))).scale(&scale);
            assert_eq!(r.trace, want, "{n} {variant:?}");
            assert_eq!(r.total, &r.prefactor * &want);
        }
    }
}

#[test]
fn mixed_operator_norm_coefficient() {
    for n in [4usize, 6] {
        let r = interior_wres(n, InteriorVariant::DvStarDv, VStarMode::Dual).unwrap();
        assert_eq!(v1_sq_coefficient(&r.trace), q((1 << n) * (n as i64 - 3), 4));
    }
}

#[test]
fn mixed_operator_in_dimension_six() {
    let r = interior_wres(6, InteriorVariant::DvStarDv, VStarMode::Dual).unwrap();
    let head = &s().scale(&q(-16, 3)) + &v_norm_sq(6).scale(&q(48, 1));
    let residual = &r.total - &(&pi(3).scale(&q(128, 1)) * &head);
    // whatever is left only involves the covariant derivative of v
    for g in residual.generators() {
        assert!(matches!(g, Generator::W(..) | Generator::Pi), "{g:?}");
    }
    assert_eq!(residual, &pi(3).scale(&q(128, 1)) * &trace_w(6).scale(&q(-32, 1)));
}

#[test]
fn curvature_term_is_traceless() {
    for n in [4usize, 6] {
        assert!(riemann_term(n).trace().is_zero());
        // brute force: antisymmetrized traces of c̄c̄cc on Kronecker matrices
        let cl = NumericClifford::new(n);
        let mut sums = std::collections::HashMap::new();
        for i in 1..=n {
            for j in 1..=n {
                let bar = &cl.cbar[i - 1] * &cl.cbar[j - 1];
                for k in 1..=n {
                    for l in 1..=n {
                        let Some((sign, g)) = Generator::riemann(i as u8, j as u8, k as u8, l as u8) else { continue };
                        let t = (&bar * &(&cl.c[k - 1] * &cl.c[l - 1])).trace();
                        *sums.entry(g).or_insert(num_complex::Complex64::new(0.0, 0.0)) += t * sign as f64;
                    }
                }
            }
        }
        assert!(sums.values().all(|t| t.norm() < 1e-9));
    }
}

#[test]
fn perturbation_commutators_are_traceless() {
    let kinds = [GeneratorKind::Exterior, GeneratorKind::Interior, GeneratorKind::Clifford, GeneratorKind::CliffordBar];
    for n in [4usize, 6] {
        for j in 1..=n {
            for kind in kinds {
                assert!(commutator_trace(n, j, kind).is_zero());
            }
        }
    }
}

#[test]
fn endomorphism_parts_add_up() {
    let d = build_e_prime(4, InteriorVariant::Dv2);
    assert!(d.derivative.trace().is_zero());
    assert!(d.riemann.trace().is_zero());
}
