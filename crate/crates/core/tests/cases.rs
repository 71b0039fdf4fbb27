use wres_core::drivers::{boundary_phi, enumerate_cases, BoundaryResult, CaseTuple, VStarMode};
use wres_core::jets::OperatorKind::{D3, Dv, DvStar};
use wres_core::{Generator, Poly};

fn pi_omega(p: Poly) -> Poly {
    p * Poly::gen(Generator::Pi) * Poly::gen(Generator::Omega)
}

fn h() -> Poly {
    Poly::gen(Generator::H)
}

fn v(n: u8) -> Poly {
    Poly::gen(Generator::V(n))
}

fn vs(n: u8) -> Poly {
    Poly::gen(Generator::VS(n))
}

fn case(res: &BoundaryResult, r: i32, l: i32, k: u32, j: u32, alpha: u32) -> Poly {
    let t = CaseTuple::new(r, l, k, j, alpha);
    res.cases.iter().find(|c| c.tuple == t).unwrap_or_else(|| panic!("missing {t}")).contribution.clone()
}

#[test]
fn four_dimensional_cases() {
    let res = boundary_phi(4, Dv, Dv, VStarMode::Dual).unwrap();
    assert!(case(&res, -1, -1, 0, 0, 1).is_zero());
    assert!(res.cases.iter().find(|c| c.tuple.alpha == 1).unwrap().tangential);
    assert_eq!(case(&res, -1, -1, 0, 1, 0), pi_omega(Poly::frac(-3, 2) * h()));
    assert_eq!(case(&res, -1, -1, 1, 0, 0), pi_omega(Poly::frac(3, 2) * h()));
    assert_eq!(case(&res, -2, -1, 0, 0, 0), pi_omega(Poly::frac(9, 2) * h() + Poly::int(2) * v(4)));
    assert_eq!(case(&res, -1, -2, 0, 0, 0), pi_omega(Poly::frac(-9, 2) * h() - Poly::int(2) * v(4)));
    assert!(res.total.is_zero());
}

#[test]
fn four_dimensional_totals() {
    assert!(boundary_phi(4, DvStar, DvStar, VStarMode::Dual).unwrap().total.is_zero());
    assert!(boundary_phi(4, DvStar, DvStar, VStarMode::Independent).unwrap().total.is_zero());
    let mixed = boundary_phi(4, Dv, DvStar, VStarMode::Dual).unwrap();
    assert_eq!(mixed.total, pi_omega(Poly::int(4) * v(4)));
    let mixed = boundary_phi(4, Dv, DvStar, VStarMode::Independent).unwrap();
    assert_eq!(mixed.total, pi_omega(Poly::int(2) * v(4) + Poly::int(2) * vs(4)));
}

#[test]
fn case_pairs_cancel_for_equal_operators() {
    for op in [Dv, DvStar] {
        let res = boundary_phi(4, op, op, VStarMode::Independent).unwrap();
        assert!((case(&res, -1, -1, 0, 1, 0) + case(&res, -1, -1, 1, 0, 0)).is_zero());
        assert!((case(&res, -2, -1, 0, 0, 0) + case(&res, -1, -2, 0, 0, 0)).is_zero());
    }
}

#[test]
fn six_dimensional_leading_cases() {
    let res = boundary_phi(6, Dv, D3, VStarMode::Dual).unwrap();
    assert!(case(&res, -1, -3, 0, 0, 1).is_zero());
    assert_eq!(case(&res, -1, -3, 0, 1, 0), pi_omega(Poly::frac(-15, 2) * h()));
    assert_eq!(case(&res, -1, -3, 1, 0, 0), pi_omega(Poly::frac(25, 2) * h()));
    // only π, Ω, h'(0) and the normal perturbation component can appear
    for c in &res.cases {
        for g in c.contribution.generators() {
            assert!(matches!(g, Generator::H | Generator::V(6) | Generator::Pi | Generator::Omega), "{g:?} in {}", c.tuple);
        }
    }
}

#[test]
fn flat_unperturbed_boundary_has_no_terms() {
    let flat = |p: &Poly| {
        p.substitute(|g| match g {
            Generator::H | Generator::V(_) | Generator::VS(_) => Some(Poly::zero()),
            _ => None,
        })
    };
    for (n, l, r) in [(4, Dv, Dv), (4, DvStar, DvStar), (4, Dv, DvStar), (6, Dv, D3)] {
        let res = boundary_phi(n, l, r, VStarMode::Independent).unwrap();
        for c in &res.cases {
            assert!(flat(&c.contribution).is_zero(), "{n} {l:?} {r:?} {}", c.tuple);
        }
    }
}

#[test]
fn enumeration_obeys_weight_constraint() {
    for (n, p1, p2) in [(4usize, 1, 1), (6, 1, 3), (8, 1, 1)] {
        let tuples = enumerate_cases(n, p1, p2);
        // brute force over a box
        let mut expect = 0;
        for r in -20..=-p1 {
            for l in -20..=-p2 {
                for k in 0..20u32 {
                    for j in 0..20u32 {
                        for a in 0..20u32 {
                            if CaseTuple::new(r, l, k, j, a).weight() == -(n as i32) {
                                expect += 1;
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(tuples.len(), expect);
        assert!(tuples.iter().all(|t| t.weight() == -(n as i32) && t.r <= -p1 && t.l <= -p2));
    }
}

#[test]
fn unsupported_pair_is_rejected() {
    assert!(boundary_phi(6, Dv, Dv, VStarMode::Dual).is_err());
}
