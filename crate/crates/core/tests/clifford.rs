use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wres_core::clifford::{self, c, c_xi_prime, cbar, CliffordOp};
use wres_core::geometry::GeometryTable;
use wres_core::{Generator, Poly};

fn random_op(rng: &mut ChaCha8Rng, n: usize) -> CliffordOp {
    let mut out = CliffordOp::zero(n);
    for _ in 0..3 {
        let mut term = CliffordOp::identity(n);
        for _ in 0..rng.random_range(1..4) {
            let j = rng.random_range(1..=n);
            let g = if rng.random_bool(0.5) { c(n, j) } else { cbar(n, j) };
            term = term.mul(&g);
        }
        out = out.add(&term.scale(&Poly::int(rng.random_range(-3..4))));
    }
    out
}

#[test]
fn dimension_six_traces() {
    assert_eq!(CliffordOp::identity(6).trace(), Poly::int(64));
    assert_eq!(c(6, 6).mul(&c(6, 6)).trace(), Poly::int(-64));
    let cx = c_xi_prime(6);
    assert_eq!(cx.mul(&cx).trace_on_sphere(), Poly::int(-64));
}

#[test]
fn normal_derivative_of_c_xi_prime() {
    let h = Poly::gen(Generator::H);
    for (n, want) in [(4usize, -8), (6, -32)] {
        let geo = GeometryTable::new(n);
        let cx = c_xi_prime(n);
        let t = cx.scale(&geo.dxn_of_cxi).mul(&cx).trace_on_sphere();
        assert_eq!(t, Poly::int(want) * h.clone());
    }
}

#[test]
fn trace_is_cyclic() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let (x, y) = (random_op(&mut rng, 4), random_op(&mut rng, 4));
        assert_eq!(x.mul(&y).trace(), y.mul(&x).trace());
    }
}

#[test]
fn odd_products_are_traceless() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in [4usize, 6] {
        for len in [1usize, 3, 5] {
            let mut p = CliffordOp::identity(n);
            for _ in 0..len {
                p = p.mul(&c(n, rng.random_range(1..=n)));
            }
            assert!(p.trace().is_zero());
        }
    }
}

#[test]
fn interior_action_anticommutes_to_component() {
    let n = 6;
    let v = clifford::l_v(n);
    for i in 1..=n {
        let expect = CliffordOp::scalar(n, Poly::gen(Generator::V(i as u8)));
        assert_eq!(c(n, i).anticommutator(&v), expect);
    }
}
