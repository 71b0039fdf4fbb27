use wres_core::clifford::{self, CliffordOp};
use wres_core::jets::{
    c_xi_prime_jet, compose_symbols, inv_norm_sq_jet, inverse_symbols, jet_d_xi_n, jet_d_xn, jet_mul, norm_sq_jet,
    operator_symbol, symbol_of_d, DiracVariant, GradedSymbol, OperatorKind, SymbolJet,
};
use wres_core::xi::{MatrixSymbol, RationalXi};
use wres_core::{Generator, Poly};

fn h() -> Poly {
    Poly::gen(Generator::H)
}

/// `s / (1 + ξ_n²)^k`
fn over_norm(s: Poly, k: u32) -> RationalXi {
    RationalXi::new(vec![s], k, k)
}

fn c_xi(n: usize) -> MatrixSymbol {
    MatrixSymbol::polynomial(n, &[clifford::c_xi_prime(n), clifford::c(n, n)])
}

fn lift(op: &CliffordOp) -> MatrixSymbol {
    MatrixSymbol::from_clifford(op)
}

#[test]
fn norm_jets_are_inverse() {
    for n in [4, 6] {
        let prod = jet_mul(&norm_sq_jet(n), &inv_norm_sq_jet(n)).unwrap();
        assert_eq!(prod, SymbolJet::identity(n));
    }
}

#[test]
fn leibniz_on_c_xi_prime_square() {
    // c(ξ')² = -|ξ'|²_g, and the tangential metric grows like 1 + h'(0) x_n
    let f = c_xi_prime_jet(4);
    let sq = jet_mul(&f, &f).unwrap();
    assert_eq!(sq.value, MatrixSymbol::identity(4).neg());
    assert_eq!(jet_d_xn(&sq).unwrap(), MatrixSymbol::scalar(4, RationalXi::constant(h().neg_ref())));
}

#[test]
fn leading_inverse_of_dv() {
    for n in [4, 6] {
        let inv = inverse_symbols(n, OperatorKind::Dv).unwrap();
        let i = RationalXi::constant(Poly::i());
        assert_eq!(inv.top.value, c_xi(n).scale(&over_norm(Poly::i(), 1)));
        // i ∂c(ξ')/|ξ|² - i c(ξ) h'(0)/|ξ|⁴
        let cp = clifford::c_xi_prime(n);
        let first = lift(&cp.scale(&(Poly::frac(1, 2) * h()))).scale(&over_norm(Poly::i(), 1));
        let second = c_xi(n).scale(&over_norm(h(), 2)).scale(&i).neg();
        let want = first.add(&second);
        assert_eq!(jet_d_xn(&inv.top).unwrap(), want);
        // ∂_{ξ_n} of the same expression, differentiated by hand
        let xi = RationalXi::xi_n();
        let mixed = lift(&cp)
            .scale(&xi.mul(&over_norm(Poly::i() * h().neg_ref(), 2)))
            .add(&lift(&clifford::c(n, n)).scale(&over_norm(Poly::i() * h().neg_ref(), 2)))
            .add(&c_xi(n).scale(&xi.mul(&over_norm(Poly::int(4) * Poly::i() * h(), 3))));
        assert_eq!(jet_d_xn(&jet_d_xi_n(&inv.top)).unwrap(), mixed);
    }
}

#[test]
fn perturbation_parts_of_order_zero() {
    let n = 4;
    let cn = clifford::c(n, n);
    let (a, b) = clifford::build_connection_ops(n);
    let connection = lift(&a.add(&b));
    let (_, p0) = symbol_of_d(n, DiracVariant::Dv);
    let pert = p0.value.sub(&connection);
    assert_eq!(pert, lift(&clifford::l_v(n)));
    assert_eq!(cn.trace_of_product(&clifford::l_v(n)), Poly::int(8) * Poly::gen(Generator::V(4)));
    let (_, p0) = symbol_of_d(n, DiracVariant::DvStar);
    let pert = p0.value.sub(&connection);
    assert_eq!(pert, lift(&clifford::eps_v_star(n)));
    assert_eq!(cn.trace_of_product(&clifford::eps_v_star(n)), Poly::int(-8) * Poly::gen(Generator::VS(4)));
    assert!(jet_d_xn(&p0).is_err());
}

#[test]
fn subleading_inverse_matches_closed_form() {
    for (n, variant, op) in [(4, DiracVariant::Dv, OperatorKind::Dv), (6, DiracVariant::DvStar, OperatorKind::DvStar)] {
        let inv = inverse_symbols(n, op).unwrap();
        let (_, p0) = symbol_of_d(n, variant);
        let c = c_xi(n);
        // c(ξ)σ₀c(ξ)/|ξ|⁴ + c(ξ)c(dx_n)[∂c(ξ)|ξ|² - c(ξ)∂|ξ|²]/|ξ|⁶
        let sandwich = c.mul(&p0.value).mul(&c).scale(&over_norm(Poly::one(), 2));
        let dc = lift(&clifford::c_xi_prime(n).scale(&(Poly::frac(1, 2) * h())));
        let norm = RationalXi::new(vec![Poly::one(), Poly::zero(), Poly::one()], 0, 0);
        let bracket = dc.scale(&norm).sub(&c.scale(&RationalXi::constant(h())));
        let tail = c.mul(&lift(&clifford::c(n, n))).mul(&bracket).scale(&over_norm(Poly::one(), 3));
        assert_eq!(inv.next, sandwich.add(&tail));
    }
}

#[test]
fn third_order_operator() {
    let n = 4;
    let sym = operator_symbol(n, OperatorKind::D3).unwrap();
    assert_eq!(sym.order, 3);
    let norm = RationalXi::new(vec![Poly::one(), Poly::zero(), Poly::one()], 0, 0);
    assert_eq!(sym.part(0).value, c_xi(n).scale(&norm.scale(&Poly::i())));
    let inv = inverse_symbols(n, OperatorKind::D3).unwrap();
    assert_eq!(inv.top_order, -3);
    assert_eq!(inv.top.value, c_xi(n).scale(&over_norm(Poly::i(), 2)));
}

#[test]
fn composition_with_parametrix_is_identity() {
    for op in [OperatorKind::Dv, OperatorKind::DvStar, OperatorKind::D3] {
        for n in [4, 6] {
            let sym = operator_symbol(n, op).unwrap();
            let inv = inverse_symbols(n, op).unwrap();
            let q = GradedSymbol::new(inv.top_order, vec![inv.top.clone(), SymbolJet::value_only(inv.next.clone())]);
            let left = GradedSymbol::new(sym.order, vec![sym.part(0), sym.part(1)]);
            let prod = compose_symbols(&left, &q, 1).unwrap();
            assert_eq!(prod.order, 0);
            assert_eq!(prod.part(0).value, MatrixSymbol::identity(n), "{op:?} n={n}");
            assert!(prod.part(1).value.is_zero(), "{op:?} n={n}");
        }
    }
}

#[test]
fn composing_with_zero() {
    let n = 4;
    let sym = operator_symbol(n, OperatorKind::Dv).unwrap();
    let zero = GradedSymbol::new(-1, vec![SymbolJet::zero(n), SymbolJet::zero(n)]);
    let prod = compose_symbols(&sym, &zero, 1).unwrap();
    assert!(prod.part(0).value.is_zero());
    assert!(prod.part(1).value.is_zero());
}
