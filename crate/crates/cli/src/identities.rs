//! Trace identities of the Clifford representation at a boundary point.

use wres_core::clifford::{self, CliffordOp};
use wres_core::drivers::interior::riemann_term;
use wres_core::geometry::GeometryTable;
use wres_core::{Generator, Poly};

use crate::report::{Check, PolyJson};

fn check(name: &str, expected: Poly, actual: Poly) -> Check {
    let pass = expected == actual;
    Check { name: name.into(), expected: PolyJson::from_poly(&expected), actual: PolyJson::from_poly(&actual), pass }
}

fn dot(n: usize, g: fn(u8) -> Generator) -> Poly {
    let mut acc = Poly::zero();
    for i in 1..n {
        acc.add_assign_ref(&(Poly::gen(g(i as u8)) * Poly::gen(Generator::Xi(i as u8))));
    }
    acc
}

/// Evaluates the identity table in dimension `n`.
pub fn identity_checks(n: usize) -> Vec<Check> {
    let full = 1i64 << n;
    let half = full / 2;
    let cn = clifford::c(n, n);
    let cx = clifford::c_xi_prime(n);
    let geo = GeometryTable::new(n);
    let dcx = cx.scale(&geo.dxn_of_cxi);
    let (a, _) = clifford::build_connection_ops(n);
    let h = Poly::gen(Generator::H);
    let lv = clifford::l_v(n);
    let ev = clifford::eps_v_star(n);

    let mut bar_pairs_vanish = true;
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let bb = clifford::cbar(n, i).mul(&clifford::cbar(n, j));
            for k in 1..=n {
                for l in 1..=n {
                    bar_pairs_vanish &= bb.mul(&clifford::c(n, k)).trace_of_product(&clifford::c(n, l)).is_zero();
                }
            }
        }
    }
    let mut mixed_vanish = true;
    for i in 1..n {
        let prod = CliffordOp::product(n, &[&clifford::c(n, i), &clifford::cbar(n, i), &cn, &clifford::cbar(n, n)]);
        mixed_vanish &= prod.trace().is_zero();
    }
    let mut ca_sum = CliffordOp::zero(n);
    for i in 1..n {
        let prod = CliffordOp::product(n, &[&clifford::c(n, i), &clifford::cbar(n, i), &cn, &clifford::cbar(n, n)]);
        ca_sum = ca_sum.add(&prod);
    }
    let ca_expect = ca_sum.scale(&(Poly::frac(-1, 4) * h.clone()));
    let flag = |b: bool| if b { Poly::zero() } else { Poly::one() };
    let mut cbar_xi = CliffordOp::zero(n);
    for i in 1..n {
        cbar_xi = cbar_xi.add(&clifford::cbar(n, i).scale(&Poly::gen(Generator::Xi(i as u8))));
    }

    vec![
        check("tr[id] = 2^n", Poly::int(full), CliffordOp::identity(n).trace()),
        check("tr[c(xi')c(dx_n)] = 0", Poly::zero(), cx.trace_of_product(&cn)),
        check("tr[c(dx_n)^2] = -2^n", Poly::int(-full), cn.trace_of_product(&cn)),
        check("tr[c(xi')^2] = -2^n on |xi'| = 1", Poly::int(-full), cx.mul(&cx).trace_on_sphere()),
        check("tr[d_xn c(xi') c(dx_n)] = 0", Poly::zero(), dcx.trace_of_product(&cn)),
        check("tr[d_xn c(xi') c(xi')] = -2^(n-1) h'(0) on |xi'| = 1", Poly::int(-half) * h.clone(), dcx.mul(&cx).trace_on_sphere()),
        check("tr[cbar(e_i)cbar(e_j)c(e_k)c(e_l)] = 0 for i != j (0 when it holds)", Poly::zero(), flag(bar_pairs_vanish)),
        check("tr of the curvature term vanishes", Poly::zero(), riemann_term(n).trace()),
        check("tr[c(e_i)cbar(e_i)c(e_n)cbar(e_n)] = 0 for i < n (0 when it holds)", Poly::zero(), flag(mixed_vanish)),
        check("c(dx_n)A = -h'(0)/4 sum c(e_i)cbar(e_i)c(e_n)cbar(e_n) (0 when it holds)", Poly::zero(), flag(cn.mul(&a) == ca_expect)),
        check("tr[A c(dx_n)] = 0", Poly::zero(), a.trace_of_product(&cn)),
        check("tr[cbar(xi')c(dx_n)] = 0", Poly::zero(), cbar_xi.trace_of_product(&cn)),
        check("tr[c(dx_n) l(v)] = 2^(n-1) <v,dx_n>", Poly::int(half) * Poly::gen(Generator::V(n as u8)), cn.trace_of_product(&lv)),
        check("tr[c(xi') l(v)] = 2^(n-1) <v,xi'>", Poly::int(half) * dot(n, Generator::V), cx.trace_of_product(&lv)),
        check("tr[c(dx_n) eps(v*)] = -2^(n-1) <v*,d_xn>", Poly::int(-half) * Poly::gen(Generator::VS(n as u8)), cn.trace_of_product(&ev)),
        check("tr[c(xi') eps(v*)] = -2^(n-1) <v*,xi'>", Poly::int(-half) * dot(n, Generator::VS), cx.trace_of_product(&ev)),
    ]
}
