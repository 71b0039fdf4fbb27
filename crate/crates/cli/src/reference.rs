//! Case labels and the published reference values the engine is compared against.

use wres_core::drivers::{CaseTuple, VStarMode};
use wres_core::jets::OperatorKind::{self, D3, Dv, DvStar};
use wres_core::{GaussianRational, Generator, Poly};

/// Conventional label of a case tuple.
pub fn label(n: usize, t: &CaseTuple) -> String {
    let s = match (n, t.r, t.l, t.k, t.j, t.alpha) {
        (4, -1, -1, 0, 0, 1) => "1)I",
        (4, -1, -1, 0, 1, 0) => "1)II",
        (4, -1, -1, 1, 0, 0) => "1)III",
        (4, -2, -1, 0, 0, 0) => "2",
        (4, -1, -2, 0, 0, 0) => "3",
        (6, -1, -3, 0, 0, 1) => "(a)(I)",
        (6, -1, -3, 0, 1, 0) => "(a)(II)",
        (6, -1, -3, 1, 0, 0) => "(a)(III)",
        (6, -1, -4, 0, 0, 0) => "(b)",
        (6, -2, -3, 0, 0, 0) => "(c)",
        _ => return format!("r{}l{}k{}j{}a{}", t.r, t.l, t.k, t.j, t.alpha),
    };
    s.into()
}

/// One reference value; `tuple == None` is the total.
#[derive(Clone, Debug)]
pub struct RefValue {
    pub label: String,
    pub tuple: Option<CaseTuple>,
    pub value: Poly,
    /// Stated with `v*` identified with `v`; not comparable otherwise.
    pub dual_only: bool,
}

fn q(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Poly {
    Poly::constant(GaussianRational::from_parts(re_num, re_den, im_num, im_den))
}

/// `π Ω (h · h'(0) + v · V(n) + w · VS(n))`.
fn pw(n: u8, h: Poly, v: Poly, w: Poly) -> Poly {
    let body = h * Poly::gen(Generator::H) + v * Poly::gen(Generator::V(n)) + w * Poly::gen(Generator::VS(n));
    body * Poly::gen(Generator::Pi) * Poly::gen(Generator::Omega)
}

fn entry(n: usize, t: Option<CaseTuple>, value: Poly, dual_only: bool) -> RefValue {
    let label = t.map_or_else(|| "total".to_string(), |t| label(n, &t));
    RefValue { label, tuple: t, value, dual_only }
}

/// Reference values for a supported pair.
pub fn references(n: usize, left: OperatorKind, right: OperatorKind) -> Vec<RefValue> {
    let z = Poly::zero;
    let i = |x: i64| Poly::int(x);
    let f = |a: i64, b: i64| Poly::frac(a, b);
    let t = |r, l, k, j, a| Some(CaseTuple::new(r, l, k, j, a));
    let mut out = Vec::new();
    match (n, left, right) {
        (4, _, _) => {
            out.push(entry(4, t(-1, -1, 0, 0, 1), z(), false));
            out.push(entry(4, t(-1, -1, 0, 1, 0), pw(4, f(-3, 2), z(), z()), false));
            out.push(entry(4, t(-1, -1, 1, 0, 0), pw(4, f(3, 2), z(), z()), false));
            let (two, three, total, dual) = match (left, right) {
                (Dv, Dv) => (pw(4, f(9, 2), i(2), z()), pw(4, f(-9, 2), i(-2), z()), z(), false),
                (DvStar, DvStar) => (pw(4, f(9, 2), z(), i(-2)), pw(4, f(-9, 2), z(), i(2)), z(), false),
                _ => (pw(4, f(9, 2), i(2), z()), pw(4, f(-9, 2), z(), i(2)), pw(4, z(), i(4), z()), true),
            };
            out.push(entry(4, t(-2, -1, 0, 0, 0), two, false));
            out.push(entry(4, t(-1, -2, 0, 0, 0), three, false));
            out.push(entry(4, None, total, dual));
        }
        (6, Dv, D3) => {
            out.push(entry(6, t(-1, -3, 0, 0, 1), z(), true));
            out.push(entry(6, t(-1, -3, 0, 1, 0), pw(6, f(-15, 2), z(), z()), true));
            out.push(entry(6, t(-1, -3, 1, 0, 0), pw(6, f(25, 2), z(), z()), true));
            out.push(entry(6, t(-1, -4, 0, 0, 0), pw(6, q(-195, 8, -41, 8), i(22), z()), true));
            out.push(entry(6, t(-2, -3, 0, 0, 0), pw(6, f(55, 2), q(-4, 1, 9, 1), z()), true));
            out.push(entry(6, None, pw(6, q(65, 8, -41, 8), q(18, 1, 9, 1), z()), true));
        }
        _ => {}
    }
    out
}

/// References comparable under `mode`, with the mode applied.
pub fn comparable(n: usize, left: OperatorKind, right: OperatorKind, mode: VStarMode) -> Vec<RefValue> {
    references(n, left, right)
        .into_iter()
        .filter(|r| mode == VStarMode::Dual || !r.dual_only)
        .map(|mut r| {
            r.value = mode.apply(&r.value);
            r
        })
        .collect()
}
