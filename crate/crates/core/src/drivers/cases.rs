//! Boundary terms as sums over case tuples `(r, l, k, j, |α|)`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{GaussianRational, Generator, Poly};
use crate::error::{Error, Result};
use crate::jets::{inverse_symbols, jet_d_xn_pow, InverseSymbols, OperatorKind};
use crate::par;
use crate::xi::{sphere_integrate, RationalXi};

/// One term of the boundary sum, constrained by `r + l - k - j - |α| - 1 = -n`.
///
/// Only the order `|α|` of the tangential multi-index is kept: every such term
/// carries a tangential derivative of the right symbol, which vanishes at `x₀`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseTuple {
    pub r: i32,
    pub l: i32,
    pub k: u32,
    pub j: u32,
    pub alpha: u32,
}

impl CaseTuple {
    pub fn new(r: i32, l: i32, k: u32, j: u32, alpha: u32) -> Self {
        Self { r, l, k, j, alpha }
    }

    /// `r + l - k - j - |α| - 1`, which equals `-n` for a valid tuple.
    pub fn weight(&self) -> i32 {
        self.r + self.l - self.k as i32 - self.j as i32 - self.alpha as i32 - 1
    }

    /// `(-i)^{|α|+j+k+1} / (α!(j+k+1)!)` for the orders kept here.
    pub fn coefficient(&self) -> GaussianRational {
        let e = self.alpha + self.j + self.k + 1;
        let minus_i = GaussianRational::from_parts(0, 1, -1, 1);
        let mut fact = BigInt::from(1);
        for t in 2..=(self.j + self.k + 1) as i64 {
            fact *= t;
        }
        // α! for a multi-index of order ≤ 1 is 1
        for t in 2..=self.alpha as i64 {
            fact *= t;
        }
        let inv = GaussianRational::new(BigRational::new(1.into(), fact), BigRational::from_integer(0.into()));
        &minus_i.pow(e) * &inv
    }
}

impl fmt::Display for CaseTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(r={}, l={}, k={}, j={}, |a|={})", self.r, self.l, self.k, self.j, self.alpha)
    }
}

/// All tuples with `r ≤ -p1`, `l ≤ -p2`, `k, j, |α| ≥ 0` and weight `-n`.
///
/// Ordered by decreasing `r + l`, then decreasing `|α|`, `j`, `k`, then decreasing `l`.
pub fn enumerate_cases(n: usize, p1: i32, p2: i32) -> Vec<CaseTuple> {
    let n = n as i32;
    let mut out = Vec::new();
    // k + j + |α| = n - 1 + r + l ≥ 0
    for r in (1 - n - (-p2))..=-p1 {
        for l in (1 - n - r)..=-p2 {
            let budget = n - 1 + r + l;
            if budget < 0 {
                continue;
            }
            for alpha in 0..=budget {
                for j in 0..=budget - alpha {
                    let k = budget - alpha - j;
                    out.push(CaseTuple::new(r, l, k as u32, j as u32, alpha as u32));
                }
            }
        }
    }
    out.sort_by(|a, b| {
        (b.r + b.l, b.alpha, b.j, b.k, b.l).cmp(&(a.r + a.l, a.alpha, a.j, a.k, a.l))
    });
    out
}

/// Exact contribution of one tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct CaseReport {
    pub tuple: CaseTuple,
    /// Coefficient of `dx'` after the `ξ_n` and sphere integrals.
    pub contribution: Poly,
    /// Value on the fiber over `ξ'` after the `ξ_n` integral, reduced on the sphere.
    pub fiber: Poly,
    /// Traced integrand before the `ξ_n` integral, without the tuple coefficient.
    pub integrand: RationalXi,
    /// True when the term was skipped because its tangential factor vanishes at `x₀`.
    pub tangential: bool,
}

/// How `v^*` relates to `v` in reported values.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum VStarMode {
    /// `⟨v^*, e_k⟩ = ⟨v, e_k⟩`
    #[default]
    Dual,
    Independent,
}

impl VStarMode {
    pub fn apply(self, p: &Poly) -> Poly {
        match self {
            VStarMode::Independent => p.clone(),
            VStarMode::Dual => p.substitute(|g| match g {
                Generator::VS(k) => Some(Poly::gen(Generator::V(k))),
                Generator::WS(j, k) => Some(Poly::gen(Generator::W(j, k))),
                _ => None,
            }),
        }
    }
}

/// Applies `∂_{x_n}^j ∂_{ξ_n}^k π⁺σ_r(left)` and `∂_{ξ_n}^{j+1} ∂_{x_n}^k σ_l(right)`,
/// traces, integrates over `ξ_n` and the sphere, and scales by the tuple coefficient.
pub fn evaluate_case(t: CaseTuple, left: &InverseSymbols, right: &InverseSymbols, n: usize) -> Result<CaseReport> {
    if t.weight() != -(n as i32) {
        return Err(Error::Invalid(format!("tuple {t} does not have weight -{n}")));
    }
    if t.alpha > 0 {
        // The partner factor is ∂^α_{x'}σ_l(right), and the jets carry no tangential
        // dependence at x₀: every entry is built from x'-independent data.
        return Ok(CaseReport {
            tuple: t,
            contribution: Poly::zero(),
            fiber: Poly::zero(),
            integrand: RationalXi::zero(),
            tangential: true,
        });
    }
    let missing = |side: &str, order: i32| Error::Invalid(format!("{side} symbol of order {order} is not available"));
    let sl = left.component(t.r).ok_or_else(|| missing("left", t.r))?;
    let sr = right.component(t.l).ok_or_else(|| missing("right", t.l))?;
    let lf = jet_d_xn_pow(&sl, t.j)?.pi_plus()?.d_xi_n_pow(t.k as usize);
    let rf = jet_d_xn_pow(&sr, t.k)?.d_xi_n_pow(t.j as usize + 1);
    let integrand = lf.trace_of_product(&rf)?;
    let line = integrand.integrate_real_line()?;
    let fiber = line.scale(&t.coefficient()).sphere_normal_form(n);
    let contribution = sphere_integrate(&fiber, n)?;
    Ok(CaseReport { tuple: t, contribution, fiber, integrand, tangential: false })
}

/// Operator pairs with a boundary term implemented here.
pub fn supported_pair(n: usize, left: OperatorKind, right: OperatorKind) -> bool {
    use OperatorKind::*;
    matches!((n, left, right), (4, Dv, Dv) | (4, DvStar, DvStar) | (4, Dv, DvStar) | (6, Dv, D3))
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryResult {
    pub n: usize,
    pub left: OperatorKind,
    pub right: OperatorKind,
    pub mode: VStarMode,
    pub total: Poly,
    pub cases: Vec<CaseReport>,
}

/// Parametrix symbols for both sides of a supported pair.
pub fn pair_symbols(n: usize, left: OperatorKind, right: OperatorKind) -> Result<(InverseSymbols, InverseSymbols)> {
    if !supported_pair(n, left, right) {
        return Err(Error::UnsupportedPair { n, left: left.name().into(), right: right.name().into() });
    }
    let ops = [left, right];
    let mut syms = par::try_map(&ops, |op| inverse_symbols(n, *op))?;
    let r = syms.pop().expect("two");
    let l = syms.pop().expect("two");
    Ok((l, r))
}

/// Boundary term of `π⁺P⁻¹ ∘ π⁺Q⁻¹` with the per-case breakdown.
pub fn boundary_phi(n: usize, left: OperatorKind, right: OperatorKind, mode: VStarMode) -> Result<BoundaryResult> {
    let (ls, rs) = pair_symbols(n, left, right)?;
    boundary_phi_with(n, &ls, &rs, mode)
}

pub fn boundary_phi_with(n: usize, ls: &InverseSymbols, rs: &InverseSymbols, mode: VStarMode) -> Result<BoundaryResult> {
    let tuples = enumerate_cases(n, -ls.top_order, -rs.top_order);
    let mut cases = par::try_map(&tuples, |t| evaluate_case(*t, ls, rs, n))?;
    let mut total = Poly::zero();
    for c in &mut cases {
        c.contribution = mode.apply(&c.contribution);
        c.fiber = mode.apply(&c.fiber);
        total.add_assign_ref(&c.contribution);
    }
    Ok(BoundaryResult { n, left: ls.op, right: rs.op, mode, total, cases })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_dimensional_enumeration() {
        let got = enumerate_cases(4, 1, 1);
        let want = vec![
            CaseTuple::new(-1, -1, 0, 0, 1),
            CaseTuple::new(-1, -1, 0, 1, 0),
            CaseTuple::new(-1, -1, 1, 0, 0),
            CaseTuple::new(-1, -2, 0, 0, 0),
            CaseTuple::new(-2, -1, 0, 0, 0),
        ];
        let mut g = got.clone();
        g.sort();
        let mut w = want;
        w.sort();
        assert_eq!(g, w);
    }

    #[test]
    fn six_dimensional_enumeration() {
        let got = enumerate_cases(6, 1, 3);
        assert_eq!(got.len(), 5);
        assert!(got.iter().all(|t| t.weight() == -6 && [-1, -2].contains(&t.r) && [-3, -4].contains(&t.l)));
    }

    #[test]
    fn two_dimensional_enumeration_is_empty() {
        // r + l ≤ -2 forces k + j + |α| = r + l + 1 < 0
        assert!(enumerate_cases(2, 1, 1).is_empty());
    }

    #[test]
    fn coefficients() {
        assert_eq!(CaseTuple::new(-1, -1, 0, 1, 0).coefficient(), GaussianRational::from_frac(-1, 2));
        assert_eq!(CaseTuple::new(-2, -1, 0, 0, 0).coefficient(), GaussianRational::from_parts(0, 1, -1, 1));
    }
}
