//! Interior residue densities from the Lichnerowicz endomorphism `E'` at `x₀`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{GaussianRational, Generator, Poly};
use crate::clifford::{self, ActionKind, CliffordOp, GeneratorKind};
use crate::error::{Error, Result};
use crate::matrix::SparseMatrix;

use super::VStarMode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InteriorVariant {
    /// `D_v²`
    Dv2,
    /// `(D_v^*)²`
    DvStar2,
    /// `D_v^* D_v`
    DvStarDv,
}

impl InteriorVariant {
    pub fn name(self) -> &'static str {
        match self {
            InteriorVariant::Dv2 => "Dv2",
            InteriorVariant::DvStar2 => "DvStar2",
            InteriorVariant::DvStarDv => "DvStarDv",
        }
    }
}

impl std::str::FromStr for InteriorVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Dv2" => Ok(InteriorVariant::Dv2),
            "DvStar2" => Ok(InteriorVariant::DvStar2),
            "DvStarDv" => Ok(InteriorVariant::DvStarDv),
            other => Err(Error::Parse(format!("unknown operator {other:?}; expected Dv2, DvStar2 or DvStarDv"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EndomorphismData {
    pub n: usize,
    pub variant: InteriorVariant,
    pub eprime: CliffordOp,
    /// The curvature part `⅛ Σ R_{ijkl} c̄(e_i)c̄(e_j)c(e_k)c(e_l)`.
    pub riemann: CliffordOp,
    /// The first-derivative part `½ Σ_j [∇_{e_j}(P) c(e_j) - c(e_j) ∇_{e_j}(Q)]`.
    pub derivative: CliffordOp,
}

/// `⅛ Σ_{ijkl} R_{ijkl} c̄(e_i)c̄(e_j)c(e_k)c(e_l)` with antisymmetric symbolic `R`.
pub fn riemann_term(n: usize) -> CliffordOp {
    let cs: Vec<CliffordOp> = (1..=n).map(|j| clifford::c(n, j)).collect();
    let cbs: Vec<CliffordOp> = (1..=n).map(|j| clifford::cbar(n, j)).collect();
    // each product is a signed permutation matrix, so entries are collected directly
    let mut triplets = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let bar = cbs[i - 1].mul(&cbs[j - 1]);
            for k in 1..=n {
                let head = bar.mul(&cs[k - 1]);
                for l in 1..=n {
                    let Some((sign, g)) = Generator::riemann(i as u8, j as u8, k as u8, l as u8) else {
                        continue;
                    };
                    let coeff = Poly::gen(g).scale(&GaussianRational::from_frac(sign as i64, 8));
                    for (r, c, v) in head.mul(&cs[l - 1]).mat.entries() {
                        triplets.push((r, c, v.mul_ref(&coeff)));
                    }
                }
            }
        }
    }
    CliffordOp::from_matrix(n, SparseMatrix::from_triplets(1 << n, triplets))
}

/// `Σ_k W(j,k) ι(e_k)`, the derivative of `l(v)` along `e_j`.
fn nabla_l_v(n: usize, j: usize) -> CliffordOp {
    let comps: Vec<Poly> = (1..=n).map(|k| Poly::gen(Generator::W(j as u8, k as u8))).collect();
    clifford::action_of(n, &comps, ActionKind::InteriorVector).expect("n components")
}

/// `Σ_k WS(j,k) ε(e_k)`, the derivative of `ε(v^*)` along `e_j`.
fn nabla_eps_v_star(n: usize, j: usize) -> CliffordOp {
    let comps: Vec<Poly> = (1..=n).map(|k| Poly::gen(Generator::WS(j as u8, k as u8))).collect();
    clifford::action_of(n, &comps, ActionKind::ExteriorCovector).expect("n components")
}

/// `E'(x₀)` for the chosen Laplace-type operator.
pub fn build_e_prime(n: usize, variant: InteriorVariant) -> EndomorphismData {
    let l = clifford::l_v(n);
    let e = clifford::eps_v_star(n);
    let quarter = GaussianRational::from_frac(1, 4);
    let half = GaussianRational::from_frac(1, 2);
    let riemann = riemann_term(n);
    let mut eprime = riemann.sub(&CliffordOp::scalar(n, Poly::gen(Generator::S)).scale_q(&quarter));
    let mut derivative = CliffordOp::zero(n);
    for j in 1..=n {
        let cj = clifford::c(n, j);
        let (left, right) = match variant {
            InteriorVariant::Dv2 => (cj.mul(&l).add(&l.mul(&cj)), cj.mul(&l).add(&l.mul(&cj))),
            InteriorVariant::DvStar2 => (cj.mul(&e).add(&e.mul(&cj)), cj.mul(&e).add(&e.mul(&cj))),
            InteriorVariant::DvStarDv => (cj.mul(&l).add(&e.mul(&cj)), cj.mul(&l).add(&e.mul(&cj))),
        };
        eprime = eprime.sub(&left.mul(&right).scale_q(&quarter));
        let (p, q) = match variant {
            InteriorVariant::Dv2 => (nabla_l_v(n, j), nabla_l_v(n, j)),
            InteriorVariant::DvStar2 => (nabla_eps_v_star(n, j), nabla_eps_v_star(n, j)),
            InteriorVariant::DvStarDv => (nabla_eps_v_star(n, j), nabla_l_v(n, j)),
        };
        derivative = derivative.add(&p.mul(&cj).sub(&cj.mul(&q)).scale_q(&half));
    }
    eprime = eprime.add(&derivative);
    if variant == InteriorVariant::DvStarDv {
        eprime = eprime.sub(&e.mul(&l));
    }
    EndomorphismData { n, variant, eprime, riemann, derivative }
}

/// `(n-2)(4π)^{n/2} / (n/2-1)!` with `π` symbolic.
pub fn interior_prefactor(n: usize) -> Result<Poly> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::UnsupportedDimension(n));
    }
    let half = n / 2;
    let mut fact = BigInt::from(1);
    for t in 2..half as i64 {
        fact *= t;
    }
    let num = BigInt::from(n as i64 - 2) * BigInt::from(4).pow(half as u32);
    let c = GaussianRational::new(BigRational::new(num, fact), BigRational::from_integer(0.into()));
    Ok(Poly::gen(Generator::Pi).pow(half as u32).scale(&c))
}

#[derive(Clone, Debug, PartialEq)]
pub struct InteriorResult {
    pub n: usize,
    pub variant: InteriorVariant,
    pub prefactor: Poly,
    /// `trace(s/6 + E')`.
    pub trace: Poly,
    /// `prefactor · trace`, the density under `∫_M dVol`.
    pub total: Poly,
}

pub fn interior_wres(n: usize, variant: InteriorVariant, mode: VStarMode) -> Result<InteriorResult> {
    let prefactor = interior_prefactor(n)?;
    let data = build_e_prime(n, variant);
    let sixth = Poly::gen(Generator::S).scale(&GaussianRational::from_frac(1, 6));
    let trace = mode.apply(&CliffordOp::scalar(n, sixth).add(&data.eprime).trace());
    let total = prefactor.mul_ref(&trace);
    Ok(InteriorResult { n, variant, prefactor, trace, total })
}

/// `Σ_i V(i)²`.
pub fn v_norm_sq(n: usize) -> Poly {
    let mut acc = Poly::zero();
    for i in 1..=n {
        acc.add_assign_ref(&Poly::gen(Generator::V(i as u8)).pow(2));
    }
    acc
}

/// `Σ_i VS(i)²`.
pub fn v_star_norm_sq(n: usize) -> Poly {
    let mut acc = Poly::zero();
    for i in 1..=n {
        acc.add_assign_ref(&Poly::gen(Generator::VS(i as u8)).pow(2));
    }
    acc
}

/// `trace(l(w)c(e_j) - c(e_j)l(w))` for a symbolic vector `w`.
pub fn commutator_trace(n: usize, j: usize, kind: GeneratorKind) -> Poly {
    let comps: Vec<Poly> = (1..=n).map(|k| Poly::gen(Generator::W(1, k as u8))).collect();
    let act = match kind {
        GeneratorKind::Exterior => ActionKind::ExteriorCovector,
        GeneratorKind::Interior => ActionKind::InteriorVector,
        GeneratorKind::Clifford => ActionKind::CliffordCovector,
        GeneratorKind::CliffordBar => ActionKind::CliffordBar,
    };
    let w = clifford::action_of(n, &comps, act).expect("n components");
    w.commutator(&clifford::c(n, j)).trace()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefactors() {
        assert_eq!(interior_prefactor(4).unwrap(), Poly::int(32) * Poly::gen(Generator::Pi).pow(2));
        assert_eq!(interior_prefactor(6).unwrap(), Poly::int(128) * Poly::gen(Generator::Pi).pow(3));
        assert!(interior_prefactor(5).is_err());
    }

    #[test]
    fn dv2_trace_at_four() {
        let d = build_e_prime(4, InteriorVariant::Dv2);
        let s = Poly::gen(Generator::S);
        let expect = &(s.scale(&GaussianRational::from_int(-4))) - &v_norm_sq(4).scale(&GaussianRational::from_int(4));
        assert_eq!(d.eprime.trace(), expect);
    }
}
