//! Floating-point symbols of `D_v`, `D_v^*` and `D_v^* D_v D_v^*` at `x₀`.
//!
//! The normal dependence comes from the collar metric `diag(1/h, …, 1/h, 1)` with
//! `h(x_n) = 1 + h'(0) x_n`; every `x_n`-derivative is a finite difference, and
//! the connection coefficients are recomputed from that metric.

use num_complex::Complex64;

use super::cliff::NumericClifford;
use super::cmat::CMat;
use super::series::MSeries;
use crate::error::{Error, Result};
use crate::jets::OperatorKind;

const I: Complex64 = Complex64::new(0.0, 1.0);
const FD_STEP: f64 = 1e-5;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Central difference at `0`; truncation and roundoff both stay near `1e-10`.
fn fd_series(f: impl Fn(f64) -> Result<MSeries>) -> Result<MSeries> {
    let (a, b) = (f(FD_STEP)?, f(-FD_STEP)?);
    // differences carry roundoff near 1e-11 of the entries; drop it below the step's accuracy
    Ok(a.sub(&b).scale(re(0.5 / FD_STEP)).flush(1e-10))
}

fn fd_scalar(f: impl Fn(f64) -> f64) -> f64 {
    (f(FD_STEP) - f(-FD_STEP)) * 0.5 / FD_STEP
}

/// Generator values and the cotangent direction `ξ'` for one fiber.
#[derive(Clone, Debug)]
pub struct NumericModel {
    pub n: usize,
    pub h_prime: f64,
    pub v: Vec<f64>,
    pub v_star: Vec<f64>,
    pub xi_prime: Vec<f64>,
    cl: NumericClifford,
    connection: CMat,
    lv: CMat,
    ev: CMat,
}

impl NumericModel {
    pub fn new(n: usize, h_prime: f64, v: Vec<f64>, v_star: Vec<f64>) -> Result<Self> {
        if v.len() != n || v_star.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: v.len().min(v_star.len()) });
        }
        let cl = NumericClifford::new(n);
        let mut m = Self {
            n,
            h_prime,
            xi_prime: vec![0.0; n - 1],
            lv: cl.combine(&cl.int, &v),
            ev: cl.combine(&cl.ext, &v_star),
            v,
            v_star,
            connection: CMat::zeros(1 << n),
            cl,
        };
        m.connection = m.connection_endomorphism();
        Ok(m)
    }

    pub fn at_direction(&self, xi_prime: &[f64]) -> Self {
        Self { xi_prime: xi_prime.to_vec(), ..self.clone() }
    }

    /// Diagonal metric coefficients `g_{ii}(x_n)`.
    pub fn metric(&self, xn: f64) -> Vec<f64> {
        let h = 1.0 + self.h_prime * xn;
        (0..self.n).map(|i| if i + 1 < self.n { 1.0 / h } else { 1.0 }).collect()
    }

    /// `Γ^k_{ij}(x₀)` (0-based) for a diagonal metric depending on `x_n` only.
    pub fn christoffel(&self, k: usize, i: usize, j: usize) -> f64 {
        let last = self.n - 1;
        let dg = |a: usize| fd_scalar(|x| self.metric(x)[a]);
        let g0 = self.metric(0.0);
        // ∂_l g_{ab} is nonzero only for l = n-1 and a = b.
        let d = |l: usize, a: usize, b: usize| if l == last && a == b { dg(a) } else { 0.0 };
        0.5 / g0[k] * (d(i, j, k) + d(j, i, k) - d(k, i, j))
    }

    /// `ω_{s,t}(e_i) = ⟨∇_{e_i} e_t, e_s⟩` for the frame `e_a = g_{aa}^{-1/2} ∂_a`.
    pub fn omega(&self, s: usize, t: usize, i: usize) -> f64 {
        let frame = |a: usize| fd_scalar(|x| self.metric(x)[a].powf(-0.5));
        let mut w = self.christoffel(s, i, t);
        if i == self.n - 1 && s == t {
            w += frame(t);
        }
        w
    }

    /// `A + B` from `ω`, with `A = ¼Σ ω c_i c̄_s c̄_t` and `B = -¼Σ ω c_i c_s c_t`.
    fn connection_endomorphism(&self) -> CMat {
        let n = self.n;
        let mut out = CMat::zeros(1 << n);
        for i in 0..n {
            for s in 0..n {
                for t in 0..n {
                    let w = self.omega(s, t, i);
                    if w.abs() < 1e-9 {
                        continue;
                    }
                    let a = self.cl.c[i].matmul(&self.cl.cbar[s]).matmul(&self.cl.cbar[t]);
                    let b = self.cl.c[i].matmul(&self.cl.c[s]).matmul(&self.cl.c[t]);
                    out.axpy(re(0.25 * w), &a);
                    out.axpy(re(-0.25 * w), &b);
                }
            }
        }
        out
    }

    /// `c(ξ')` in the orthonormal frame at height `x_n`.
    fn c_xi_prime(&self, xn: f64) -> CMat {
        let g = self.metric(xn);
        let w: Vec<f64> = self.xi_prime.iter().zip(&g).map(|(x, gi)| x / gi.sqrt()).collect();
        self.cl.combine(&self.cl.c[..self.n - 1], &w)
    }

    /// `i c(ξ)` around `ξ_n = ξ₀` at height `x_n`.
    fn d_top(&self, xn: f64, xi0: Complex64, len: usize) -> MSeries {
        let cn = &self.cl.c[self.n - 1];
        let a = &self.c_xi_prime(xn) + &cn.scale(xi0);
        MSeries::linear(a.scale(I), cn.scale(I), len)
    }

    fn perturbation(&self, star: bool) -> CMat {
        if star {
            self.ev.clone()
        } else {
            self.lv.clone()
        }
    }
}

/// Top component as a function of `x_n`, plus the sub-leading one at `x_n = 0`.
struct NumSym<'a> {
    top: Box<dyn Fn(f64) -> Result<MSeries> + 'a>,
    next: MSeries,
}

fn dirac<'a>(m: &'a NumericModel, xi0: Complex64, len: usize, star: bool) -> NumSym<'a> {
    NumSym {
        top: Box::new(move |x| Ok(m.d_top(x, xi0, len))),
        next: MSeries::constant(&m.connection + &m.perturbation(star), len),
    }
}

/// Two-term composition: `p q + [p_1 q_0 + p_0 q_1 - i ∂_{ξ_n}p_1 ∂_{x_n}q_1]`.
fn compose<'a>(p: NumSym<'a>, q: NumSym<'a>) -> Result<NumSym<'a>> {
    let (p1, q1) = ((p.top)(0.0)?, (q.top)(0.0)?);
    let dq = fd_series(&q.top)?;
    let cross = p1.deriv().mul(&dq).scale(-I);
    let next = p1.mul(&q.next).add(&p.next.mul(&q1)).add(&cross);
    let (pt, qt) = (p.top, q.top);
    Ok(NumSym { top: Box::new(move |x| Ok(pt(x)?.mul(&qt(x)?))), next })
}

fn operator<'a>(m: &'a NumericModel, op: OperatorKind, xi0: Complex64, len: usize) -> Result<NumSym<'a>> {
    match op {
        OperatorKind::Dv => Ok(dirac(m, xi0, len, false)),
        OperatorKind::DvStar => Ok(dirac(m, xi0, len, true)),
        OperatorKind::D3 => {
            let inner = compose(dirac(m, xi0, len, true), dirac(m, xi0, len, false))?;
            compose(inner, dirac(m, xi0, len, true))
        }
    }
}

/// Parametrix components around one `ξ_n`.
#[derive(Clone, Debug)]
pub struct NumericInverse {
    pub top_order: i32,
    pub top: MSeries,
    /// `∂_{x_n}` of the leading component.
    pub top_dxn: MSeries,
    pub next: MSeries,
}

impl NumericInverse {
    /// `∂_{x_n}^dxn σ_r` as a series, or an error when that jet is not available.
    pub fn component(&self, r: i32, dxn: u32) -> Result<&MSeries> {
        match (r - self.top_order, dxn) {
            (0, 0) => Ok(&self.top),
            (0, 1) => Ok(&self.top_dxn),
            (-1, 0) => Ok(&self.next),
            _ => Err(Error::InsufficientJetOrder(format!("order {r} with {dxn} normal derivatives"))),
        }
    }
}

/// `q = p^{-1}` around `ξ₀` and the next term `-q[p_next q - i ∂_{ξ_n}p ∂_{x_n}q]`.
pub fn numeric_inverse(m: &NumericModel, op: OperatorKind, xi0: Complex64, len: usize) -> Result<NumericInverse> {
    let sym = operator(m, op, xi0, len + 1)?;
    let top_fn = |x: f64| (sym.top)(x)?.inverse();
    let p = (sym.top)(0.0)?;
    let q = p.inverse()?;
    let dq = fd_series(top_fn)?;
    let inner = sym.next.mul(&q).add(&p.deriv().mul(&dq).scale(-I));
    let next = q.mul(&inner).scale(re(-1.0));
    Ok(NumericInverse {
        top_order: -op.order(),
        top: q.truncate(len),
        top_dxn: dq.truncate(len),
        next: next.truncate(len),
    })
}
