//! Rational functions of `ξ_n` whose poles lie at `±i` only.

use std::fmt;

use num_complex::Complex64;

use crate::algebra::{GaussianRational, Generator, Poly};
use crate::error::{Error, Result};
use crate::matrix::Ring;

/// `N(ξ_n) / ((ξ_n - i)^a (ξ_n + i)^b)` with `N` a polynomial in `ξ_n` over [`Poly`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalXi {
    num: Vec<Poly>,
    a: u32,
    b: u32,
}

fn trim(v: &mut Vec<Poly>) {
    while v.last().is_some_and(Poly::is_zero) {
        v.pop();
    }
}

fn poly_add(x: &[Poly], y: &[Poly]) -> Vec<Poly> {
    let mut out: Vec<Poly> = (0..x.len().max(y.len()))
        .map(|k| match (x.get(k), y.get(k)) {
            (Some(p), Some(q)) => p + q,
            (Some(p), None) | (None, Some(p)) => p.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(x: &[Poly], y: &[Poly]) -> Vec<Poly> {
    if x.is_empty() || y.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Poly::zero(); x.len() + y.len() - 1];
    for (i, p) in x.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in y.iter().enumerate() {
            if !q.is_zero() {
                out[i + j].add_assign_ref(&p.mul_ref(q));
            }
        }
    }
    trim(&mut out);
    out
}

fn poly_scale(x: &[Poly], s: &Poly) -> Vec<Poly> {
    let mut out: Vec<Poly> = x.iter().map(|p| p.mul_ref(s)).collect();
    trim(&mut out);
    out
}

/// `(ξ - root)` as a coefficient list.
fn linear(root: &GaussianRational) -> Vec<Poly> {
    vec![Poly::constant(-root), Poly::one()]
}

fn mul_linear_pow(x: &[Poly], root: &GaussianRational, e: u32) -> Vec<Poly> {
    let lin = linear(root);
    let mut out = x.to_vec();
    for _ in 0..e {
        out = poly_mul(&out, &lin);
    }
    out
}

fn eval_at(x: &[Poly], point: &GaussianRational) -> Poly {
    let mut acc = Poly::zero();
    for c in x.iter().rev() {
        acc = &acc.scale(point) + c;
    }
    acc
}

/// Synthetic division by `(ξ - root)`; the caller guarantees exactness.
fn div_linear(x: &[Poly], root: &GaussianRational) -> Vec<Poly> {
    let d = x.len() - 1;
    let mut out = vec![Poly::zero(); d];
    let mut carry = Poly::zero();
    for k in (1..=d).rev() {
        carry = &x[k] + &carry.scale(root);
        out[k - 1] = carry.clone();
    }
    trim(&mut out);
    out
}

/// Coefficients of `x(root + t)` in powers of `t`.
fn taylor_shift(x: &[Poly], root: &GaussianRational) -> Vec<Poly> {
    let mut out = x.to_vec();
    let d = out.len();
    for i in 0..d {
        for k in (i..d.saturating_sub(1)).rev() {
            let add = out[k + 1].scale(root);
            out[k].add_assign_ref(&add);
        }
    }
    out
}

impl RationalXi {
    pub fn zero() -> Self {
        Self { num: Vec::new(), a: 0, b: 0 }
    }

    pub fn one() -> Self {
        Self::constant(Poly::one())
    }

    pub fn constant(p: Poly) -> Self {
        Self::new(vec![p], 0, 0)
    }

    /// `ξ_n`.
    pub fn xi_n() -> Self {
        Self::new(vec![Poly::zero(), Poly::one()], 0, 0)
    }

    /// `1/(1 + ξ_n²)`, i.e. `|ξ|^{-2}` on `|ξ'| = 1`.
    pub fn inv_norm_sq() -> Self {
        Self::new(vec![Poly::one()], 1, 1)
    }

    /// Canonicalizing constructor.
    pub fn new(num: Vec<Poly>, a: u32, b: u32) -> Self {
        let mut r = Self { num, a, b };
        r.canonicalize();
        r
    }

    /// Numerator coefficients in ascending powers of `ξ_n`.
    pub fn numerator(&self) -> &[Poly] {
        &self.num
    }

    pub fn pole_plus(&self) -> u32 {
        self.a
    }

    pub fn pole_minus(&self) -> u32 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Degree of the numerator; `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    fn canonicalize(&mut self) {
        trim(&mut self.num);
        if self.num.is_empty() {
            self.a = 0;
            self.b = 0;
            return;
        }
        let i = GaussianRational::i();
        let mi = -&i;
        while self.a > 0 && eval_at(&self.num, &i).is_zero() {
            self.num = div_linear(&self.num, &i);
            self.a -= 1;
        }
        while self.b > 0 && eval_at(&self.num, &mi).is_zero() {
            self.num = div_linear(&self.num, &mi);
            self.b -= 1;
        }
    }

    /// Applies `f` to every numerator coefficient and re-canonicalizes.
    pub fn map_coefficients(&self, f: impl Fn(&Poly) -> Poly) -> Self {
        Self::new(self.num.iter().map(f).collect(), self.a, self.b)
    }

    /// Reduces coefficients modulo the co-sphere relation in dimension `n`.
    pub fn on_sphere(&self, n: usize) -> Self {
        self.map_coefficients(|p| p.sphere_normal_form(n))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (a, b) = (self.a.max(o.a), self.b.max(o.b));
        let i = GaussianRational::i();
        let mi = -&i;
        let x = mul_linear_pow(&mul_linear_pow(&self.num, &i, a - self.a), &mi, b - self.b);
        let y = mul_linear_pow(&mul_linear_pow(&o.num, &i, a - o.a), &mi, b - o.b);
        Self::new(poly_add(&x, &y), a, b)
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.iter().map(Poly::neg_ref).collect(), a: self.a, b: self.b }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(poly_mul(&self.num, &o.num), self.a + o.a, self.b + o.b)
    }

    pub fn scale(&self, s: &Poly) -> Self {
        Self::new(poly_scale(&self.num, s), self.a, self.b)
    }

    /// Exact `d/dξ_n`.
    pub fn d_xi_n(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let i = GaussianRational::i();
        let mi = -&i;
        let deriv: Vec<Poly> = self
            .num
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&GaussianRational::from_int(k as i64)))
            .collect();
        if self.a == 0 && self.b == 0 {
            return Self::new(deriv, 0, 0);
        }
        // N'(ξ-i)(ξ+i) - aN(ξ+i) - bN(ξ-i) over one more power of each factor.
        let norm = mul_linear_pow(&mul_linear_pow(&deriv, &i, 1), &mi, 1);
        let ta = poly_scale(&mul_linear_pow(&self.num, &mi, 1), &Poly::int(-(self.a as i64)));
        let tb = poly_scale(&mul_linear_pow(&self.num, &i, 1), &Poly::int(-(self.b as i64)));
        Self::new(poly_add(&poly_add(&norm, &ta), &tb), self.a + 1, self.b + 1)
    }

    /// Taylor coefficients `g_0..g_{a-1}` of `N/(ξ+i)^b` at `ξ = i`.
    fn principal_taylor(&self) -> Vec<Poly> {
        let a = self.a as usize;
        let i = GaussianRational::i();
        let shifted = taylor_shift(&self.num, &i);
        let two_i = GaussianRational::from_parts(0, 1, 2, 1);
        let inv_two_i = two_i.inv().expect("nonzero");
        let lead = inv_two_i.pow(self.b);
        // (2i + t)^{-b} = (2i)^{-b} Σ_m binom(-b, m) (t/2i)^m
        let mut expansion = Vec::with_capacity(a);
        let mut coeff = lead;
        for m in 0..a as i64 {
            expansion.push(coeff.clone());
            let ratio = GaussianRational::from_frac(-(self.b as i64) - m, m + 1);
            coeff = &(&coeff * &ratio) * &inv_two_i;
        }
        (0..a)
            .map(|m| {
                let mut acc = Poly::zero();
                for k in 0..=m {
                    if let Some(nk) = shifted.get(k) {
                        acc.add_assign_ref(&nk.scale(&expansion[m - k]));
                    }
                }
                acc
            })
            .collect()
    }

    /// Partial-fraction part with poles at `ξ_n = +i`.
    pub fn pi_plus(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let degree = self.num.len() - 1;
        if degree >= (self.a + self.b) as usize {
            return Err(Error::ImproperRational { degree, poles: self.a + self.b });
        }
        if self.a == 0 {
            return Ok(Self::zero());
        }
        let g = self.principal_taylor();
        let i = GaussianRational::i();
        let mut num = Vec::new();
        let mut power = vec![Poly::one()];
        for gm in &g {
            num = poly_add(&num, &poly_scale(&power, gm));
            power = poly_mul(&power, &linear(&i));
        }
        Ok(Self::new(num, self.a, 0))
    }

    /// `f - π⁺f`.
    pub fn pi_minus(&self) -> Result<Self> {
        Ok(self.sub(&self.pi_plus()?))
    }

    /// `∫_ℝ f dξ_n = 2πi · Res_{ξ_n = i} f`, returned with the `PI` generator.
    pub fn integrate_real_line(&self) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let degree = self.num.len() - 1;
        let poles = self.a + self.b;
        if degree + 2 > poles as usize {
            return Err(Error::InsufficientDecay { degree, poles });
        }
        if self.a == 0 {
            return Ok(Poly::zero());
        }
        let residue = self.principal_taylor().pop().expect("a > 0");
        let two_pi_i = Poly::constant(GaussianRational::from_parts(0, 1, 2, 1)) * Poly::gen(Generator::Pi);
        Ok(residue.mul_ref(&two_pi_i))
    }

    /// Multiplicative inverse, defined when the numerator is a nonzero constant
    /// times powers of `(ξ_n ∓ i)`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let i = GaussianRational::i();
        let mi = -&i;
        let mut num = self.num.clone();
        let (mut za, mut zb) = (0u32, 0u32);
        while num.len() > 1 && eval_at(&num, &i).is_zero() {
            num = div_linear(&num, &i);
            za += 1;
        }
        while num.len() > 1 && eval_at(&num, &mi).is_zero() {
            num = div_linear(&num, &mi);
            zb += 1;
        }
        let c = match num.as_slice() {
            [c] => c.as_constant().ok_or_else(|| Error::NonInvertible(format!("symbolic numerator {c}")))?,
            _ => return Err(Error::NonInvertible(format!("numerator of degree {} has roots off ±i", num.len() - 1))),
        };
        let inv = Poly::constant(c.inv()?);
        // 1/f = (ξ-i)^{a-za} (ξ+i)^{b-zb} / c with the remaining zeros moved to the denominator.
        let top = mul_linear_pow(&mul_linear_pow(&[inv], &i, self.a), &mi, self.b);
        Ok(Self::new(top, za, zb))
    }

    /// Floating evaluation at a complex `ξ_n`.
    pub fn eval_numeric(
        &self,
        xi_n: Complex64,
        assignment: &std::collections::HashMap<Generator, Complex64>,
    ) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.num.iter().rev() {
            acc = acc * xi_n + c.eval_numeric(assignment)?;
        }
        let i = Complex64::new(0.0, 1.0);
        Ok(acc / ((xi_n - i).powu(self.a) * (xi_n + i).powu(self.b)))
    }

    pub fn generators(&self) -> std::collections::BTreeSet<Generator> {
        self.num.iter().flat_map(Poly::generators).collect()
    }
}

impl Ring for RationalXi {
    fn zero() -> Self {
        RationalXi::zero()
    }
    fn one() -> Self {
        RationalXi::one()
    }
    fn is_zero(&self) -> bool {
        RationalXi::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    /// Brings every term over the common denominator and normalizes once.
    fn sum(items: Vec<Self>) -> Self {
        let items: Vec<Self> = items.into_iter().filter(|x| !x.is_zero()).collect();
        if items.len() <= 1 {
            return items.into_iter().next().unwrap_or_else(Self::zero);
        }
        let a = items.iter().map(|x| x.a).max().unwrap_or(0);
        let b = items.iter().map(|x| x.b).max().unwrap_or(0);
        let i = GaussianRational::i();
        let mi = -&i;
        let mut num: Vec<Poly> = Vec::new();
        for x in &items {
            let lifted = mul_linear_pow(&mul_linear_pow(&x.num, &i, a - x.a), &mi, b - x.b);
            if num.len() < lifted.len() {
                num.resize(lifted.len(), Poly::zero());
            }
            for (slot, c) in num.iter_mut().zip(&lifted) {
                slot.add_assign_ref(c);
            }
        }
        Self::new(num, a, b)
    }
}

impl From<Poly> for RationalXi {
    fn from(p: Poly) -> Self {
        RationalXi::constant(p)
    }
}

impl fmt::Display for RationalXi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "(")?;
        let mut first = true;
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*xn")?,
                _ => write!(f, "({c})*xn^{k}")?,
            }
        }
        write!(f, ")")?;
        if self.a > 0 {
            write!(f, "/(xn-i)^{}", self.a)?;
        }
        if self.b > 0 {
            write!(f, "/(xn+i)^{}", self.b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalXi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
