//! Sparse commutative polynomials over ℚ(i) in the fixed [`Generator`] alphabet.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use smallvec::SmallVec;

use super::{GaussianRational, Generator};
use crate::error::{Error, Result};

/// A product of generators with positive exponents, sorted by generator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(SmallVec<[(Generator, u16); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn gen(g: Generator) -> Self {
        let mut v = SmallVec::new();
        v.push((g, 1));
        Self(v)
    }

    pub fn from_factors(factors: impl IntoIterator<Item = (Generator, u16)>) -> Self {
        let mut m = Self::one();
        for (g, e) in factors {
            if e > 0 {
                m = m.mul(&Self(SmallVec::from_slice(&[(g, e)])));
            }
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn factors(&self) -> &[(Generator, u16)] {
        &self.0
    }

    pub fn degree_in(&self, g: Generator) -> u16 {
        self.0.iter().find(|(h, _)| *h == g).map_or(0, |(_, e)| *e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| *e as u32).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Self(out)
    }

    /// Removes `exp` copies of `g`; `None` if the monomial has fewer.
    pub fn div_gen(&self, g: Generator, exp: u16) -> Option<Self> {
        let mut out = self.0.clone();
        let pos = out.iter().position(|(h, _)| *h == g)?;
        if out[pos].1 < exp {
            return None;
        }
        out[pos].1 -= exp;
        if out[pos].1 == 0 {
            out.remove(pos);
        }
        Some(Self(out))
    }

    /// Drops all factors matching `pred`, returning `(kept, removed)`.
    pub fn split(&self, pred: impl Fn(Generator) -> bool) -> (Self, Self) {
        let (mut keep, mut take) = (SmallVec::new(), SmallVec::new());
        for &f in &self.0 {
            if pred(f.0) {
                take.push(f);
            } else {
                keep.push(f);
            }
        }
        (Self(keep), Self(take))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (idx, (g, e)) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let mut factors = Vec::new();
        for part in s.split('*') {
            let (g, e) = match part.split_once('^') {
                Some((g, e)) => (g, e.parse::<u16>().map_err(|_| Error::Parse(format!("bad exponent in {part:?}")))?),
                None => (part, 1),
            };
            factors.push((g.parse::<Generator>()?, e));
        }
        Ok(Self::from_factors(factors))
    }
}

/// Finite sum of monomials with nonzero Gaussian-rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(v: i64) -> Self {
        Self::constant(GaussianRational::from_int(v))
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::constant(GaussianRational::from_frac(num, den))
    }

    pub fn gen(g: Generator) -> Self {
        Self::term(GaussianRational::one(), Monomial::gen(g))
    }

    pub fn term(c: GaussianRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, GaussianRational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    /// The constant coefficient if the polynomial has no generators.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_ref(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..exp {
            acc = acc.mul_ref(self);
        }
        acc
    }

    pub fn generators(&self) -> std::collections::BTreeSet<Generator> {
        self.terms.keys().flat_map(|m| m.factors().iter().map(|(g, _)| *g)).collect()
    }

    pub fn contains(&self, pred: impl Fn(Generator) -> bool) -> bool {
        self.terms.keys().any(|m| m.factors().iter().any(|(g, _)| pred(*g)))
    }

    /// Formal partial derivative with respect to `g`.
    pub fn diff(&self, g: Generator) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.degree_in(g);
            if e == 0 {
                continue;
            }
            let reduced = m.div_gen(g, 1).expect("degree checked");
            out.add_term(reduced, &c.scale_int(e as i64));
        }
        out
    }

    /// Replaces every generator `g` for which `f(g)` is `Some` by that polynomial.
    pub fn substitute(&self, f: impl Fn(Generator) -> Option<Poly>) -> Poly {
        let mut cache: HashMap<Generator, Option<Poly>> = HashMap::new();
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut acc = Poly::constant(c.clone());
            let mut kept = Vec::new();
            for &(g, e) in m.factors() {
                let image = cache.entry(g).or_insert_with(|| f(g));
                match image {
                    Some(p) => acc = acc.mul_ref(&p.pow(e as u32)),
                    None => kept.push((g, e)),
                }
                if acc.is_zero() {
                    break;
                }
            }
            let rest = Poly::term(GaussianRational::one(), Monomial::from_factors(kept));
            out.add_assign_ref(&acc.mul_ref(&rest));
        }
        out
    }

    /// Reduces modulo `Σ_{i<n} ξ_i² - 1` by rewriting `ξ_{n-1}² → 1 - Σ_{i<n-1} ξ_i²`
    /// until no power of `ξ_{n-1}` above one remains. The result is the unique
    /// normal form, so it is idempotent and decides equality on the co-sphere.
    pub fn sphere_normal_form(&self, n: usize) -> Poly {
        if n < 2 {
            return self.clone();
        }
        let last = Generator::Xi((n - 1) as u8);
        if !self.terms.keys().any(|m| m.degree_in(last) >= 2) {
            return self.clone();
        }
        let mut rest = Poly::one();
        for i in 1..n - 1 {
            rest.add_assign_ref(&Poly::gen(Generator::Xi(i as u8)).pow(2).neg_ref());
        }
        let mut powers: Vec<Poly> = vec![Poly::one()];
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.degree_in(last);
            if e < 2 {
                out.add_term(m.clone(), c);
                continue;
            }
            let half = (e / 2) as usize;
            while powers.len() <= half {
                let next = powers.last().unwrap().mul_ref(&rest);
                powers.push(next);
            }
            let base = m.div_gen(last, 2 * half as u16).unwrap();
            let lifted = powers[half].mul_ref(&Poly::term(c.clone(), base));
            out.add_assign_ref(&lifted);
        }
        out
    }

    /// Floating evaluation; every generator present must be assigned.
    pub fn eval_numeric(&self, assignment: &HashMap<Generator, Complex64>) -> Result<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_complex();
            for &(g, e) in m.factors() {
                let v = assignment.get(&g).ok_or(Error::MissingAssignment(g))?;
                t *= v.powu(e as u32);
            }
            total += t;
        }
        Ok(total)
    }

    pub fn neg_ref(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn map_coefficients(&self, f: impl Fn(&GaussianRational) -> GaussianRational) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// True when all coefficients are real rationals.
    pub fn is_real(&self) -> bool {
        self.terms.values().all(GaussianRational::is_real)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Generator> for Poly {
    fn from(g: Generator) -> Self {
        Poly::gen(g)
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(o);
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_ref(&o.neg_ref());
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.mul_ref(o)
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        self.mul_ref(&o)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.neg_ref()
    }
}
