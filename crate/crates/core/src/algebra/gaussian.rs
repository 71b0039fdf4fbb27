//! Exact Gaussian rationals `a + b i` with `a, b` in ℚ.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Self { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(v: i64) -> Self {
        Self { re: BigRational::from_integer(BigInt::from(v)), im: BigRational::zero() }
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self { re: ratio(num, den), im: BigRational::zero() }
    }

    /// `(re_num/re_den) + (im_num/im_den) i`
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self { re: ratio(re_num, re_den), im: ratio(im_num, im_den) }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|² = re² + im²`
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `self · o` when `self` is one of `±1, ±i`.
    fn mul_unit(&self, o: &Self) -> Option<Self> {
        let unit = |x: &BigRational| x.is_zero() || x.is_one() || (-x).is_one();
        if !(unit(&self.re) && unit(&self.im)) || self.re.is_zero() == self.im.is_zero() {
            return None;
        }
        Some(if self.im.is_zero() {
            if self.re.is_one() {
                o.clone()
            } else {
                -o
            }
        } else if self.im.is_one() {
            Self { re: -o.im.clone(), im: o.re.clone() }
        } else {
            Self { re: o.im.clone(), im: -o.re.clone() }
        })
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigRational::from_integer(BigInt::from(k));
        Self { re: &self.re * &k, im: &self.im * &k }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().unwrap_or(f64::NAN), self.im.to_f64().unwrap_or(f64::NAN))
    }

    /// Parses the `"num/den"` (or bare integer) strings used in reports.
    pub fn from_strings(re: &str, im: &str) -> Result<Self> {
        Ok(Self { re: parse_rational(re)?, im: parse_rational(im)? })
    }
}

/// Renders an exact rational as `"num/den"`, or `"num"` when integral.
pub fn rational_to_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", rational_to_string(&self.re)),
            (true, false) => write!(f, "{}i", rational_to_string(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "({}{}{}i)", rational_to_string(&self.re), sign, rational_to_string(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if let Some(z) = self.mul_unit(o).or_else(|| o.mul_unit(self)) {
            return z;
        }
        let part = |x: &BigRational, y: &BigRational| {
            if x.is_zero() || y.is_zero() {
                None
            } else {
                Some(x * y)
            }
        };
        let combine = |a: Option<BigRational>, b: Option<BigRational>, sub: bool| match (a, b) {
            (Some(a), Some(b)) => {
                if sub {
                    a - b
                } else {
                    a + b
                }
            }
            (Some(a), None) => a,
            (None, Some(b)) => {
                if sub {
                    -b
                } else {
                    b
                }
            }
            (None, None) => BigRational::zero(),
        };
        GaussianRational {
            re: combine(part(&self.re, &o.re), part(&self.im, &o.im), true),
            im: combine(part(&self.re, &o.im), part(&self.im, &o.re), false),
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, o: &GaussianRational) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_norm_product() {
        let a = GaussianRational::from_parts(1, 2, 1, 2);
        let b = GaussianRational::from_parts(1, 2, -1, 2);
        assert_eq!(&a * &b, GaussianRational::from_frac(1, 2));
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let z = GaussianRational::from_parts(3, 1, 4, 1);
        assert!((&z * &z.inv().unwrap()).is_one());
        assert!(matches!(GaussianRational::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn string_round_trip() {
        let z = GaussianRational::from_parts(-65, 8, 41, 8);
        let back = GaussianRational::from_strings(&rational_to_string(&z.re), &rational_to_string(&z.im)).unwrap();
        assert_eq!(z, back);
        assert_eq!(rational_to_string(&GaussianRational::from_int(-3).re), "-3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
