//! Monomial moments over the unit sphere `|ξ'| = 1` in `ℝ^{n-1}`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::algebra::{GaussianRational, Generator, Monomial, Poly};
use crate::error::{Error, Result};

fn double_factorial_odd(k: u32) -> BigInt {
    // (k-1)!! for even k
    let mut acc = BigInt::from(1);
    let mut t = k as i64 - 1;
    while t > 1 {
        acc *= t;
        t -= 2;
    }
    acc
}

/// `∫_{S^{m-1}} Π ξ_i^{e_i} / Ω` for `m = n - 1`, as an exact rational.
pub fn sphere_moment(exponents: &[u32], n: usize) -> BigRational {
    if exponents.iter().any(|e| e % 2 == 1) {
        return BigRational::from_integer(0.into());
    }
    let m = (n - 1) as i64;
    let mut num = BigInt::from(1);
    for &e in exponents {
        num *= double_factorial_odd(e);
    }
    let half: u32 = exponents.iter().sum::<u32>() / 2;
    let mut den = BigInt::from(1);
    for k in 0..half as i64 {
        den *= m + 2 * k;
    }
    BigRational::new(num, den)
}

/// Replaces every `ξ'`-monomial by its sphere moment times `OMEGA`.
pub fn sphere_integrate(p: &Poly, n: usize) -> Result<Poly> {
    let omega = Monomial::gen(Generator::Omega);
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let (rest, xi_part) = m.split(|g| g.is_xi());
        let mut exps = Vec::new();
        for &(g, e) in xi_part.factors() {
            if let Generator::Xi(i) = g {
                if i as usize >= n || i == 0 {
                    return Err(Error::IndexOutOfRange { index: i as usize, n: n - 1 });
                }
            }
            exps.push(e as u32);
        }
        let moment = sphere_moment(&exps, n);
        if moment == BigRational::from_integer(0.into()) {
            continue;
        }
        let w = GaussianRational::new(moment, BigRational::from_integer(0.into()));
        out.add_term(rest.mul(&omega), &(c * &w));
    }
    Ok(out)
}
