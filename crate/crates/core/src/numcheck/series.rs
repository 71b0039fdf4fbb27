//! Truncated Taylor series in `t = ξ_n - ξ_0` with matrix coefficients.

use num_complex::Complex64;

use super::cmat::{CMat, FLUSH};
use crate::error::Result;

/// `Σ_m c[m] t^m`, exact through `t^{len-1}`.
#[derive(Clone, Debug)]
pub struct MSeries {
    pub c: Vec<CMat>,
}

impl MSeries {
    pub fn constant(m: CMat, len: usize) -> Self {
        let dim = m.dim();
        let mut c = vec![m];
        c.resize(len, CMat::zeros(dim));
        Self { c }
    }

    /// `a + b t`.
    pub fn linear(a: CMat, b: CMat, len: usize) -> Self {
        let mut s = Self::constant(a, len);
        if len > 1 {
            s.c[1] = b;
        }
        s
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn value(&self) -> &CMat {
        &self.c[0]
    }

    /// `k`-th derivative at `t = 0`.
    pub fn derivative_at_origin(&self, k: usize) -> CMat {
        let f: f64 = (1..=k).map(|x| x as f64).product();
        self.c[k].scale(Complex64::new(f, 0.0))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { c: self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self { c: self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self { c: self.c.iter().map(|a| a.scale(z)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let len = self.len().min(o.len());
        let c = (0..len)
            .map(|m| {
                let mut acc = CMat::zeros(self.c[0].dim());
                for p in 0..=m {
                    if self.c[p].is_zero() || o.c[m - p].is_zero() {
                        continue;
                    }
                    acc.add_product(&self.c[p], &o.c[m - p]);
                }
                acc.flush(FLUSH)
            })
            .collect();
        Self { c }
    }

    /// Term-wise derivative in `t`; one coefficient of validity is lost.
    pub fn deriv(&self) -> Self {
        Self { c: (1..self.len()).map(|m| self.c[m].scale(Complex64::new(m as f64, 0.0))).collect() }
    }

    /// `Q` with `P Q = 1`: `Q_0 = P_0^{-1}`, `Q_k = -Q_0 Σ_{m≥1} P_m Q_{k-m}`.
    pub fn inverse(&self) -> Result<Self> {
        let q0 = self.c[0].inverse()?;
        let mut q = vec![q0.clone()];
        for k in 1..self.len() {
            let mut acc = CMat::zeros(q0.dim());
            for m in 1..=k {
                if !self.c[m].is_zero() {
                    acc.add_product(&self.c[m], &q[k - m]);
                }
            }
            q.push(q0.matmul(&acc).scale(Complex64::new(-1.0, 0.0)).flush(FLUSH));
        }
        Ok(Self { c: q })
    }

    pub fn flush(self, rel: f64) -> Self {
        Self { c: self.c.into_iter().map(|m| m.flush(rel)).collect() }
    }

    pub fn truncate(mut self, len: usize) -> Self {
        self.c.truncate(len);
        self
    }
}
