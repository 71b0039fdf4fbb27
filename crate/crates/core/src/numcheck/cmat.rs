//! Dense complex square matrices.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct CMat {
    dim: usize,
    data: Vec<Complex64>,
}

/// Relative size below which entries are treated as roundoff.
pub const FLUSH: f64 = 1e-14;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

impl CMat {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Complex64::new(1.0, 0.0))
    }

    pub fn scalar(dim: usize, z: Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = z;
        }
        m
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m.data[i * dim + j] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.dim + j] = z;
    }

    pub fn scale(&self, z: Complex64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|a| a * z).collect() }
    }

    /// `self += z · other`.
    pub fn axpy(&mut self, z: Complex64, other: &Self) {
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if b.re != 0.0 || b.im != 0.0 {
                *a += z * b;
            }
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i))
    }

    /// Product that skips zero entries of both factors.
    pub fn matmul(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.dim);
        out.add_product(self, other);
        out
    }

    /// `self += a · b`.
    pub fn add_product(&mut self, a: &Self, b: &Self) {
        let n = self.dim;
        let nz = |z: &Complex64| z.re != 0.0 || z.im != 0.0;
        let brows: Vec<Vec<(usize, Complex64)>> = (0..n)
            .map(|k| b.data[k * n..(k + 1) * n].iter().enumerate().filter(|(_, z)| nz(z)).map(|(j, z)| (j, *z)).collect())
            .collect();
        for i in 0..n {
            let row = &mut self.data[i * n..(i + 1) * n];
            for (k, brow) in brows.iter().enumerate() {
                let x = a.data[i * n + k];
                if !nz(&x) {
                    continue;
                }
                for &(j, y) in brow {
                    row[j] += x * y;
                }
            }
        }
    }

    pub fn kron(&self, other: &Self) -> Self {
        let (p, q) = (self.dim, other.dim);
        Self::from_fn(p * q, |i, j| self.get(i / q, j / q) * other.get(i % q, j % q))
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn trace_of_product(&self, other: &Self) -> Complex64 {
        let n = self.dim;
        let mut acc = ZERO;
        for i in 0..n {
            for k in 0..n {
                acc += self.data[i * n + k] * other.data[k * n + i];
            }
        }
        acc
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).fold(0.0, f64::max).sqrt()
    }

    /// Zeroes entries below `rel · max|a_ij|`, restoring sparsity lost to roundoff.
    pub fn flush(mut self, rel: f64) -> Self {
        let cut = rel * rel * self.data.iter().map(|z| z.norm_sqr()).fold(0.0, f64::max);
        for z in &mut self.data {
            if z.norm_sqr() < cut {
                *z = ZERO;
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    /// Gauss-Jordan inverse with partial pivoting.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.data.clone();
        let mut inv = Self::identity(n).data;
        let scale = self.max_abs().max(f64::MIN_POSITIVE);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&x, &y| a[x * n + col].norm_sqr().total_cmp(&a[y * n + col].norm_sqr()))
                .expect("nonempty");
            if a[pivot * n + col].norm() <= 1e-13 * scale {
                return Err(Error::NonInvertible(format!("numeric pivot vanished in column {col}")));
            }
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                    inv.swap(col * n + j, pivot * n + j);
                }
            }
            let p = a[col * n + col].inv();
            for j in 0..n {
                a[col * n + j] *= p;
                inv[col * n + j] *= p;
            }
            let nz = |z: &Complex64| z.re != 0.0 || z.im != 0.0;
            let arow: Vec<(usize, Complex64)> = (0..n).map(|j| (j, a[col * n + j])).filter(|(_, z)| nz(z)).collect();
            let irow: Vec<(usize, Complex64)> = (0..n).map(|j| (j, inv[col * n + j])).filter(|(_, z)| nz(z)).collect();
            for r in 0..n {
                let f = a[r * n + col];
                if r == col || !nz(&f) {
                    continue;
                }
                for &(j, v) in &arow {
                    a[r * n + j] -= f * v;
                }
                for &(j, v) in &irow {
                    inv[r * n + j] -= f * v;
                }
            }
        }
        Ok(Self { dim: n, data: inv }.flush(FLUSH))
    }
}

impl Add for &CMat {
    type Output = CMat;
    fn add(self, o: &CMat) -> CMat {
        CMat { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &CMat {
    type Output = CMat;
    fn sub(self, o: &CMat) -> CMat {
        CMat { dim: self.dim, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &CMat {
    type Output = CMat;
    fn mul(self, o: &CMat) -> CMat {
        self.matmul(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = CMat::from_fn(5, |i, j| Complex64::new((i * 7 + j * 3) as f64 % 5.0 + (i == j) as u8 as f64 * 4.0, (i as f64 - j as f64) * 0.3));
        let p = m.matmul(&m.inverse().unwrap());
        assert!((&p - &CMat::identity(5)).max_abs() < 1e-12);
    }

    #[test]
    fn singular_matrix_is_rejected() {
        assert!(CMat::zeros(3).inverse().is_err());
    }
}
