//! Matrices of [`RationalXi`] entries on the co-sphere `|ξ'| = 1`.

use std::fmt;

use crate::algebra::Poly;
use crate::clifford::CliffordOp;
use crate::error::{Error, Result};
use crate::matrix::SparseMatrix;

use super::RationalXi;

/// A `2ⁿ×2ⁿ` symbol restricted to `|ξ'| = 1`; entries are kept reduced on the sphere.
#[derive(Clone, PartialEq)]
pub struct MatrixSymbol {
    pub n: usize,
    pub mat: SparseMatrix<RationalXi>,
}

impl MatrixSymbol {
    pub fn from_matrix(n: usize, mat: SparseMatrix<RationalXi>) -> Self {
        Self { n, mat }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_matrix(n, SparseMatrix::zero(1 << n))
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, RationalXi::one())
    }

    pub fn scalar(n: usize, s: RationalXi) -> Self {
        Self::from_matrix(n, SparseMatrix::diagonal(1 << n, s.on_sphere(n)))
    }

    /// Lifts a `ξ_n`-independent operator.
    pub fn from_clifford(op: &CliffordOp) -> Self {
        let n = op.n;
        Self::from_matrix(n, op.mat.convert(|p| RationalXi::constant(p.sphere_normal_form(n))))
    }

    /// `Σ_k ξ_n^k · ops[k]`.
    pub fn polynomial(n: usize, ops: &[CliffordOp]) -> Self {
        let mut out = Self::zero(n);
        let mut power = RationalXi::one();
        for op in ops {
            out = out.add(&Self::from_clifford(op).scale(&power));
            power = power.mul(&RationalXi::xi_n());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.n != o.n {
            return Err(Error::DimensionMismatch(self.n, o.n));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("same dimension")
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.n;
        Ok(Self::from_matrix(n, self.mat.add(&o.mat)?.map(|f| f.on_sphere(n))))
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self::from_matrix(self.n, self.mat.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("same dimension")
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let n = self.n;
        Ok(Self::from_matrix(n, self.mat.mul_then(&o.mat, |f| f.on_sphere(n))?))
    }

    /// Product of a chain of symbols, left to right.
    pub fn product(factors: &[&MatrixSymbol]) -> Self {
        let mut it = factors.iter();
        let first = (*it.next().expect("nonempty product")).clone();
        it.fold(first, |acc, f| acc.mul(f))
    }

    pub fn scale(&self, s: &RationalXi) -> Self {
        let n = self.n;
        Self::from_matrix(n, self.mat.map(|f| f.mul(s).on_sphere(n)))
    }

    pub fn scale_poly(&self, s: &Poly) -> Self {
        let n = self.n;
        Self::from_matrix(n, self.mat.map(|f| f.scale(s).on_sphere(n)))
    }

    pub fn d_xi_n(&self) -> Self {
        let n = self.n;
        Self::from_matrix(n, self.mat.map(|f| f.d_xi_n().on_sphere(n)))
    }

    /// `k`-fold `∂_{ξ_n}`.
    pub fn d_xi_n_pow(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |acc, _| acc.d_xi_n())
    }

    /// Entrywise `π⁺`.
    pub fn pi_plus(&self) -> Result<Self> {
        let n = self.n;
        Ok(Self::from_matrix(n, self.mat.try_map(|f| Ok(f.pi_plus()?.on_sphere(n)))?))
    }

    pub fn trace(&self) -> RationalXi {
        self.mat.trace().on_sphere(self.n)
    }

    pub fn trace_of_product(&self, o: &Self) -> Result<RationalXi> {
        self.check(o)?;
        Ok(self.mat.trace_of_product(&o.mat)?.on_sphere(self.n))
    }

    /// `Some(s)` if the symbol is `s` times the identity.
    pub fn as_scalar(&self) -> Option<RationalXi> {
        self.mat.as_scalar()
    }

    pub fn get(&self, i: usize, j: usize) -> RationalXi {
        self.mat.get(i, j)
    }

    /// Entrywise coefficient substitution, reduced on the sphere afterwards.
    pub fn map_coefficients(&self, f: impl Fn(&Poly) -> Poly + Sync + Send) -> Self {
        let n = self.n;
        Self::from_matrix(n, self.mat.map(|r| r.map_coefficients(&f).on_sphere(n)))
    }
}

impl fmt::Debug for MatrixSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixSymbol(n={}) ", self.n)?;
        fmt::Debug::fmt(&self.mat, f)
    }
}
