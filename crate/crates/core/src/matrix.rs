//! Row-sparse square matrices over a commutative ring.

use std::fmt;

use crate::algebra::{GaussianRational, Poly};
use crate::error::{Error, Result};
use crate::par;

pub trait Ring: Clone + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    /// Sum of many terms; rings with costly normalization override this.
    fn sum(items: Vec<Self>) -> Self {
        let mut it = items.into_iter();
        let Some(mut acc) = it.next() else { return Self::zero() };
        for x in it {
            acc.add_assign_ref(&x);
        }
        acc
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        Poly::mul_ref(self, other)
    }
    fn neg_ref(&self) -> Self {
        Poly::neg_ref(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        Poly::add_assign_ref(self, other)
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        GaussianRational::zero()
    }
    fn one() -> Self {
        GaussianRational::one()
    }
    fn is_zero(&self) -> bool {
        GaussianRational::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

/// Square matrix stored as sorted `(column, value)` lists per row; zeros are never stored.
#[derive(Clone, PartialEq)]
pub struct SparseMatrix<T> {
    dim: usize,
    rows: Vec<Vec<(usize, T)>>,
}

impl<T: Ring> SparseMatrix<T> {
    pub fn zero(dim: usize) -> Self {
        Self { dim, rows: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(dim, T::one())
    }

    pub fn diagonal(dim: usize, value: T) -> Self {
        if value.is_zero() {
            return Self::zero(dim);
        }
        Self { dim, rows: (0..dim).map(|i| vec![(i, value.clone())]).collect() }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut m = Self::zero(dim);
        for (i, j, v) in triplets {
            m.add_at(i, j, &v);
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        match self.rows[i].binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => self.rows[i][pos].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &T) {
        if v.is_zero() {
            return;
        }
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => {
                row[pos].1.add_assign_ref(v);
                if row[pos].1.is_zero() {
                    row.remove(pos);
                }
            }
            Err(pos) => row.insert(pos, (j, v.clone())),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let rows = par::map_range(self.dim, |i| merge_rows(&self.rows[i], &other.rows[i], |v| v.clone()));
        Ok(Self { dim: self.dim, rows })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let rows = par::map_range(self.dim, |i| merge_rows(&self.rows[i], &other.rows[i], T::neg_ref));
        Ok(Self { dim: self.dim, rows })
    }

    pub fn neg(&self) -> Self {
        self.map(T::neg_ref)
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|v| s.mul_ref(v))
    }

    /// Applies `f` entrywise, dropping entries that become zero.
    pub fn map(&self, f: impl Fn(&T) -> T + Sync + Send) -> Self {
        let rows = par::map_range(self.dim, |i| {
            self.rows[i].iter().filter_map(|(j, v)| Some((*j, f(v))).filter(|(_, w)| !w.is_zero())).collect()
        });
        Self { dim: self.dim, rows }
    }

    pub fn try_map(&self, f: impl Fn(&T) -> Result<T> + Sync + Send) -> Result<Self> {
        let rows = par::map_range(self.dim, |i| -> Result<Vec<(usize, T)>> {
            let mut out = Vec::with_capacity(self.rows[i].len());
            for (j, v) in &self.rows[i] {
                let w = f(v)?;
                if !w.is_zero() {
                    out.push((*j, w));
                }
            }
            Ok(out)
        });
        Ok(Self { dim: self.dim, rows: rows.into_iter().collect::<Result<_>>()? })
    }

    /// Converts entries into another ring.
    pub fn convert<U: Ring>(&self, f: impl Fn(&T) -> U + Sync + Send) -> SparseMatrix<U> {
        let rows = par::map_range(self.dim, |i| {
            self.rows[i].iter().filter_map(|(j, v)| Some((*j, f(v))).filter(|(_, w)| !w.is_zero())).collect()
        });
        SparseMatrix { dim: self.dim, rows }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.mul_then(other, |v| v)
    }

    /// Product with a post-processing hook applied to every accumulated entry.
    pub fn mul_then(&self, other: &Self, finish: impl Fn(T) -> T + Sync + Send) -> Result<Self> {
        self.check_dim(other)?;
        let dim = self.dim;
        let rows = par::map_range(dim, |i| {
            let mut acc: Vec<Vec<T>> = vec![Vec::new(); dim];
            for (k, a) in &self.rows[i] {
                for (j, b) in &other.rows[*k] {
                    acc[*j].push(a.mul_ref(b));
                }
            }
            acc.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_empty())
                .map(|(j, v)| (j, finish(T::sum(v))))
                .filter(|(_, w)| !w.is_zero())
                .collect()
        });
        Ok(Self { dim, rows })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.dim);
        for (i, j, v) in self.entries() {
            t.rows[j].push((i, v.clone()));
        }
        t
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.dim {
            if let Ok(pos) = self.rows[i].binary_search_by_key(&i, |(c, _)| *c) {
                acc.add_assign_ref(&self.rows[i][pos].1);
            }
        }
        acc
    }

    /// `trace(self · other)` without forming the product.
    pub fn trace_of_product(&self, other: &Self) -> Result<T> {
        self.check_dim(other)?;
        let parts = par::map_range(self.dim, |i| {
            let mut acc = T::zero();
            for (k, a) in &self.rows[i] {
                if let Ok(pos) = other.rows[*k].binary_search_by_key(&i, |(c, _)| *c) {
                    acc.add_assign_ref(&a.mul_ref(&other.rows[*k][pos].1));
                }
            }
            acc
        });
        let mut total = T::zero();
        for p in &parts {
            total.add_assign_ref(p);
        }
        Ok(total)
    }

    /// `Some(s)` if the matrix equals `s` times the identity.
    pub fn as_scalar(&self) -> Option<T> {
        let first = self.get(0, 0);
        for (i, row) in self.rows.iter().enumerate() {
            match row.as_slice() {
                [] if first.is_zero() => {}
                [(j, v)] if *j == i && *v == first => {}
                _ => return None,
            }
        }
        Some(first)
    }
}

fn merge_rows<T: Ring>(a: &[(usize, T)], b: &[(usize, T)], fb: impl Fn(&T) -> T) -> Vec<(usize, T)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ka = a.get(i).map_or(usize::MAX, |e| e.0);
        let kb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ka < kb {
            out.push(a[i].clone());
            i += 1;
        } else if kb < ka {
            out.push((kb, fb(&b[j].1)));
            j += 1;
        } else {
            let s = a[i].1.add_ref(&fb(&b[j].1));
            if !s.is_zero() {
                out.push((ka, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

impl<T: Ring + fmt::Display> fmt::Debug for SparseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseMatrix {}x{} ({} nonzeros)", self.dim, self.dim, self.nnz())?;
        for (i, j, v) in self.entries() {
            writeln!(f, "  [{i},{j}] {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> GaussianRational {
        GaussianRational::from_int(v)
    }

    #[test]
    fn product_and_trace_agree() {
        let a = SparseMatrix::from_triplets(3, [(0, 1, q(2)), (1, 2, q(3)), (2, 0, q(5)), (1, 1, q(-1))]);
        let b = SparseMatrix::from_triplets(3, [(1, 0, q(7)), (2, 1, q(1)), (0, 2, q(4))]);
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.get(0, 0), q(14));
        assert_eq!(ab.trace(), a.trace_of_product(&b).unwrap());
        assert_eq!(ab.trace(), b.mul(&a).unwrap().trace());
    }

    #[test]
    fn cancellation_drops_entries() {
        let a = SparseMatrix::from_triplets(2, [(0, 1, q(2))]);
        assert!(a.sub(&a).unwrap().is_zero());
        assert_eq!(a.add(&a.neg()).unwrap().nnz(), 0);
    }

    #[test]
    fn scalar_detection() {
        assert_eq!(SparseMatrix::diagonal(4, q(3)).as_scalar(), Some(q(3)));
        assert_eq!(SparseMatrix::<GaussianRational>::zero(4).as_scalar(), Some(q(0)));
        let mut m = SparseMatrix::diagonal(4, q(3));
        m.add_at(0, 1, &q(1));
        assert_eq!(m.as_scalar(), None);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = SparseMatrix::<GaussianRational>::identity(2);
        let b = SparseMatrix::<GaussianRational>::identity(3);
        assert!(matches!(a.mul(&b), Err(Error::DimensionMismatch(2, 3))));
    }
}
