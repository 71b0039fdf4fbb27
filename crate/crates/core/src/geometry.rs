//! Boundary-point geometry in normal coordinates for the collar metric
//! `g = h(x_n)^{-1} g_∂ + dx_n²` with `h(0) = 1`.

use crate::algebra::{Generator, Poly};

/// First-order data at `x₀`, all proportional to `h'(0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeometryTable {
    pub n: usize,
    /// `∂_{x_n}|ξ|²` at `x₀` on `|ξ'| = 1`.
    pub dxn_of_norm: Poly,
    /// `∂_{x_n} c(ξ') = dxn_of_cxi · c(ξ')` at `x₀`.
    pub dxn_of_cxi: Poly,
    /// Contracted `Γ^n = g^{ij}Γ^n_{ij}`.
    pub contracted_gamma_n: Poly,
}

impl GeometryTable {
    pub fn new(n: usize) -> Self {
        let h = Poly::gen(Generator::H);
        Self {
            n,
            dxn_of_norm: h.clone(),
            dxn_of_cxi: h.scale(&crate::GaussianRational::from_frac(1, 2)),
            contracted_gamma_n: h.scale(&crate::GaussianRational::from_frac(n as i64 - 1, 2)),
        }
    }

    /// `Γ^k_{ij}(x₀)`, indices in `1..=n`.
    pub fn christoffel(&self, k: usize, i: usize, j: usize) -> Poly {
        let n = self.n;
        let half_h = self.dxn_of_cxi.clone();
        if k == n && i == j && i < n {
            half_h
        } else if k < n && ((i == n && j == k) || (j == n && i == k)) {
            half_h.neg_ref()
        } else {
            Poly::zero()
        }
    }

    /// Connection coefficient `ω_{s,t}(e_i)(x₀)`.
    pub fn omega(&self, s: usize, t: usize, i: usize) -> Poly {
        let n = self.n;
        let half_h = self.dxn_of_cxi.clone();
        if i < n && s == n && t == i {
            half_h
        } else if i < n && s == i && t == n {
            half_h.neg_ref()
        } else {
            Poly::zero()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contracted_christoffel_matches_table() {
        for n in [4usize, 6] {
            let g = GeometryTable::new(n);
            let mut sum = Poly::zero();
            for i in 1..=n {
                sum.add_assign_ref(&g.christoffel(n, i, i));
            }
            assert_eq!(sum, g.contracted_gamma_n);
        }
        assert_eq!(GeometryTable::new(6).contracted_gamma_n, Poly::frac(5, 2) * Poly::gen(Generator::H));
    }

    #[test]
    fn omega_is_antisymmetric() {
        let g = GeometryTable::new(4);
        for s in 1..=4 {
            for t in 1..=4 {
                for i in 1..=4 {
                    assert_eq!(g.omega(s, t, i), g.omega(t, s, i).neg_ref());
                }
            }
        }
    }
}
