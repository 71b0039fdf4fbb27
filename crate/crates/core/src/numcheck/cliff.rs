//! Clifford actions built as Kronecker products (Jordan-Wigner), independent of
//! the subset-basis construction used by the exact engine.

use num_complex::Complex64;

use super::cmat::CMat;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

#[derive(Clone, Debug)]
pub struct NumericClifford {
    pub n: usize,
    /// `ε(e_j)` for `j = 1..=n` at index `j - 1`.
    pub ext: Vec<CMat>,
    pub int: Vec<CMat>,
    pub c: Vec<CMat>,
    pub cbar: Vec<CMat>,
}

impl NumericClifford {
    pub fn new(n: usize) -> Self {
        let z = CMat::from_fn(2, |i, j| if i == j { c(if i == 0 { 1.0 } else { -1.0 }) } else { c(0.0) });
        let raise = CMat::from_fn(2, |i, j| if i == 1 && j == 0 { c(1.0) } else { c(0.0) });
        let id = CMat::identity(2);
        let ext: Vec<CMat> = (0..n)
            .map(|j| {
                let mut m = CMat::identity(1);
                for slot in 0..n {
                    let f = match slot.cmp(&j) {
                        std::cmp::Ordering::Less => &z,
                        std::cmp::Ordering::Equal => &raise,
                        std::cmp::Ordering::Greater => &id,
                    };
                    m = m.kron(f);
                }
                m
            })
            .collect();
        let int: Vec<CMat> = ext.iter().map(CMat::transpose).collect();
        let cl = ext.iter().zip(&int).map(|(e, i)| e - i).collect();
        let cb = ext.iter().zip(&int).map(|(e, i)| e + i).collect();
        Self { n, ext, int, c: cl, cbar: cb }
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    /// `Σ_j w_j · mats[j]`.
    pub fn combine(&self, mats: &[CMat], weights: &[f64]) -> CMat {
        let mut out = CMat::zeros(self.dim());
        for (m, w) in mats.iter().zip(weights) {
            if *w != 0.0 {
                out.axpy(c(*w), m);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anticommutation() {
        let cl = NumericClifford::new(4);
        let id = CMat::identity(16);
        for j in 0..4 {
            for k in 0..4 {
                let ac = &cl.c[j].matmul(&cl.c[k]) + &cl.c[k].matmul(&cl.c[j]);
                let expect = if j == k { id.scale(c(-2.0)) } else { CMat::zeros(16) };
                assert!((&ac - &expect).max_abs() < 1e-15);
                let ei = &cl.ext[j].matmul(&cl.int[k]) + &cl.int[k].matmul(&cl.ext[j]);
                let expect = if j == k { id.clone() } else { CMat::zeros(16) };
                assert!((&ei - &expect).max_abs() < 1e-15);
            }
        }
    }
}
