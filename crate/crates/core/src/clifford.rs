//! Exterior algebra `∧*ℝⁿ` on the subset basis and its Clifford actions.
//!
//! Basis vectors are subsets of `{1..n}` encoded as bitmasks, bit `j-1` for
//! index `j`. `ε(e_j)` inserts `j` with sign `(-1)^{#{k ∈ S : k < j}}`,
//! `ι(e_j)` is its transpose, `c = ε - ι` and `c̄ = ε + ι`.

use std::fmt;

use crate::algebra::{GaussianRational, Generator, Poly};
use crate::error::{Error, Result};
use crate::geometry::GeometryTable;
use crate::matrix::SparseMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorKind {
    Exterior,
    Interior,
    Clifford,
    CliffordBar,
}

#[derive(Clone, PartialEq)]
pub struct CliffordOp {
    pub n: usize,
    pub mat: SparseMatrix<Poly>,
}

impl CliffordOp {
    pub fn from_matrix(n: usize, mat: SparseMatrix<Poly>) -> Self {
        debug_assert_eq!(mat.dim(), 1 << n);
        Self { n, mat }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_matrix(n, SparseMatrix::zero(1 << n))
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Poly::one())
    }

    pub fn scalar(n: usize, s: Poly) -> Self {
        Self::from_matrix(n, SparseMatrix::diagonal(1 << n, s))
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_matrix(self.n, self.mat.add(&o.mat).expect("same dimension"))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_matrix(self.n, self.mat.sub(&o.mat).expect("same dimension"))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::from_matrix(self.n, self.mat.mul(&o.mat).expect("same dimension"))
    }

    pub fn neg(&self) -> Self {
        Self::from_matrix(self.n, self.mat.neg())
    }

    pub fn scale(&self, s: &Poly) -> Self {
        Self::from_matrix(self.n, self.mat.scale(s))
    }

    pub fn scale_q(&self, s: &GaussianRational) -> Self {
        self.scale(&Poly::constant(s.clone()))
    }

    pub fn anticommutator(&self, o: &Self) -> Self {
        self.mul(o).add(&o.mul(self))
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn product(n: usize, factors: &[&CliffordOp]) -> Self {
        factors.iter().fold(Self::identity(n), |acc, f| acc.mul(f))
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> Poly {
        self.mat.trace()
    }

    /// Trace reduced on the co-sphere `|ξ'| = 1`.
    pub fn trace_on_sphere(&self) -> Poly {
        self.trace().sphere_normal_form(self.n)
    }

    pub fn trace_of_product(&self, o: &Self) -> Poly {
        self.mat.trace_of_product(&o.mat).expect("same dimension")
    }

    /// Entrywise sphere reduction.
    pub fn on_sphere(&self) -> Self {
        let n = self.n;
        Self::from_matrix(n, self.mat.map(|p| p.sphere_normal_form(n)))
    }

    pub fn map_entries(&self, f: impl Fn(&Poly) -> Poly + Sync + Send) -> Self {
        Self::from_matrix(self.n, self.mat.map(f))
    }

    /// `Some(s)` if the operator is `s` times the identity.
    pub fn as_scalar(&self) -> Option<Poly> {
        self.mat.as_scalar()
    }
}

impl fmt::Debug for CliffordOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CliffordOp(n={}) ", self.n)?;
        fmt::Debug::fmt(&self.mat, f)
    }
}

fn exterior_sign(mask: usize, j: usize) -> i64 {
    if (mask & ((1 << (j - 1)) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Matrix of `ε(e_j)`, `ι(e_j)`, `c(e_j)` or `c̄(e_j)`.
pub fn build_generator(n: usize, j: usize, kind: GeneratorKind) -> Result<CliffordOp> {
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    let bit = 1usize << (j - 1);
    let mut triplets = Vec::with_capacity(1 << n);
    for mask in 0..(1usize << n) {
        if mask & bit != 0 {
            continue;
        }
        let s = exterior_sign(mask, j);
        let (ext, int) = match kind {
            GeneratorKind::Exterior => (s, 0),
            GeneratorKind::Interior => (0, s),
            GeneratorKind::Clifford => (s, -s),
            GeneratorKind::CliffordBar => (s, s),
        };
        if ext != 0 {
            triplets.push((mask | bit, mask, Poly::int(ext)));
        }
        if int != 0 {
            triplets.push((mask, mask | bit, Poly::int(int)));
        }
    }
    Ok(CliffordOp::from_matrix(n, SparseMatrix::from_triplets(1 << n, triplets)))
}

/// `c(e_j)`; panics on an out-of-range index.
pub fn c(n: usize, j: usize) -> CliffordOp {
    build_generator(n, j, GeneratorKind::Clifford).expect("valid frame index")
}

/// `c̄(e_j)`; panics on an out-of-range index.
pub fn cbar(n: usize, j: usize) -> CliffordOp {
    build_generator(n, j, GeneratorKind::CliffordBar).expect("valid frame index")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    CliffordCovector,
    CliffordBar,
    InteriorVector,
    ExteriorCovector,
}

impl ActionKind {
    fn generator_kind(self) -> GeneratorKind {
        match self {
            ActionKind::CliffordCovector => GeneratorKind::Clifford,
            ActionKind::CliffordBar => GeneratorKind::CliffordBar,
            ActionKind::InteriorVector => GeneratorKind::Interior,
            ActionKind::ExteriorCovector => GeneratorKind::Exterior,
        }
    }
}

/// `Σ_j components[j] · generator_j`. A list of length `n-1` leaves the normal slot empty.
pub fn action_of(n: usize, components: &[Poly], kind: ActionKind) -> Result<CliffordOp> {
    if components.len() != n && components.len() + 1 != n {
        return Err(Error::LengthMismatch { expected: n, got: components.len() });
    }
    let mut out = CliffordOp::zero(n);
    for (idx, comp) in components.iter().enumerate() {
        if comp.is_zero() {
            continue;
        }
        let g = build_generator(n, idx + 1, kind.generator_kind())?;
        out = out.add(&g.scale(comp));
    }
    Ok(out)
}

/// `c(ξ') = Σ_{i<n} ξ_i c(e_i)` with symbolic components.
pub fn c_xi_prime(n: usize) -> CliffordOp {
    let comps: Vec<Poly> = (1..n).map(|i| Poly::gen(Generator::Xi(i as u8))).collect();
    action_of(n, &comps, ActionKind::CliffordCovector).expect("n-1 components")
}

/// `l(v) = Σ_k V(k) ι(e_k)`.
pub fn l_v(n: usize) -> CliffordOp {
    let comps: Vec<Poly> = (1..=n).map(|k| Poly::gen(Generator::V(k as u8))).collect();
    action_of(n, &comps, ActionKind::InteriorVector).expect("n components")
}

/// `ε(v*) = Σ_k VS(k) ε(e_k)`.
pub fn eps_v_star(n: usize) -> CliffordOp {
    let comps: Vec<Poly> = (1..=n).map(|k| Poly::gen(Generator::VS(k as u8))).collect();
    action_of(n, &comps, ActionKind::ExteriorCovector).expect("n components")
}

/// `A(x₀) = ¼Σ ω_{s,t}(e_i) c(e_i)c̄(e_s)c̄(e_t)` and `B(x₀) = -¼Σ ω_{s,t}(e_i) c(e_i)c(e_s)c(e_t)`.
pub fn build_connection_ops(n: usize) -> (CliffordOp, CliffordOp) {
    let geo = GeometryTable::new(n);
    let quarter = GaussianRational::from_frac(1, 4);
    let cs: Vec<CliffordOp> = (1..=n).map(|j| c(n, j)).collect();
    let cbs: Vec<CliffordOp> = (1..=n).map(|j| cbar(n, j)).collect();
    let mut a = CliffordOp::zero(n);
    let mut b = CliffordOp::zero(n);
    for i in 1..=n {
        for s in 1..=n {
            for t in 1..=n {
                let w = geo.omega(s, t, i);
                if w.is_zero() {
                    continue;
                }
                let w = w.scale(&quarter);
                a = a.add(&CliffordOp::product(n, &[&cs[i - 1], &cbs[s - 1], &cbs[t - 1]]).scale(&w));
                b = b.sub(&CliffordOp::product(n, &[&cs[i - 1], &cs[s - 1], &cs[t - 1]]).scale(&w));
            }
        }
    }
    (a, b)
}
