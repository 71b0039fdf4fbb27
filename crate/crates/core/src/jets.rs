//! First-order normal jets of boundary symbols at `x₀`, composition and inversion.
//!
//! All tangential derivatives vanish at `x₀` in the normal coordinates used
//! here, so the composition formula only sees the `∂_{ξ_n} · D_{x_n}` term.

use crate::algebra::{GaussianRational, Poly};
use crate::clifford::{self, CliffordOp};
use crate::error::{Error, Result};
use crate::geometry::GeometryTable;
use crate::xi::{MatrixSymbol, RationalXi};

/// A symbol at `x_n = 0` with its first `x_n`-derivative, when known.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolJet {
    pub value: MatrixSymbol,
    /// `None` means the derivative was not tracked; asking for it is an error.
    pub dxn: Option<MatrixSymbol>,
}

impl SymbolJet {
    pub fn new(value: MatrixSymbol, dxn: MatrixSymbol) -> Self {
        Self { value, dxn: Some(dxn) }
    }

    /// An `x_n`-independent jet.
    pub fn constant(value: MatrixSymbol) -> Self {
        let n = value.n;
        Self { value, dxn: Some(MatrixSymbol::zero(n)) }
    }

    /// A jet whose normal derivative is not tracked.
    pub fn value_only(value: MatrixSymbol) -> Self {
        Self { value, dxn: None }
    }

    pub fn identity(n: usize) -> Self {
        Self::constant(MatrixSymbol::identity(n))
    }

    pub fn zero(n: usize) -> Self {
        Self::constant(MatrixSymbol::zero(n))
    }

    pub fn n(&self) -> usize {
        self.value.n
    }

    pub fn add(&self, o: &Self) -> Self {
        let dxn = match (&self.dxn, &o.dxn) {
            (Some(a), Some(b)) => Some(a.add(b)),
            _ => None,
        };
        Self { value: self.value.add(&o.value), dxn }
    }

    pub fn neg(&self) -> Self {
        Self { value: self.value.neg(), dxn: self.dxn.as_ref().map(MatrixSymbol::neg) }
    }

    pub fn scale(&self, s: &RationalXi) -> Self {
        Self { value: self.value.scale(s), dxn: self.dxn.as_ref().map(|d| d.scale(s)) }
    }
}

/// Leibniz product.
pub fn jet_mul(f: &SymbolJet, g: &SymbolJet) -> Result<SymbolJet> {
    if f.n() != g.n() {
        return Err(Error::DimensionMismatch(f.n(), g.n()));
    }
    let value = f.value.try_mul(&g.value)?;
    let dxn = match (&f.dxn, &g.dxn) {
        (Some(df), Some(dg)) => Some(df.mul(&g.value).add(&f.value.mul(dg))),
        _ => None,
    };
    Ok(SymbolJet { value, dxn })
}

/// `∂_{ξ_n}` on both components.
pub fn jet_d_xi_n(f: &SymbolJet) -> SymbolJet {
    SymbolJet { value: f.value.d_xi_n(), dxn: f.dxn.as_ref().map(MatrixSymbol::d_xi_n) }
}

/// `∂_{x_n} f` at `x₀`.
pub fn jet_d_xn(f: &SymbolJet) -> Result<MatrixSymbol> {
    f.dxn.clone().ok_or_else(|| Error::InsufficientJetOrder("normal derivative not tracked for this symbol".into()))
}

/// `∂_{x_n}^k` for `k ≤ 1`.
pub fn jet_d_xn_pow(f: &SymbolJet, k: u32) -> Result<MatrixSymbol> {
    match k {
        0 => Ok(f.value.clone()),
        1 => jet_d_xn(f),
        _ => Err(Error::InsufficientJetOrder(format!("{k}-th normal derivative requested of a first-order jet"))),
    }
}

/// Jet of `c(ξ')` on `|ξ'| = 1`, using `∂_{x_n}c(ξ') = (h'(0)/2) c(ξ')`.
pub fn c_xi_prime_jet(n: usize) -> SymbolJet {
    let geo = GeometryTable::new(n);
    let cx = clifford::c_xi_prime(n);
    let dx = cx.scale(&geo.dxn_of_cxi);
    SymbolJet::new(MatrixSymbol::from_clifford(&cx), MatrixSymbol::from_clifford(&dx))
}

/// Jet of `c(ξ) = c(ξ') + ξ_n c(dx_n)`.
pub fn c_xi_jet(n: usize) -> SymbolJet {
    let normal = MatrixSymbol::polynomial(n, &[CliffordOp::zero(n), clifford::c(n, n)]);
    c_xi_prime_jet(n).add(&SymbolJet::constant(normal))
}

/// Scalar jet of `|ξ|²`: value `1 + ξ_n²`, derivative `h'(0)`.
pub fn norm_sq_jet(n: usize) -> SymbolJet {
    let geo = GeometryTable::new(n);
    let value = RationalXi::new(vec![Poly::one(), Poly::zero(), Poly::one()], 0, 0);
    SymbolJet::new(MatrixSymbol::scalar(n, value), MatrixSymbol::scalar(n, RationalXi::constant(geo.dxn_of_norm)))
}

/// Scalar jet of `|ξ|^{-2}` by the quotient rule.
pub fn inv_norm_sq_jet(n: usize) -> SymbolJet {
    let geo = GeometryTable::new(n);
    let inv = RationalXi::inv_norm_sq();
    let d = inv.mul(&inv).scale(&geo.dxn_of_norm.neg_ref());
    SymbolJet::new(MatrixSymbol::scalar(n, inv), MatrixSymbol::scalar(n, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiracVariant {
    /// `D_v = d + δ + l(v)`
    Dv,
    /// `D_v^* = d + δ + ε(v^*)`
    DvStar,
}

/// `(σ_1, σ_0)` of `D_v` or `D_v^*` at `x₀`.
pub fn symbol_of_d(n: usize, variant: DiracVariant) -> (SymbolJet, SymbolJet) {
    let i = RationalXi::constant(Poly::i());
    let p1 = c_xi_jet(n).scale(&i);
    let (a, b) = clifford::build_connection_ops(n);
    let pert = match variant {
        DiracVariant::Dv => clifford::l_v(n),
        DiracVariant::DvStar => clifford::eps_v_star(n),
    };
    let p0 = SymbolJet::value_only(MatrixSymbol::from_clifford(&a.add(&b).add(&pert)));
    (p1, p0)
}

/// Homogeneous components of a symbol, highest order first.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedSymbol {
    pub order: i32,
    pub parts: Vec<SymbolJet>,
}

impl GradedSymbol {
    pub fn new(order: i32, parts: Vec<SymbolJet>) -> Self {
        Self { order, parts }
    }

    pub fn n(&self) -> usize {
        self.parts[0].n()
    }

    /// Component of order `order - drop`, zero when absent.
    pub fn part(&self, drop: usize) -> SymbolJet {
        self.parts.get(drop).cloned().unwrap_or_else(|| SymbolJet::zero(self.n()))
    }
}

/// `σ(A∘B) = Σ_α (1/α!) ∂_ξ^α σ(A) · D_x^α σ(B)` through total order drop `drop ≤ 1`.
pub fn compose_symbols(left: &GradedSymbol, right: &GradedSymbol, drop: usize) -> Result<GradedSymbol> {
    if drop > 1 {
        return Err(Error::InsufficientJetOrder(format!("composition to depth {drop} needs higher normal jets")));
    }
    if left.n() != right.n() {
        return Err(Error::DimensionMismatch(left.n(), right.n()));
    }
    let (l0, r0) = (left.part(0), right.part(0));
    let top = jet_mul(&l0, &r0)?;
    let mut parts = vec![top];
    if drop == 1 {
        let (l1, r1) = (left.part(1), right.part(1));
        let minus_i = RationalXi::constant(Poly::constant(GaussianRational::from_parts(0, 1, -1, 1)));
        let cross = l0.value.d_xi_n().mul(&jet_d_xn(&r0)?.scale(&minus_i));
        let next = l0.value.mul(&r1.value).add(&l1.value.mul(&r0.value)).add(&cross);
        parts.push(SymbolJet::value_only(next));
    }
    Ok(GradedSymbol::new(left.order + right.order, parts))
}

/// Leading inverse `q = p⁻¹` as a jet and the next component.
///
/// `p_top² ` must be a scalar; then `p⁻¹ = p/p²`, `∂_{x_n}q = -q (∂_{x_n}p) q` and
/// `q_next = -q [p_next q + ∂_{ξ_n}p_top · D_{x_n} q]`.
pub fn invert_symbol(p_top: &SymbolJet, p_next: &SymbolJet, top_order: i32) -> Result<(SymbolJet, MatrixSymbol)> {
    let sq = p_top.value.mul(&p_top.value);
    let s = sq
        .as_scalar()
        .ok_or_else(|| Error::NonInvertible(format!("square of the order-{top_order} symbol is not scalar")))?;
    let q = p_top.value.scale(&s.inverse()?);
    let dq = q.mul(&jet_d_xn(p_top)?).mul(&q).neg();
    let minus_i = RationalXi::constant(Poly::constant(GaussianRational::from_parts(0, 1, -1, 1)));
    let inner = p_next.value.mul(&q).add(&p_top.value.d_xi_n().mul(&dq.scale(&minus_i)));
    let q_next = q.mul(&inner).neg();
    Ok((SymbolJet::new(q, dq), q_next))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperatorKind {
    Dv,
    DvStar,
    /// `D_v^* D_v D_v^*`
    D3,
}

impl OperatorKind {
    pub fn order(self) -> i32 {
        match self {
            OperatorKind::Dv | OperatorKind::DvStar => 1,
            OperatorKind::D3 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OperatorKind::Dv => "Dv",
            OperatorKind::DvStar => "DvStar",
            OperatorKind::D3 => "D3",
        }
    }
}

impl std::str::FromStr for OperatorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "Dv" => Ok(OperatorKind::Dv),
            "DvStar" => Ok(OperatorKind::DvStar),
            "D3" => Ok(OperatorKind::D3),
            other => Err(Error::Parse(format!("unknown operator {other:?}; expected Dv, DvStar or D3"))),
        }
    }
}

/// Top two homogeneous components of the operator's symbol.
pub fn operator_symbol(n: usize, op: OperatorKind) -> Result<GradedSymbol> {
    let graded = |v| {
        let (p1, p0) = symbol_of_d(n, v);
        GradedSymbol::new(1, vec![p1, p0])
    };
    match op {
        OperatorKind::Dv => Ok(graded(DiracVariant::Dv)),
        OperatorKind::DvStar => Ok(graded(DiracVariant::DvStar)),
        OperatorKind::D3 => {
            let (ds, d) = (graded(DiracVariant::DvStar), graded(DiracVariant::Dv));
            let two = compose_symbols(&ds, &d, 1)?;
            let two = GradedSymbol::new(two.order, vec![two.part(0), two.part(1)]);
            compose_symbols(&two, &ds, 1)
        }
    }
}

/// `σ_{-m}` (as a jet) and `σ_{-m-1}` of the parametrix of an order-`m` operator.
#[derive(Clone, Debug, PartialEq)]
pub struct InverseSymbols {
    pub op: OperatorKind,
    pub top_order: i32,
    pub top: SymbolJet,
    pub next: MatrixSymbol,
}

impl InverseSymbols {
    /// Component of order `r`, as a jet; the sub-leading one has no tracked normal derivative.
    pub fn component(&self, r: i32) -> Option<SymbolJet> {
        if r == self.top_order {
            Some(self.top.clone())
        } else if r == self.top_order - 1 {
            Some(SymbolJet::value_only(self.next.clone()))
        } else {
            None
        }
    }
}

pub fn inverse_symbols(n: usize, op: OperatorKind) -> Result<InverseSymbols> {
    let sym = operator_symbol(n, op)?;
    let (top, next) = invert_symbol(&sym.part(0), &sym.part(1), sym.order)?;
    Ok(InverseSymbols { op, top_order: -sym.order, top, next })
}
