//! Numeric case values and their comparison against exact reports.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::quad::integrate_real_line;
use super::scenario::{NumericScenario, SphereRule};
use super::symbols::{numeric_inverse, NumericModel};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::sphere::monte_carlo_mean;
use crate::algebra::{Generator, Poly};
use crate::drivers::{enumerate_cases, BoundaryResult, CaseTuple};
use crate::error::{Error, Result};
use crate::jets::OperatorKind;
use crate::par;

/// `(-i)^{j+k+1} / (j+k+1)!` in floating point.
fn tuple_coefficient(t: &CaseTuple) -> Complex64 {
    let e = t.j + t.k + 1;
    let fact: f64 = (1..=e).map(f64::from).product();
    Complex64::new(0.0, -1.0).powu(e) / fact
}

/// Fiber values over one `ξ'` for every tuple, with quadrature error bounds.
pub fn numeric_fibers(
    model: &NumericModel,
    left: OperatorKind,
    right: OperatorKind,
    tuples: &[CaseTuple],
    scenario: &NumericScenario,
) -> Result<Vec<(Complex64, f64)>> {
    // The model metric has no x' dependence, so tangential derivatives vanish.
    let active: Vec<usize> = (0..tuples.len()).filter(|&c| tuples[c].alpha == 0).collect();
    let mut out = vec![(Complex64::new(0.0, 0.0), 0.0); tuples.len()];
    if active.is_empty() {
        return Ok(out);
    }
    let m = scenario.contour.points;
    let rho = scenario.contour.radius;
    let nodes: Vec<(Complex64, Complex64)> = (0..m)
        .map(|p| {
            let e = Complex64::from_polar(1.0, 2.0 * PI * p as f64 / m as f64);
            (Complex64::new(0.0, 1.0) + e * rho, e * rho / m as f64)
        })
        .collect();
    let mut left_vals = vec![Vec::with_capacity(m); tuples.len()];
    for (eta, _) in &nodes {
        let inv = numeric_inverse(model, left, *eta, 1)?;
        for &c in &active {
            let t = &tuples[c];
            left_vals[c].push(inv.component(t.r, t.j)?.value().clone());
        }
    }
    let len = active.iter().map(|&c| tuples[c].j as usize + 2).max().unwrap_or(2);
    let dim = 1usize << model.n;
    let integrand = |x: f64| -> Result<Vec<Complex64>> {
        let inv = numeric_inverse(model, right, Complex64::new(x, 0.0), len)?;
        let mut vals = Vec::with_capacity(active.len());
        for &c in &active {
            let t = &tuples[c];
            let r = inv.component(t.l, t.k)?.derivative_at_origin(t.j as usize + 1);
            // ∂^k_{ξ_n} of the Cauchy integral: (-1)^k k! / (x - η)^{k+1}
            let kf: f64 = (1..=t.k).map(f64::from).product();
            let sign = if t.k % 2 == 0 { 1.0 } else { -1.0 };
            let mut lsum = super::cmat::CMat::zeros(dim);
            for ((eta, w), lv) in nodes.iter().zip(&left_vals[c]) {
                let kern = *w * sign * kf / (Complex64::new(x, 0.0) - eta).powu(t.k + 1);
                lsum.axpy(kern, lv);
            }
            vals.push(lsum.trace_of_product(&r));
        }
        Ok(vals)
    };
    let q = integrate_real_line(integrand, &scenario.quad)?;
    for (slot, &c) in active.iter().enumerate() {
        let coeff = tuple_coefficient(&tuples[c]);
        out[c] = (coeff * q.value[slot], coeff.norm() * q.error);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq)]
pub struct NumericEstimate {
    pub tuple: CaseTuple,
    /// Coefficient of `dx'`, with `π` and `Ω` numeric.
    pub value: Complex64,
    pub error: f64,
    /// Fiber values in the order of `scenario.directions`.
    pub fibers: Vec<Complex64>,
}

/// Numeric values of all tuples of a pair.
pub fn numeric_boundary(
    left: OperatorKind,
    right: OperatorKind,
    tuples: &[CaseTuple],
    scenario: &NumericScenario,
) -> Result<Vec<NumericEstimate>> {
    let base = scenario.model()?;
    let per_dir = par::try_map(&scenario.directions, |d| {
        numeric_fibers(&base.at_direction(d), left, right, tuples, scenario)
    })?;
    let omega = scenario.omega();
    let groups = match scenario.rule {
        SphereRule::CrossPolytope { rotations } => rotations.max(1),
        SphereRule::MonteCarlo { .. } => 1,
    };
    let per_group = scenario.directions.len() / groups;
    let est = tuples
        .iter()
        .enumerate()
        .map(|(c, t)| {
            let fibers: Vec<Complex64> = per_dir.iter().map(|f| f[c].0).collect();
            let quad_err = per_dir.iter().map(|f| f[c].1).fold(0.0, f64::max);
            let k = fibers.len() as f64;
            let mean: Complex64 = fibers.iter().sum::<Complex64>() / k;
            let sampling = match scenario.rule {
                SphereRule::CrossPolytope { .. } if groups > 1 => fibers
                    .chunks(per_group)
                    .map(|g| (g.iter().sum::<Complex64>() / g.len() as f64 - mean).norm())
                    .fold(0.0, f64::max),
                SphereRule::CrossPolytope { .. } => 0.0,
                SphereRule::MonteCarlo { .. } => {
                    let var = fibers.iter().map(|f| (f - mean).norm_sqr()).sum::<f64>() / k;
                    3.0 * (var / k).sqrt()
                }
            };
            NumericEstimate { tuple: *t, value: mean * omega, error: omega * (quad_err + sampling), fibers }
        })
        .collect();
    Ok(est)
}

/// `Ω · mean` of an exact fiber over `pairs` antithetic Monte-Carlo pairs, with the
/// standard error; `π`, `Ω` and the scenario draws are substituted numerically.
pub fn monte_carlo_contribution(fiber: &Poly, scenario: &NumericScenario, pairs: usize, seed: u64) -> Result<(Complex64, f64)> {
    let mut assignment = scenario.assignment();
    let m = scenario.n - 1;
    for i in 0..m {
        assignment.insert(Generator::Xi(i as u8 + 1), Complex64::new(0.0, 0.0));
    }
    let mut failure = None;
    let mut run = |part: fn(Complex64) -> f64| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        monte_carlo_mean(&mut rng, m, pairs, |x| {
            for (i, v) in x.iter().enumerate() {
                assignment.insert(Generator::Xi(i as u8 + 1), Complex64::new(*v, 0.0));
            }
            match fiber.eval_numeric(&assignment) {
                Ok(z) => part(z),
                Err(e) => {
                    failure.get_or_insert(e);
                    0.0
                }
            }
        })
    };
    let (re, se_re) = run(|z| z.re);
    let (im, se_im) = run(|z| z.im);
    if let Some(e) = failure {
        return Err(e);
    }
    let omega = scenario.omega();
    Ok((Complex64::new(re, im) * omega, omega * se_re.hypot(se_im)))
}

/// Numeric value of a single tuple.
pub fn numeric_evaluate_case(
    t: CaseTuple,
    left: OperatorKind,
    right: OperatorKind,
    scenario: &NumericScenario,
) -> Result<NumericEstimate> {
    let mut v = numeric_boundary(left, right, &[t], scenario)?;
    Ok(v.pop().expect("one tuple"))
}

/// All tuples of the pair in enumeration order.
pub fn pair_tuples(n: usize, left: OperatorKind, right: OperatorKind) -> Vec<CaseTuple> {
    enumerate_cases(n, left.order(), right.order())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance {
    pub rel: f64,
    pub abs: f64,
    /// Allowed imaginary part when the exact value is real.
    pub imag: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { rel: 1e-6, abs: 1e-8, imag: 1e-8 }
    }
}

impl Tolerance {
    pub fn accepts(&self, exact: Complex64, numeric: Complex64) -> bool {
        (numeric - exact).norm() <= self.rel * exact.norm() + self.abs
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub tuple: CaseTuple,
    pub exact: Complex64,
    pub numeric: Complex64,
    pub error_bound: f64,
    pub rel_error: f64,
    /// Largest relative deviation between exact and numeric fibers.
    pub fiber_error: f64,
    pub imaginary_flag: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerdictTable {
    pub n: usize,
    pub left: OperatorKind,
    pub right: OperatorKind,
    pub seed: u64,
    pub tolerance: Tolerance,
    pub verdicts: Vec<Verdict>,
    pub exact_total: Complex64,
    pub numeric_total: Complex64,
    pub total_pass: bool,
}

impl VerdictTable {
    pub fn all_pass(&self) -> bool {
        self.total_pass && self.verdicts.iter().all(|v| v.pass)
    }

    /// Per-case pass flags followed by the total's.
    pub fn pattern(&self) -> Vec<bool> {
        self.verdicts.iter().map(|v| v.pass).chain([self.total_pass]).collect()
    }
}

fn rel(exact: Complex64, numeric: Complex64) -> f64 {
    let d = (numeric - exact).norm();
    if exact.norm() > 0.0 {
        d / exact.norm()
    } else {
        d
    }
}

/// Compares every case of an exact result with the oracle.
pub fn crosscheck(result: &BoundaryResult, scenario: &NumericScenario, tol: Tolerance) -> Result<VerdictTable> {
    if result.n != scenario.n {
        return Err(Error::DimensionMismatch(result.n, scenario.n));
    }
    if result.mode != scenario.mode {
        return Err(Error::Invalid("exact result and scenario use different v* modes".into()));
    }
    let tuples: Vec<CaseTuple> = result.cases.iter().map(|c| c.tuple).collect();
    let numeric = numeric_boundary(result.left, result.right, &tuples, scenario)?;
    let assignment = scenario.assignment();
    let mut verdicts = Vec::with_capacity(tuples.len());
    for (case, est) in result.cases.iter().zip(&numeric) {
        let exact = case.contribution.eval_numeric(&assignment)?;
        let mut fiber_error = 0.0f64;
        let mut fiber_ok = true;
        for (dir, nf) in scenario.directions.iter().zip(&est.fibers) {
            let ef = case.fiber.eval_numeric(&scenario.assignment_at(dir))?;
            fiber_error = fiber_error.max(rel(ef, *nf));
            fiber_ok &= tol.accepts(ef, *nf);
        }
        let imaginary_flag = case.contribution.is_real() && est.value.im.abs() > tol.imag * exact.norm().max(1.0);
        let pass = tol.accepts(exact, est.value) && fiber_ok && !imaginary_flag;
        verdicts.push(Verdict {
            tuple: case.tuple,
            exact,
            numeric: est.value,
            error_bound: est.error,
            rel_error: rel(exact, est.value),
            fiber_error,
            imaginary_flag,
            pass,
        });
    }
    let exact_total = result.total.eval_numeric(&assignment)?;
    let numeric_total: Complex64 = numeric.iter().map(|e| e.value).sum();
    let total_pass = tol.accepts(exact_total, numeric_total);
    Ok(VerdictTable {
        n: result.n,
        left: result.left,
        right: result.right,
        seed: scenario.seed,
        tolerance: tol,
        verdicts,
        exact_total,
        numeric_total,
        total_pass,
    })
}
