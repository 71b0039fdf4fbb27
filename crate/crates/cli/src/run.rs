//! Executes a [`JobSpec`] and renders the resulting [`Report`].

use wres_core::drivers::{
    boundary_phi, evaluate_case, interior_wres, pair_symbols, BoundaryResult, CaseReport, CaseTuple,
};
use wres_core::jets::OperatorKind;
use wres_core::numcheck::sphere::sphere_area;
use wres_core::numcheck::{crosscheck, NumericScenario, SphereRule, Tolerance};
use wres_core::Poly;

use crate::identities::identity_checks;
use crate::job::{vstar_name, Command, Emit, JobSpec, OmegaReading};
use crate::latex;
use crate::reference::{comparable, label};
use crate::report::{
    float, Audit, CaseJson, Discrepancy, InteriorJson, Meta, OracleCase, OracleSummary, PolyJson, Report,
};

/// Process exit status of a finished run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Discrepancy,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Discrepancy => 1,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Usage(#[from] crate::job::UsageError),
    #[error("engine error: {0}")]
    Engine(#[from] wres_core::Error),
}

pub struct Outcome {
    pub report: Report,
    pub status: Status,
}

fn meta(spec: &JobSpec, operators: Vec<String>) -> Meta {
    Meta {
        command: spec.command.name().into(),
        dim: spec.dim,
        operators,
        engine_version: wres_core::VERSION.into(),
        vstar: vstar_name(spec.vstar).into(),
    }
}

fn audit(c: &CaseReport) -> Audit {
    Audit {
        coefficient: c.tuple.coefficient().to_string(),
        integrand: c.integrand.to_string(),
        fiber: PolyJson::from_poly(&c.fiber),
        tangential_skip: c.tangential,
    }
}

fn case_json(n: usize, c: &CaseReport, with_audit: bool) -> CaseJson {
    CaseJson {
        label: label(n, &c.tuple),
        tuple: c.tuple.into(),
        contribution: PolyJson::from_poly(&c.contribution),
        audit: with_audit.then(|| audit(c)),
    }
}

fn pair(spec: &JobSpec) -> (OperatorKind, OperatorKind) {
    (spec.left.expect("validated"), spec.right.expect("validated"))
}

/// Compares engine values with the reference table.
fn discrepancies(spec: &JobSpec, cases: &[CaseReport], total: Option<&Poly>) -> Vec<Discrepancy> {
    let (left, right) = pair(spec);
    let mut out = Vec::new();
    for r in comparable(spec.dim, left, right, spec.vstar) {
        let (engine, case) = match r.tuple {
            Some(t) => match cases.iter().find(|c| c.tuple == t) {
                Some(c) => (c.contribution.clone(), Some(c)),
                None => continue,
            },
            None => match total {
                Some(p) => (p.clone(), None),
                None => continue,
            },
        };
        if engine != r.value {
            out.push(Discrepancy {
                label: r.label,
                tuple: r.tuple.map(Into::into),
                engine: PolyJson::from_poly(&engine),
                reference: PolyJson::from_poly(&r.value),
                difference: PolyJson::from_poly(&(&engine - &r.value)),
                audit: case.map(audit),
            });
        }
    }
    out
}

/// Runs the oracle over `spec.scenarios` seeds starting at `spec.seed`.
pub fn oracle(spec: &JobSpec, exact: &BoundaryResult) -> Result<OracleSummary, wres_core::Error> {
    let tol = Tolerance { rel: spec.tolerance, ..Tolerance::default() };
    let rule = SphereRule::CrossPolytope { rotations: 1 };
    let seeds: Vec<u64> = (0..spec.scenarios as u64).map(|k| spec.seed + k).collect();
    let mut worst = vec![(0.0f64, 0.0f64, true); exact.cases.len()];
    let mut total_worst = 0.0f64;
    let mut total_pass = true;
    for &seed in &seeds {
        let sc = NumericScenario::new(spec.dim, seed, spec.vstar, rule)?;
        let table = crosscheck(exact, &sc, tol)?;
        for (w, v) in worst.iter_mut().zip(&table.verdicts) {
            w.0 = w.0.max(v.rel_error);
            w.1 = w.1.max(v.fiber_error);
            w.2 &= v.pass;
        }
        let d = (table.numeric_total - table.exact_total).norm();
        total_worst = total_worst.max(if table.exact_total.norm() > 0.0 { d / table.exact_total.norm() } else { d });
        total_pass &= table.total_pass;
    }
    let cases: Vec<OracleCase> = exact
        .cases
        .iter()
        .zip(&worst)
        .map(|(c, w)| OracleCase { label: label(spec.dim, &c.tuple), max_rel_error: float(w.0), max_fiber_error: float(w.1), pass: w.2 })
        .collect();
    let omega = match spec.omega {
        OmegaReading::XiSphere => sphere_area(spec.dim - 2),
        OmegaReading::Label => sphere_area(spec.dim - 1),
    };
    let agrees = total_pass && cases.iter().all(|c| c.pass);
    Ok(OracleSummary {
        rule: "cross-polytope".into(),
        seeds,
        tolerance: float(spec.tolerance),
        omega: format!("{} = {}", spec.omega, float(omega)),
        cases,
        total_max_rel_error: float(total_worst),
        total_pass,
        agrees,
    })
}

fn boundary(spec: &JobSpec) -> Result<Outcome, RunError> {
    let (left, right) = pair(spec);
    let res = boundary_phi(spec.dim, left, right, spec.vstar)?;
    let disc = discrepancies(spec, &res.cases, Some(&res.total));
    let oracle = if spec.scenarios > 0 { Some(oracle(spec, &res)?) } else { None };
    let status = if disc.is_empty() && oracle.as_ref().is_none_or(|o| o.agrees) { Status::Pass } else { Status::Discrepancy };
    let report = Report {
        meta: meta(spec, vec![left.name().into(), right.name().into()]),
        cases: res.cases.iter().map(|c| case_json(spec.dim, c, false)).collect(),
        total: PolyJson::from_poly(&res.total),
        discrepancies: disc,
        checks: Vec::new(),
        interior: None,
        oracle,
    };
    Ok(Outcome { report, status })
}

fn single_case(spec: &JobSpec) -> Result<Outcome, RunError> {
    let (left, right) = pair(spec);
    let t: CaseTuple = spec.tuple.expect("validated");
    let (ls, rs) = pair_symbols(spec.dim, left, right)?;
    let mut c = evaluate_case(t, &ls, &rs, spec.dim)?;
    c.contribution = spec.vstar.apply(&c.contribution);
    c.fiber = spec.vstar.apply(&c.fiber);
    let disc = discrepancies(spec, std::slice::from_ref(&c), None);
    let status = if disc.is_empty() { Status::Pass } else { Status::Discrepancy };
    let report = Report {
        meta: meta(spec, vec![left.name().into(), right.name().into()]),
        cases: vec![case_json(spec.dim, &c, true)],
        total: PolyJson::from_poly(&c.contribution),
        discrepancies: disc,
        checks: Vec::new(),
        interior: None,
        oracle: None,
    };
    Ok(Outcome { report, status })
}

fn interior(spec: &JobSpec) -> Result<Outcome, RunError> {
    let op = spec.op.expect("validated");
    let r = interior_wres(spec.dim, op, spec.vstar)?;
    let report = Report {
        meta: meta(spec, vec![op.name().into()]),
        cases: Vec::new(),
        total: PolyJson::from_poly(&r.total),
        discrepancies: Vec::new(),
        checks: Vec::new(),
        interior: Some(InteriorJson { prefactor: PolyJson::from_poly(&r.prefactor), trace: PolyJson::from_poly(&r.trace) }),
        oracle: None,
    };
    Ok(Outcome { report, status: Status::Pass })
}

fn identities(spec: &JobSpec) -> Outcome {
    let checks = identity_checks(spec.dim);
    let status = if checks.iter().all(|c| c.pass) { Status::Pass } else { Status::Discrepancy };
    let report = Report {
        meta: meta(spec, Vec::new()),
        cases: Vec::new(),
        total: PolyJson::from_poly(&Poly::zero()),
        discrepancies: Vec::new(),
        checks,
        interior: None,
        oracle: None,
    };
    Outcome { report, status }
}

fn oracle_only(spec: &JobSpec) -> Result<Outcome, RunError> {
    let (left, right) = pair(spec);
    let res = boundary_phi(spec.dim, left, right, spec.vstar)?;
    let summary = oracle(spec, &res)?;
    let status = if summary.agrees { Status::Pass } else { Status::Discrepancy };
    let report = Report {
        meta: meta(spec, vec![left.name().into(), right.name().into()]),
        cases: res.cases.iter().map(|c| case_json(spec.dim, c, false)).collect(),
        total: PolyJson::from_poly(&res.total),
        discrepancies: Vec::new(),
        checks: Vec::new(),
        interior: None,
        oracle: Some(summary),
    };
    Ok(Outcome { report, status })
}

pub fn run(spec: &JobSpec) -> Result<Outcome, RunError> {
    spec.validate()?;
    match spec.command {
        Command::Boundary => boundary(spec),
        Command::Case => single_case(spec),
        Command::Interior => interior(spec),
        Command::Identities => Ok(identities(spec)),
        Command::Crosscheck => oracle_only(spec),
    }
}

fn poly_of(p: &PolyJson) -> Poly {
    p.to_poly().expect("report built from exact values")
}

fn render_latex(r: &Report) -> String {
    let n = r.meta.dim;
    let mut out = String::new();
    if let Some(i) = &r.interior {
        out.push_str(&latex::product(&poly_of(&i.prefactor), &poly_of(&i.trace), n));
        out.push('\n');
        return out;
    }
    if !r.checks.is_empty() {
        for c in &r.checks {
            out.push_str(&format!("% {} [{}]\n{}\n", c.name, if c.pass { "ok" } else { "FAIL" }, latex::poly(&poly_of(&c.actual), n)));
        }
        return out;
    }
    for c in &r.cases {
        out.push_str(&format!("% case {}\n{}\n", c.label, latex::poly(&poly_of(&c.contribution), n)));
    }
    out.push_str(&format!("% total\n{}\n", latex::poly(&poly_of(&r.total), n)));
    for d in &r.discrepancies {
        out.push_str(&format!("% reference for {}\n{}\n", d.label, latex::poly(&poly_of(&d.reference), n)));
    }
    out
}

fn render_text(r: &Report) -> String {
    let mut out = format!(
        "{} n={} [{}] v*={} engine {}\n",
        r.meta.command,
        r.meta.dim,
        r.meta.operators.join(", "),
        r.meta.vstar,
        r.meta.engine_version
    );
    if let Some(i) = &r.interior {
        out.push_str(&format!("  prefactor  {}\n  trace      {}\n", poly_of(&i.prefactor), poly_of(&i.trace)));
    }
    for c in &r.checks {
        out.push_str(&format!("  [{}] {}: {}\n", if c.pass { " ok " } else { "FAIL" }, c.name, poly_of(&c.actual)));
    }
    for c in &r.cases {
        let t: CaseTuple = c.tuple.into();
        out.push_str(&format!("  {:<9} {:<36} {}\n", c.label, t.to_string(), poly_of(&c.contribution)));
    }
    if r.checks.is_empty() {
        out.push_str(&format!("  total     {}\n", poly_of(&r.total)));
    }
    for d in &r.discrepancies {
        out.push_str(&format!(
            "  discrepancy {}: engine {} | reference {} | difference {}\n",
            d.label,
            poly_of(&d.engine),
            poly_of(&d.reference),
            poly_of(&d.difference)
        ));
    }
    if let Some(o) = &r.oracle {
        out.push_str(&format!("  oracle over {} seeds, tolerance {}, {}\n", o.seeds.len(), o.tolerance, o.omega));
        for c in &o.cases {
            out.push_str(&format!("    {:<9} max rel {}  fiber {}  {}\n", c.label, c.max_rel_error, c.max_fiber_error, if c.pass { "pass" } else { "FAIL" }));
        }
        out.push_str(&format!("    total     max rel {}  {}\n", o.total_max_rel_error, if o.total_pass { "pass" } else { "FAIL" }));
    }
    out
}

pub fn render(r: &Report, emit: Emit) -> String {
    match emit {
        Emit::Json => r.to_canonical_json(),
        Emit::Latex => render_latex(r),
        Emit::Text => render_text(r),
    }
}
