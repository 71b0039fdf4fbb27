//! Report data and its canonical JSON form.
//!
//! Exact coefficients travel as `"num/den"` strings with real and imaginary
//! parts separated; the zero polynomial is the string `"0"`. Keys are sorted,
//! so equal reports serialize to identical bytes.

use serde::{Deserialize, Serialize};
use wres_core::algebra::rational_to_string;
use wres_core::drivers::CaseTuple;
use wres_core::{GaussianRational, Monomial, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub monomial: String,
    pub re: String,
    pub im: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyJson {
    Zero(String),
    Terms { terms: Vec<TermJson> },
}

impl PolyJson {
    pub fn from_poly(p: &Poly) -> Self {
        if p.is_zero() {
            return PolyJson::Zero("0".into());
        }
        let terms = p
            .terms()
            .map(|(m, c)| TermJson { monomial: m.to_string(), re: rational_to_string(&c.re), im: rational_to_string(&c.im) })
            .collect();
        PolyJson::Terms { terms }
    }

    pub fn to_poly(&self) -> Result<Poly, String> {
        match self {
            PolyJson::Zero(s) if s == "0" => Ok(Poly::zero()),
            PolyJson::Zero(s) => Err(format!("expected \"0\" or a term list, got {s:?}")),
            PolyJson::Terms { terms } => {
                let mut out = Poly::zero();
                for t in terms {
                    let m: Monomial = t.monomial.parse().map_err(|e: wres_core::Error| e.to_string())?;
                    let c = GaussianRational::from_strings(&t.re, &t.im).map_err(|e| e.to_string())?;
                    out.add_term(m, &c);
                }
                Ok(out)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleJson {
    pub r: i32,
    pub l: i32,
    pub k: u32,
    pub j: u32,
    pub alpha: u32,
}

impl From<CaseTuple> for TupleJson {
    fn from(t: CaseTuple) -> Self {
        Self { r: t.r, l: t.l, k: t.k, j: t.j, alpha: t.alpha }
    }
}

impl From<TupleJson> for CaseTuple {
    fn from(t: TupleJson) -> Self {
        CaseTuple::new(t.r, t.l, t.k, t.j, t.alpha)
    }
}

/// The intermediate values of one case, from traced integrand to sphere integral.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Audit {
    pub coefficient: String,
    /// Traced integrand in `xn = ξ_n`, before the tuple coefficient.
    pub integrand: String,
    /// After the `ξ_n` integral and the coefficient, on `|ξ'| = 1`.
    pub fiber: PolyJson,
    pub tangential_skip: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseJson {
    pub label: String,
    pub tuple: TupleJson,
    pub contribution: PolyJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit: Option<Audit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCase {
    pub label: String,
    pub max_rel_error: String,
    pub max_fiber_error: String,
    pub pass: bool,
}

/// Oracle verdicts over a batch of seeded scenarios.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub rule: String,
    pub seeds: Vec<u64>,
    pub tolerance: String,
    pub omega: String,
    pub cases: Vec<OracleCase>,
    pub total_max_rel_error: String,
    pub total_pass: bool,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tuple: Option<TupleJson>,
    pub engine: PolyJson,
    pub reference: PolyJson,
    /// `engine - reference`.
    pub difference: PolyJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub audit: Option<Audit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: PolyJson,
    pub actual: PolyJson,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub command: String,
    pub dim: usize,
    pub operators: Vec<String>,
    #[serde(rename = "engine-version")]
    pub engine_version: String,
    pub vstar: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InteriorJson {
    pub prefactor: PolyJson,
    /// `trace(s/6 + E')`.
    pub trace: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub meta: Meta,
    pub cases: Vec<CaseJson>,
    pub total: PolyJson,
    pub discrepancies: Vec<Discrepancy>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interior: Option<InteriorJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSummary>,
}

impl Report {
    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&sorted(value)).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn sorted(v: serde_json::Value) -> serde_json::Value {
    use serde_json::Value;
    match v {
        Value::Object(map) => {
            let mut entries: Vec<(String, Value)> = map.into_iter().map(|(k, v)| (k, sorted(v))).collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().collect())
        }
        Value::Array(items) => Value::Array(items.into_iter().map(sorted).collect()),
        other => other,
    }
}

/// Fixed-precision float rendering for oracle numbers.
pub fn float(x: f64) -> String {
    format!("{x:.6e}")
}
