//! Job specifications: what to compute and how to print it.

use std::fmt;
use std::str::FromStr;

use wres_core::drivers::{CaseTuple, InteriorVariant, VStarMode};
use wres_core::jets::OperatorKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Interior,
    Boundary,
    Case,
    Identities,
    Crosscheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Interior => "interior",
            Command::Boundary => "boundary",
            Command::Case => "case",
            Command::Identities => "identities",
            Command::Crosscheck => "crosscheck",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Emit {
    #[default]
    Json,
    Latex,
    Text,
}

/// Which sphere the numeric value of `Ω` is taken from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OmegaReading {
    /// `|S^{n-2}|`, the sphere `ξ'` actually ranges over.
    #[default]
    XiSphere,
    /// `|S^{n-1}|`, reading the subscript of `Ω_{n-1}` as the sphere dimension.
    Label,
}

/// A usage error, naming the offending field.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("invalid `{field}`: {message}")]
pub struct UsageError {
    pub field: String,
    pub message: String,
}

impl UsageError {
    pub fn new(field: &str, message: impl Into<String>) -> Self {
        Self { field: field.into(), message: message.into() }
    }
}

/// Everything that determines one run.
#[derive(Clone, Debug, PartialEq)]
pub struct JobSpec {
    pub command: Command,
    pub dim: usize,
    pub left: Option<OperatorKind>,
    pub right: Option<OperatorKind>,
    pub op: Option<InteriorVariant>,
    pub tuple: Option<CaseTuple>,
    pub emit: Emit,
    pub vstar: VStarMode,
    pub omega: OmegaReading,
    pub seed: u64,
    pub tolerance: f64,
    /// Oracle scenarios; `0` skips the oracle where it is optional.
    pub scenarios: usize,
}

impl JobSpec {
    pub fn new(command: Command, dim: usize) -> Self {
        Self {
            command,
            dim,
            left: None,
            right: None,
            op: None,
            tuple: None,
            emit: Emit::Json,
            vstar: VStarMode::Dual,
            omega: OmegaReading::XiSphere,
            seed: 1,
            tolerance: 1e-6,
            scenarios: if command == Command::Crosscheck { 1 } else { 0 },
        }
    }

    /// Checks the fields a command needs.
    pub fn validate(&self) -> Result<(), UsageError> {
        if self.dim < 4 || self.dim % 2 == 1 {
            return Err(UsageError::new("dim", format!("{} is not an even dimension >= 4", self.dim)));
        }
        if !(self.tolerance > 0.0 && self.tolerance < 1.0) {
            return Err(UsageError::new("tolerance", format!("{} is not in (0, 1)", self.tolerance)));
        }
        match self.command {
            Command::Interior => {
                if self.op.is_none() {
                    return Err(UsageError::new("op", "required by `interior`"));
                }
            }
            Command::Boundary | Command::Case | Command::Crosscheck => {
                let left = self.left.ok_or_else(|| UsageError::new("left", format!("required by `{}`", self.command.name())))?;
                let right = self.right.ok_or_else(|| UsageError::new("right", format!("required by `{}`", self.command.name())))?;
                if !wres_core::drivers::supported_pair(self.dim, left, right) {
                    return Err(UsageError::new(
                        "right",
                        format!("pair ({}, {}) is not supported at dim {}", left.name(), right.name(), self.dim),
                    ));
                }
                if self.command == Command::Case {
                    let t = self.tuple.ok_or_else(|| UsageError::new("tuple", "required by `case`"))?;
                    if t.weight() != -(self.dim as i32) {
                        return Err(UsageError::new("tuple", format!("{t} does not satisfy r+l-k-j-|a|-1 = -{}", self.dim)));
                    }
                    if t.r > -left.order() || t.l > -right.order() {
                        return Err(UsageError::new("tuple", format!("{t} asks for a symbol above the parametrix order")));
                    }
                }
                if self.command == Command::Crosscheck && self.scenarios == 0 {
                    return Err(UsageError::new("scenarios", "crosscheck needs at least one scenario"));
                }
            }
            Command::Identities => {}
        }
        Ok(())
    }

    /// `key = value` lines, accepted back by [`parse_job_file`].
    pub fn to_job_file(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| out.push_str(&format!("{k} = {v}\n"));
        line("command", self.command.name().into());
        line("dim", self.dim.to_string());
        if let Some(l) = self.left {
            line("left", l.name().into());
        }
        if let Some(r) = self.right {
            line("right", r.name().into());
        }
        if let Some(op) = self.op {
            line("op", op.name().into());
        }
        if let Some(t) = self.tuple {
            line("tuple", format!("{},{},{},{},{}", t.r, t.l, t.k, t.j, t.alpha));
        }
        line("emit", self.emit.to_string());
        line("vstar", vstar_name(self.vstar).into());
        line("omega", self.omega.to_string());
        line("seed", self.seed.to_string());
        line("tolerance", format!("{:e}", self.tolerance));
        line("scenarios", self.scenarios.to_string());
        out
    }
}

pub fn vstar_name(m: VStarMode) -> &'static str {
    match m {
        VStarMode::Dual => "dual",
        VStarMode::Independent => "independent",
    }
}

impl FromStr for Command {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "interior" => Command::Interior,
            "boundary" => Command::Boundary,
            "case" => Command::Case,
            "identities" => Command::Identities,
            "crosscheck" => Command::Crosscheck,
            _ => return Err(format!("unknown command {s:?}")),
        })
    }
}

impl FromStr for Emit {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "json" => Emit::Json,
            "latex" => Emit::Latex,
            "text" => Emit::Text,
            _ => return Err(format!("expected json, latex or text, got {s:?}")),
        })
    }
}

impl fmt::Display for Emit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Emit::Json => "json",
            Emit::Latex => "latex",
            Emit::Text => "text",
        })
    }
}

impl FromStr for OmegaReading {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "xi-sphere" => OmegaReading::XiSphere,
            "label" => OmegaReading::Label,
            _ => return Err(format!("expected xi-sphere or label, got {s:?}")),
        })
    }
}

impl fmt::Display for OmegaReading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OmegaReading::XiSphere => "xi-sphere",
            OmegaReading::Label => "label",
        })
    }
}

pub fn parse_vstar(s: &str) -> Result<VStarMode, String> {
    match s {
        "dual" => Ok(VStarMode::Dual),
        "independent" => Ok(VStarMode::Independent),
        _ => Err(format!("expected dual or independent, got {s:?}")),
    }
}

/// `r,l,k,j,alpha`
pub fn parse_tuple(s: &str) -> Result<CaseTuple, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 5 {
        return Err(format!("expected five comma-separated integers r,l,k,j,alpha, got {s:?}"));
    }
    let int = |p: &str| p.parse::<i32>().map_err(|_| format!("{p:?} is not an integer"));
    let nat = |p: &str| p.parse::<u32>().map_err(|_| format!("{p:?} is not a nonnegative integer"));
    Ok(CaseTuple::new(int(parts[0])?, int(parts[1])?, nat(parts[2])?, nat(parts[3])?, nat(parts[4])?))
}

/// Parses a job file of `key = value` lines; `#` starts a comment.
pub fn parse_job_file(text: &str) -> Result<JobSpec, UsageError> {
    let mut fields = std::collections::BTreeMap::new();
    for (no, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| UsageError::new("job", format!("line {}: expected `key = value`", no + 1)))?;
        let k = k.trim().to_string();
        if fields.insert(k.clone(), v.trim().to_string()).is_some() {
            return Err(UsageError::new(&k, "given twice"));
        }
    }
    let take = |fields: &mut std::collections::BTreeMap<String, String>, k: &str| fields.remove(k);
    let command: Command = take(&mut fields, "command")
        .ok_or_else(|| UsageError::new("command", "missing"))?
        .parse()
        .map_err(|e| UsageError::new("command", e))?;
    let dim = take(&mut fields, "dim")
        .ok_or_else(|| UsageError::new("dim", "missing"))?
        .parse::<usize>()
        .map_err(|e| UsageError::new("dim", e.to_string()))?;
    let mut spec = JobSpec::new(command, dim);
    let op_kind = |k: &str, v: String| v.parse::<OperatorKind>().map_err(|e| UsageError::new(k, e.to_string()));
    if let Some(v) = take(&mut fields, "left") {
        spec.left = Some(op_kind("left", v)?);
    }
    if let Some(v) = take(&mut fields, "right") {
        spec.right = Some(op_kind("right", v)?);
    }
    if let Some(v) = take(&mut fields, "op") {
        spec.op = Some(v.parse().map_err(|e: wres_core::Error| UsageError::new("op", e.to_string()))?);
    }
    if let Some(v) = take(&mut fields, "tuple") {
        spec.tuple = Some(parse_tuple(&v).map_err(|e| UsageError::new("tuple", e))?);
    }
    if let Some(v) = take(&mut fields, "emit") {
        spec.emit = v.parse().map_err(|e| UsageError::new("emit", e))?;
    }
    if let Some(v) = take(&mut fields, "vstar") {
        spec.vstar = parse_vstar(&v).map_err(|e| UsageError::new("vstar", e))?;
    }
    if let Some(v) = take(&mut fields, "omega") {
        spec.omega = v.parse().map_err(|e| UsageError::new("omega", e))?;
    }
    if let Some(v) = take(&mut fields, "seed") {
        spec.seed = v.parse().map_err(|_| UsageError::new("seed", format!("{v:?} is not an unsigned integer")))?;
    }
    if let Some(v) = take(&mut fields, "tolerance") {
        spec.tolerance = v.parse().map_err(|_| UsageError::new("tolerance", format!("{v:?} is not a number")))?;
    }
    if let Some(v) = take(&mut fields, "scenarios") {
        spec.scenarios = v.parse().map_err(|_| UsageError::new("scenarios", format!("{v:?} is not an unsigned integer")))?;
    }
    if let Some(k) = fields.keys().next() {
        return Err(UsageError::new(k, "unknown key"));
    }
    spec.validate()?;
    Ok(spec)
}
