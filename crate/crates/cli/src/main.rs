use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use wres_cli::job::{parse_job_file, parse_tuple, parse_vstar, Command, Emit, JobSpec, OmegaReading, UsageError};
use wres_cli::run::{render, run, RunError};
use wres_core::drivers::{CaseTuple, InteriorVariant, VStarMode};
use wres_core::jets::OperatorKind;

/// Exact noncommutative residues of Dirac-type operators on manifolds with boundary.
#[derive(Parser)]
#[command(name = "wres", version)]
struct Cli {
    /// Read the whole job from a `key = value` file instead of flags.
    #[arg(long, global = true)]
    job: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Sub>,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value_t = 4)]
    dim: usize,
    /// json, latex or text.
    #[arg(long, default_value = "json")]
    emit: Emit,
    /// dual (v* = v^flat) or independent.
    #[arg(long, default_value = "dual", value_parser = parse_vstar)]
    vstar: VStarMode,
}

#[derive(Args, Clone)]
struct Pair {
    #[arg(long)]
    left: OperatorKind,
    #[arg(long)]
    right: OperatorKind,
}

#[derive(Args, Clone)]
struct Oracle {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 1e-6)]
    tolerance: f64,
    /// How the sphere factor in numeric output is read: xi-sphere or label.
    #[arg(long, default_value = "xi-sphere")]
    omega: OmegaReading,
}

#[derive(Subcommand)]
enum Sub {
    /// Interior residue of D^2, D*^2 or D*D.
    Interior {
        #[command(flatten)]
        common: Common,
        /// dv2, dvstar2 or dvstardv.
        #[arg(long)]
        op: InteriorVariant,
    },
    /// Boundary term summed over all cases, compared with the reference table.
    Boundary {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        oracle: Oracle,
        /// Also check against the numeric oracle over this many seeds.
        #[arg(long, default_value_t = 0)]
        scenarios: usize,
    },
    /// A single case `r,l,k,j,alpha` with its audit trail.
    Case {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pair: Pair,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_tuple)]
        tuple: CaseTuple,
    },
    /// Clifford trace identities used by the engine.
    Identities {
        #[command(flatten)]
        common: Common,
    },
    /// Engine versus the independent numeric oracle.
    Crosscheck {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        oracle: Oracle,
        #[arg(long, default_value_t = 1)]
        scenarios: usize,
    },
}

fn spec_from(sub: Sub) -> JobSpec {
    let base = |cmd: Command, c: &Common| {
        let mut s = JobSpec::new(cmd, c.dim);
        s.emit = c.emit;
        s.vstar = c.vstar;
        s
    };
    let with_pair = |s: &mut JobSpec, p: &Pair| {
        s.left = Some(p.left);
        s.right = Some(p.right);
    };
    let with_oracle = |s: &mut JobSpec, o: &Oracle, n: usize| {
        s.seed = o.seed;
        s.tolerance = o.tolerance;
        s.omega = o.omega;
        s.scenarios = n;
    };
    match sub {
        Sub::Interior { common, op } => {
            let mut s = base(Command::Interior, &common);
            s.op = Some(op);
            s
        }
        Sub::Boundary { common, pair, oracle, scenarios } => {
            let mut s = base(Command::Boundary, &common);
            with_pair(&mut s, &pair);
            with_oracle(&mut s, &oracle, scenarios);
            s
        }
        Sub::Case { common, pair, tuple } => {
            let mut s = base(Command::Case, &common);
            with_pair(&mut s, &pair);
            s.tuple = Some(tuple);
            s
        }
        Sub::Identities { common } => base(Command::Identities, &common),
        Sub::Crosscheck { common, pair, oracle, scenarios } => {
            let mut s = base(Command::Crosscheck, &common);
            with_pair(&mut s, &pair);
            with_oracle(&mut s, &oracle, scenarios);
            s
        }
    }
}

fn usage(e: &UsageError) -> ExitCode {
    eprintln!("wres: {e}");
    ExitCode::from(2)
}

/// Caps the worker pool when `WRES_THREADS` is set.
fn configure_threads() -> Result<(), UsageError> {
    let Ok(v) = std::env::var("WRES_THREADS") else { return Ok(()) };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| UsageError::new("WRES_THREADS", format!("{v:?} is not a positive integer")))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| UsageError::new("WRES_THREADS", e.to_string()))?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(e) = configure_threads() {
        return usage(&e);
    }
    let spec = match (cli.job, cli.command) {
        (Some(path), None) => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => return usage(&UsageError::new("job", format!("{}: {e}", path.display()))),
            };
            match parse_job_file(&text) {
                Ok(s) => s,
                Err(e) => return usage(&e),
            }
        }
        (None, Some(sub)) => spec_from(sub),
        (Some(_), Some(_)) => return usage(&UsageError::new("job", "cannot be combined with a subcommand")),
        (None, None) => return usage(&UsageError::new("command", "missing; see `wres --help`")),
    };
    match run(&spec) {
        Ok(out) => {
            print!("{}", render(&out.report, spec.emit));
            ExitCode::from(out.status.code() as u8)
        }
        Err(RunError::Usage(e)) => usage(&e),
        Err(e) => {
            eprintln!("wres: {e}");
            ExitCode::from(2)
        }
    }
}
