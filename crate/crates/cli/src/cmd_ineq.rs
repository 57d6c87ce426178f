use std::path::Path;

use clap::Subcommand;
use serde::Serialize;
use serde_json::json;

use schat_core::arith;
use schat_core::inequalities::{self, Inequality, ScanBudget, ScanReport, Triple};
use schat_core::sieve::PrimeCtx;

use crate::output::{usage, CliError, CmdResult, Ctx, Format, Status};

#[derive(Debug, Subcommand)]
pub enum IneqCmd {
    /// Check every instance up to --limit; exits 1 if any fails.
    Scan {
        /// a19, eq4, chebyshev or bonse; several may be given, comma-separated.
        #[arg(long, value_delimiter = ',', required = true)]
        which: Vec<String>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
    /// Check single instances: a prime q (a19, eq4, chebyshev) or an index k (bonse).
    Check {
        #[arg(long)]
        which: String,
        #[arg(required = true)]
        values: Vec<u64>,
    },
}

pub fn run(ctx: &Ctx, cmd: IneqCmd) -> CmdResult {
    match cmd {
        IneqCmd::Scan { which, limit } => scan(ctx, &parse_which(&which)?, limit),
        IneqCmd::Check { which, values } => check(ctx, parse_which(&[which])?[0], &values),
    }
}

fn parse_which(names: &[String]) -> Result<Vec<Inequality>, CliError> {
    names.iter().map(|w| w.trim().parse::<Inequality>().map_err(|e| usage("--which", e))).collect()
}

/// The sieve cache, if one is configured and present.
fn load_table(path: Option<&Path>) -> Result<Option<PrimeCtx>, CliError> {
    let Some(path) = path else { return Ok(None) };
    if !path.exists() {
        eprintln!("note: sieve cache {} not found; sieving instead", path.display());
        return Ok(None);
    }
    PrimeCtx::load(path).map(Some).map_err(|e| usage("--cache", e))
}

fn scan(ctx: &Ctx, which: &[Inequality], limit: u64) -> CmdResult {
    let table = load_table(ctx.cache.as_deref())?;
    let reports: Vec<ScanReport> = which
        .iter()
        .map(|&w| inequalities::scan_with(w, limit, ScanBudget::default(), table.as_ref()).map_err(|e| usage("--limit", e)))
        .collect::<Result<_, _>>()?;
    match ctx.format {
        Format::Plain => {
            let mut lines = Vec::new();
            for r in &reports {
                lines.push(format!(
                    "which={} range={}..{} checked={} failures={}",
                    r.which,
                    r.range.0,
                    r.range.1,
                    r.checked,
                    r.failures.len()
                ));
                for f in &r.failures {
                    lines.push(format!("failure which={} input={} lhs={} rhs={}", r.which, join(&f.input), f.lhs, f.rhs));
                }
            }
            ctx.lines(lines)?
        }
        Format::Json => ctx.json("ineq scan", json!({ "limit": limit, "reports": reports }))?,
        Format::Csv => {
            let mut rows = Vec::new();
            for r in &reports {
                for f in &r.failures {
                    rows.push(vec![r.which.to_string(), "failure".into(), join(&f.input), f.lhs.clone(), f.rhs.clone(), String::new()]);
                }
                rows.push(vec![r.which.to_string(), "summary".into(), String::new(), String::new(), String::new(), r.checked.to_string()]);
            }
            ctx.csv(&["which", "kind", "input", "lhs", "rhs", "checked"], &rows)?
        }
    }
    Ok(Status::from_clean(reports.iter().all(ScanReport::passed)))
}

#[derive(Debug, Serialize)]
struct Check {
    which: Inequality,
    input: Vec<u64>,
    holds: bool,
}

fn check_one(which: Inequality, v: u64) -> Result<Check, CliError> {
    let bad = |e: &dyn std::fmt::Display| usage("value", format!("{v}: {e}"));
    let (input, holds) = match which {
        Inequality::A19 => {
            if v < 5 || !arith::is_prime(v) {
                return Err(bad(&"need a prime q ≥ 5"));
            }
            let p = arith::predecessor_prime(v).map_err(|e| bad(&e))?;
            let r = arith::predecessor_prime(p).map_err(|e| bad(&e))?;
            (vec![r, p, v], inequalities::check_a19(Triple { r, p, q: v }))
        }
        Inequality::Eq4 => (vec![v], inequalities::check_eq4(v).map_err(|e| bad(&e))?),
        Inequality::Chebyshev => (vec![v], inequalities::check_chebyshev(v).map_err(|e| bad(&e))?),
        Inequality::Bonse => (vec![v], inequalities::check_bonse(v).map_err(|e| bad(&e))?),
    };
    Ok(Check { which, input, holds })
}

fn check(ctx: &Ctx, which: Inequality, values: &[u64]) -> CmdResult {
    let checks: Vec<Check> = values.iter().map(|&v| check_one(which, v)).collect::<Result<_, _>>()?;
    match ctx.format {
        Format::Plain => {
            ctx.lines(checks.iter().map(|c| format!("which={} input={} holds={}", c.which, join(&c.input), c.holds)))?
        }
        Format::Json => ctx.json("ineq check", json!({ "checks": checks }))?,
        Format::Csv => {
            let rows: Vec<Vec<String>> =
                checks.iter().map(|c| vec![c.which.to_string(), join(&c.input), c.holds.to_string()]).collect();
            ctx.csv(&["which", "input", "holds"], &rows)?
        }
    }
    Ok(Status::from_clean(checks.iter().all(|c| c.holds)))
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(";")
}
