use clap::Subcommand;
use serde_json::json;

use schat_core::arith;
use schat_core::pgood::{self, PGoodError, PGoodReport};

use crate::output::{usage, CliError, CmdResult, Ctx, Format, Status};

#[derive(Debug, Subcommand)]
pub enum PgoodCmd {
    /// Decide p-goodness of each N (all-totatives-prime when --p is absent).
    Check {
        #[arg(long)]
        p: Option<u64>,
        #[arg(required = true)]
        n: Vec<u64>,
    },
    /// List the p-good numbers up to --limit.
    Enumerate {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
    /// The largest p-good number, certified by brute force; without --p, the
    /// largest n ≤ --limit whose totatives are all prime.
    Largest {
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
        limit: u64,
    },
    /// The weak and strong bounds and their ingredients.
    Bounds {
        #[arg(long)]
        p: u64,
    },
}

fn flag_p(e: PGoodError) -> CliError {
    usage("--p", e)
}

pub fn run(ctx: &Ctx, cmd: PgoodCmd) -> CmdResult {
    match cmd {
        PgoodCmd::Check { p, n } => check(ctx, p, &n),
        PgoodCmd::Enumerate { p, limit } => enumerate(ctx, p, limit),
        PgoodCmd::Largest { p: Some(p), .. } => largest(ctx, p),
        PgoodCmd::Largest { p: None, limit } => largest_unfiltered(ctx, limit),
        PgoodCmd::Bounds { p } => bounds(ctx, p),
    }
}

fn check(ctx: &Ctx, p: Option<u64>, ns: &[u64]) -> CmdResult {
    let reports: Vec<PGoodReport> = ns
        .iter()
        .map(|&n| match p {
            Some(p) => pgood::is_p_good(n, p).map_err(flag_p),
            None => Ok(pgood::all_totatives_prime(n)),
        })
        .collect::<Result<_, _>>()?;
    match ctx.format {
        Format::Plain => ctx.lines(reports.iter().map(PGoodReport::to_line))?,
        Format::Json => ctx.json("pgood check", json!({ "p": p, "reports": reports }))?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.n.to_string(),
                        r.p.map_or_else(String::new, |p| p.to_string()),
                        r.good.to_string(),
                        r.witness.map_or_else(String::new, |w| w.to_string()),
                    ]
                })
                .collect();
            ctx.csv(&["n", "p", "good", "witness"], &rows)?
        }
    }
    Ok(Status::Clean)
}

fn enumerate(ctx: &Ctx, p: Option<u64>, limit: u64) -> CmdResult {
    let values = match p {
        Some(p) => pgood::enumerate_p_good(p, limit).map_err(flag_p)?,
        None => pgood::enumerate_all_totatives_prime(limit),
    };
    match ctx.format {
        Format::Plain => ctx.lines(values.iter().map(u64::to_string))?,
        Format::Json => ctx.json("pgood enumerate", json!({ "p": p, "limit": limit, "values": values }))?,
        Format::Csv => {
            let rows: Vec<Vec<String>> = values.iter().map(|v| vec![v.to_string()]).collect();
            ctx.csv(&["n"], &rows)?
        }
    }
    Ok(Status::Clean)
}

fn largest(ctx: &Ctx, p: u64) -> CmdResult {
    let cert = match pgood::certify_largest(p) {
        Ok(c) => c,
        Err(PGoodError::CertificationFailed { p, detail }) => {
            eprintln!("certification failed for p = {p}: {detail}");
            return Ok(Status::Failures);
        }
        Err(e) => return Err(flag_p(e)),
    };
    match ctx.format {
        Format::Plain => ctx.lines([cert.largest.to_string()])?,
        Format::Json => ctx.json("pgood largest", json!(cert))?,
        Format::Csv => ctx.csv(
            &["p", "largest", "strong_bound", "weak_bound", "scanned"],
            &[vec![
                cert.p.to_string(),
                cert.largest.to_string(),
                cert.strong_bound.map_or_else(String::new, |s| s.to_string()),
                cert.weak_bound.to_string(),
                cert.scanned.to_string(),
            ]],
        )?,
    }
    Ok(Status::Clean)
}

fn largest_unfiltered(ctx: &Ctx, limit: u64) -> CmdResult {
    let largest = *pgood::enumerate_all_totatives_prime(limit).last().expect("1 qualifies");
    match ctx.format {
        Format::Plain => ctx.lines([largest.to_string()])?,
        Format::Json => ctx.json(
            "pgood largest",
            json!({ "p": null, "largest": largest, "strong_bound": null, "weak_bound": null, "scanned": limit }),
        )?,
        Format::Csv => ctx.csv(
            &["p", "largest", "strong_bound", "weak_bound", "scanned"],
            &[vec![String::new(), largest.to_string(), String::new(), String::new(), limit.to_string()]],
        )?,
    }
    Ok(Status::Clean)
}

fn bounds(ctx: &Ctx, p: u64) -> CmdResult {
    let weak = pgood::weak_bound(p).map_err(flag_p)?;
    let s = arith::successor_prime(p).map_err(|e| usage("--p", e))?;
    let ss = arith::successor_prime(s).map_err(|e| usage("--p", e))?;
    let (k, strong) = if p > 7 {
        (Some(arith::kp_floor(p).map_err(|e| usage("--p", e))?), Some(pgood::strong_bound(p).map_err(flag_p)?))
    } else {
        (None, None)
    };
    let fields: Vec<(&str, Option<u64>)> = vec![
        ("p", Some(p)),
        ("successor", Some(s)),
        ("second_successor", Some(ss)),
        ("k", k),
        ("strong_bound", strong),
        ("weak_bound", Some(weak)),
    ];
    let show = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
    match ctx.format {
        Format::Plain => ctx.lines(fields.iter().map(|(k, v)| format!("{k}={}", show(*v))))?,
        Format::Json => {
            let body: serde_json::Map<String, serde_json::Value> =
                fields.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
            ctx.json("pgood bounds", serde_json::Value::Object(body))?
        }
        Format::Csv => {
            let header: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let row = fields.iter().map(|(_, v)| v.map_or_else(String::new, |v| v.to_string())).collect();
            ctx.csv(&header, &[row])?
        }
    }
    Ok(Status::Clean)
}
