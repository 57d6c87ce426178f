use std::path::PathBuf;

use clap::Subcommand;
use serde_json::json;

use schat_core::sieve::{PrimeCtx, CACHE_VERSION};

use crate::output::{usage, CliError, CmdResult, Ctx, Format, Status};

#[derive(Debug, Subcommand)]
pub enum CacheCmd {
    /// Sieve to --limit and write the cache file.
    Build {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=4_000_000_000))]
        limit: u64,
    },
    /// Load the cache file and summarise it.
    Info,
}

fn path(ctx: &Ctx) -> Result<PathBuf, CliError> {
    ctx.cache.clone().ok_or_else(|| usage("--cache", "no cache path (set --cache or SCHAT_SIEVE_CACHE)"))
}

pub fn run(ctx: &Ctx, cmd: CacheCmd) -> CmdResult {
    let path = path(ctx)?;
    let table = match cmd {
        CacheCmd::Build { limit } => {
            let t = PrimeCtx::with_limit(limit);
            t.save(&path).map_err(|e| usage("--cache", e))?;
            t
        }
        CacheCmd::Info => PrimeCtx::load(&path).map_err(|e| usage("--cache", e))?,
    };
    let count = table.primes().len();
    let largest = table.primes().last().copied();
    let shown = path.display().to_string();
    match ctx.format {
        Format::Plain => ctx.lines([
            format!("path={shown}"),
            format!("version={CACHE_VERSION}"),
            format!("limit={}", table.limit()),
            format!("primes={count}"),
            format!("largest={}", largest.map_or_else(|| "-".to_string(), |p| p.to_string())),
        ])?,
        Format::Json => ctx.json(
            "cache",
            json!({
                "path": shown,
                "version": CACHE_VERSION,
                "limit": table.limit(),
                "primes": count,
                "largest": largest,
            }),
        )?,
        Format::Csv => ctx.csv(
            &["path", "version", "limit", "primes", "largest"],
            &[vec![
                shown,
                CACHE_VERSION.to_string(),
                table.limit().to_string(),
                count.to_string(),
                largest.map_or_else(String::new, |p| p.to_string()),
            ]],
        )?,
    }
    Ok(Status::Clean)
}
