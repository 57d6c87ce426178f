//! `schat`: p-good numbers, prime inequalities, polynomial models and the
//! axiom catalog from the command line.
//!
//! Exit status: 0 when nothing contradicts the expected mathematics, 1 when a
//! counterexample or failed check was found, 2 on usage errors.

mod cmd_cache;
mod cmd_formula;
mod cmd_ineq;
mod cmd_model;
mod cmd_pgood;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use output::{CliError, Ctx, Format, Status};

#[derive(Debug, Parser)]
#[command(name = "schat", version, about = "p-good numbers, prime inequalities, polynomial models and bounded formula checking")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Seed for every sampler; recorded in JSON reports.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Atomic-evaluation budget per formula instance.
    #[arg(long, global = true, default_value_t = 200_000, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
    /// Largest degree for exhaustive polynomial factor search.
    #[arg(long, global = true, default_value_t = schat_core::poly::DEFAULT_DEGREE_BOUND)]
    degree_bound: usize,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    /// Sieve cache file.
    #[arg(long, global = true, env = "SCHAT_SIEVE_CACHE")]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// p-good numbers and their bounds.
    #[command(subcommand)]
    Pgood(cmd_pgood::PgoodCmd),
    /// Prime inequalities.
    #[command(subcommand)]
    Ineq(cmd_ineq::IneqCmd),
    /// Polynomial models ℤ[X] and ℚ_ℤ[X].
    #[command(subcommand)]
    Model(cmd_model::ModelCmd),
    /// First-order formulas and the axiom catalog.
    #[command(subcommand)]
    Formula(cmd_formula::FormulaCmd),
    /// The sieve cache file.
    #[command(subcommand)]
    Cache(cmd_cache::CacheCmd),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs as usize).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = Ctx {
        format: cli.format,
        seed: cli.seed,
        budget: cli.budget,
        degree_bound: cli.degree_bound,
        cache: cli.cache,
    };
    let result = match cli.command {
        Command::Pgood(c) => cmd_pgood::run(&ctx, c),
        Command::Ineq(c) => cmd_ineq::run(&ctx, c),
        Command::Model(c) => cmd_model::run(&ctx, c),
        Command::Formula(c) => cmd_formula::run(&ctx, c),
        Command::Cache(c) => cmd_cache::run(&ctx, c),
    };
    match result {
        Ok(Status::Clean) => ExitCode::SUCCESS,
        Ok(Status::Failures) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(CliError::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
