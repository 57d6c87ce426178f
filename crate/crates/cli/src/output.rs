use std::io::{self, Write};
use std::path::PathBuf;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub format: Format,
    pub seed: u64,
    pub budget: u64,
    pub degree_bound: usize,
    pub cache: Option<PathBuf>,
}

/// Whether a command found something that contradicts the expected mathematics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Clean,
    Failures,
}

impl Status {
    pub fn from_clean(clean: bool) -> Status {
        if clean {
            Status::Clean
        } else {
            Status::Failures
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad input; exit code 2.
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

pub type CmdResult = Result<Status, CliError>;

/// A usage error naming the flag or argument at fault.
pub fn usage(flag: &str, e: impl std::fmt::Display) -> CliError {
    CliError::Usage(format!("{flag}: {e}"))
}

impl Ctx {
    /// Prints `body` with `command` and `seed` added at the top level.
    pub fn json(&self, command: &str, body: Value) -> io::Result<()> {
        let mut map = match body {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("result".into(), other);
                m
            }
        };
        map.insert("command".into(), Value::from(command));
        map.insert("seed".into(), Value::from(self.seed));
        let mut out = io::stdout().lock();
        serde_json::to_writer_pretty(&mut out, &Value::Object(map))?;
        writeln!(out)
    }

    pub fn csv(&self, header: &[&str], rows: &[Vec<String>]) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(io::stdout().lock());
        w.write_record(header)?;
        for r in rows {
            w.write_record(r)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn lines<I: IntoIterator<Item = String>>(&self, lines: I) -> io::Result<()> {
        let mut out = io::stdout().lock();
        for l in lines {
            writeln!(out, "{l}")?;
        }
        Ok(())
    }
}
