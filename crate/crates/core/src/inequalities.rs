//! Scanners for the prime inequalities the extra axioms assert over ℕ:
//! the three-consecutive-primes bound, `S(q)² < 2·q·P(q)`, Chebyshev's
//! `q < 2·P(q)` and Bonse's `p_{k+1}² < p_1···p_k`.

use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, ArithError, Nat};
use crate::sieve::{sieve, PrimeCtx};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IneqError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("{what} = {value} is out of range (need ≥ {min})")]
    OutOfRange { what: &'static str, value: u64, min: u64 },
    #[error("limit {limit} exceeds the configured budget {budget}")]
    BudgetExceeded { limit: u64, budget: u64 },
    #[error("unknown inequality {0:?} (expected a19, eq4, chebyshev or bonse)")]
    UnknownInequality(String),
}

pub type Result<T> = std::result::Result<T, IneqError>;

/// Three consecutive primes `r < p < q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triple {
    pub r: u64,
    pub p: u64,
    pub q: u64,
}

/// Every consecutive-prime triple with `q ≤ limit`, ascending in `q`.
pub fn consecutive_triples(limit: u64) -> impl Iterator<Item = Triple> {
    let primes = sieve(limit);
    let n = primes.len().saturating_sub(2);
    (0..n).map(move |i| Triple { r: primes[i], p: primes[i + 1], q: primes[i + 2] })
}

/// `17 < q → q² < 2pr`. Triples with `q ≤ 17` satisfy the implication vacuously.
pub fn check_a19(t: Triple) -> bool {
    t.q <= 17 || a19_sides(t).0 < a19_sides(t).1
}

fn a19_sides(t: Triple) -> (u128, u128) {
    let q = t.q as u128;
    (q * q, 2 * t.p as u128 * t.r as u128)
}

fn require_prime_at_least(q: u64, min: u64) -> Result<()> {
    if !arith::is_prime(q) {
        return Err(ArithError::NotPrime(q).into());
    }
    if q < min {
        return Err(IneqError::OutOfRange { what: "q", value: q, min });
    }
    Ok(())
}

fn eq4_sides(q: u64, succ: u64, pred: u64) -> (u128, u128) {
    let s = succ as u128;
    (s * s, 2 * q as u128 * pred as u128)
}

/// `S(q)² < 2·q·P(q)` for a prime `q ≥ 17`.
pub fn check_eq4(q: u64) -> Result<bool> {
    require_prime_at_least(q, 17)?;
    let (lhs, rhs) = eq4_sides(q, arith::successor_prime(q)?, arith::predecessor_prime(q)?);
    Ok(lhs < rhs)
}

/// `q < 2·P(q)` for a prime `q ≥ 3`.
pub fn check_chebyshev(q: u64) -> Result<bool> {
    require_prime_at_least(q, 3)?;
    Ok(q < 2 * arith::predecessor_prime(q)?)
}

/// `p_{k+1}² < p_1·p_2···p_k` for `k ≥ 4`, with exact products.
pub fn check_bonse(k: u64) -> Result<bool> {
    if k < 4 {
        return Err(IneqError::OutOfRange { what: "k", value: k, min: 4 });
    }
    let product = arith::primorial_of_first(k as usize);
    let next = nth_prime(k + 1);
    Ok(Nat::from(next) * Nat::from(next) < product)
}

/// The `n`-th prime, 1-based.
fn nth_prime(n: u64) -> u64 {
    let mut ctx = PrimeCtx::with_limit(64);
    while (ctx.primes().len() as u64) < n {
        let grow = ctx.limit() * 2;
        ctx.ensure(grow);
    }
    ctx.primes()[n as usize - 1]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Inequality {
    A19,
    Eq4,
    Chebyshev,
    Bonse,
}

impl Inequality {
    pub const ALL: [Inequality; 4] =
        [Inequality::A19, Inequality::Eq4, Inequality::Chebyshev, Inequality::Bonse];

    pub fn name(self) -> &'static str {
        match self {
            Inequality::A19 => "a19",
            Inequality::Eq4 => "eq4",
            Inequality::Chebyshev => "chebyshev",
            Inequality::Bonse => "bonse",
        }
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Inequality {
    type Err = IneqError;

    fn from_str(s: &str) -> Result<Self> {
        Inequality::ALL
            .into_iter()
            .find(|w| w.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| IneqError::UnknownInequality(s.to_string()))
    }
}

/// One violated instance; `lhs < rhs` was expected.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub input: Vec<u64>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub which: Inequality,
    /// Inclusive bounds on the instance key (the largest prime involved, or `k` for Bonse).
    pub range: (u64, u64),
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl ScanReport {
    fn empty(which: Inequality, range: (u64, u64)) -> Self {
        ScanReport { which, range, checked: 0, failures: Vec::new() }
    }

    /// Associative, order-independent combination of two partial scans.
    pub fn merge(mut self, other: ScanReport) -> ScanReport {
        debug_assert_eq!(self.which, other.which);
        self.range = (self.range.0.min(other.range.0), self.range.1.max(other.range.1));
        self.checked += other.checked;
        self.failures.extend(other.failures);
        self.failures.sort();
        self
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Resource limits for bulk scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanBudget {
    /// Largest prime bound accepted by the prime-indexed scans.
    pub max_limit: u64,
    /// Largest `k` accepted by the Bonse scan.
    pub max_bonse_k: u64,
}

impl Default for ScanBudget {
    fn default() -> Self {
        ScanBudget { max_limit: 200_000_000, max_bonse_k: 20_000 }
    }
}

const CHUNK: usize = 1 << 14;

/// All primes `≤ limit`, borrowed from `table` when it reaches that far.
fn primes_to(limit: u64, table: Option<&PrimeCtx>) -> Cow<'_, [u64]> {
    match table {
        Some(t) if t.limit() >= limit => {
            let all = t.primes();
            Cow::Borrowed(&all[..all.partition_point(|&q| q <= limit)])
        }
        _ => Cow::Owned(sieve(limit)),
    }
}

/// Checks every instance whose largest prime is `≤ limit` (for Bonse: every
/// `4 ≤ k ≤ limit`). An empty failure list is the expected outcome.
pub fn scan(which: Inequality, limit: u64, budget: ScanBudget) -> Result<ScanReport> {
    scan_with(which, limit, budget, None)
}

/// [`scan`] drawing primes from `table` when it covers the range, and from a
/// fresh sieve otherwise. The report does not depend on the source.
pub fn scan_with(which: Inequality, limit: u64, budget: ScanBudget, table: Option<&PrimeCtx>) -> Result<ScanReport> {
    let cap = if which == Inequality::Bonse { budget.max_bonse_k } else { budget.max_limit };
    if limit > cap {
        return Err(IneqError::BudgetExceeded { limit, budget: cap });
    }
    match which {
        Inequality::A19 => Ok(scan_a19(limit, table)),
        Inequality::Eq4 => Ok(scan_eq4(limit, table)),
        Inequality::Chebyshev => Ok(scan_chebyshev(limit, table)),
        Inequality::Bonse => Ok(scan_bonse(limit)),
    }
}

/// Partitioned scan over `indices` of `primes`; each index contributes one instance.
fn scan_indices<F>(which: Inequality, range: (u64, u64), indices: std::ops::Range<usize>, check: F) -> ScanReport
where
    F: Fn(usize) -> Option<Failure> + Sync,
{
    let idx: Vec<usize> = indices.collect();
    idx.par_chunks(CHUNK)
        .map(|chunk| {
            let mut part = ScanReport::empty(which, range);
            for &i in chunk {
                part.checked += 1;
                if let Some(f) = check(i) {
                    part.failures.push(f);
                }
            }
            part
        })
        .reduce(|| ScanReport::empty(which, range), ScanReport::merge)
}

fn scan_a19(limit: u64, table: Option<&PrimeCtx>) -> ScanReport {
    let primes = primes_to(limit, table);
    let n = primes.len().saturating_sub(2);
    scan_indices(Inequality::A19, (5.min(limit), limit), 0..n, |i| {
        let t = Triple { r: primes[i], p: primes[i + 1], q: primes[i + 2] };
        if check_a19(t) {
            None
        } else {
            let (lhs, rhs) = a19_sides(t);
            Some(Failure { input: vec![t.r, t.p, t.q], lhs: lhs.to_string(), rhs: rhs.to_string() })
        }
    })
}

fn scan_eq4(limit: u64, table: Option<&PrimeCtx>) -> ScanReport {
    // S(q) < 2q, so doubling the table covers every successor.
    let primes = primes_to(limit.saturating_mul(2).max(32), table);
    let lo = primes.partition_point(|&q| q < 17);
    let hi = primes.partition_point(|&q| q <= limit);
    scan_indices(Inequality::Eq4, (17, limit), lo..hi.max(lo), |i| {
        let (q, succ, pred) = (primes[i], primes[i + 1], primes[i - 1]);
        let (lhs, rhs) = eq4_sides(q, succ, pred);
        (lhs >= rhs).then(|| Failure { input: vec![q], lhs: lhs.to_string(), rhs: rhs.to_string() })
    })
}

fn scan_chebyshev(limit: u64, table: Option<&PrimeCtx>) -> ScanReport {
    let primes = primes_to(limit, table);
    let hi = primes.len();
    scan_indices(Inequality::Chebyshev, (3, limit), 1..hi.max(1), |i| {
        let (q, pred) = (primes[i], primes[i - 1]);
        (q >= 2 * pred).then(|| Failure {
            input: vec![q],
            lhs: q.to_string(),
            rhs: (2 * pred).to_string(),
        })
    })
}

fn scan_bonse(limit: u64) -> ScanReport {
    let mut report = ScanReport::empty(Inequality::Bonse, (4, limit));
    if limit < 4 {
        return report;
    }
    let mut ctx = PrimeCtx::with_limit(64);
    while (ctx.primes().len() as u64) < limit + 1 {
        let grow = ctx.limit() * 2;
        ctx.ensure(grow);
    }
    let primes = ctx.primes();
    let mut product: Nat = primes[..4].iter().map(|&p| Nat::from(p)).product();
    for k in 4..=limit {
        if k > 4 {
            product *= primes[k as usize - 1];
        }
        let next = Nat::from(primes[k as usize]);
        let square = &next * &next;
        report.checked += 1;
        if square >= product {
            report.failures.push(Failure {
                input: vec![k],
                lhs: square.to_string(),
                rhs: product.to_string(),
            });
        }
    }
    report
}
