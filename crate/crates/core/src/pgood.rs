//! The p-good predicate and certification of the largest p-good number.
//!
//! `n` is p-good when every totative of `n` with no prime factor `≤ p` is
//! itself prime. `n ∈ {1, 2}` have no totatives and are vacuously good.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, ArithError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PGoodError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("p = {0} is out of range for the closed form (need p > 7)")]
    OutOfRange(u64),
    #[error("certification failed for p = {p}: {detail}")]
    CertificationFailed { p: u64, detail: String },
}

pub type Result<T> = std::result::Result<T, PGoodError>;

/// Verdict for one `n`. `p == None` is the unfiltered (all totatives prime)
/// predicate. When `good` is false, `witness` is the least composite totative
/// that escapes the filter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PGoodReport {
    pub n: u64,
    pub p: Option<u64>,
    pub good: bool,
    pub witness: Option<u64>,
}

impl PGoodReport {
    /// One-line record: `n=289 p=7 good=false witness=121`.
    pub fn to_line(&self) -> String {
        let p = self.p.map_or_else(|| "none".to_string(), |p| p.to_string());
        let w = self.witness.map_or_else(|| "-".to_string(), |w| w.to_string());
        format!("n={} p={} good={} witness={}", self.n, p, self.good, w)
    }
}

impl fmt::Display for PGoodReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

fn report(n: u64, p: Option<u64>, witness: Option<u64>) -> PGoodReport {
    PGoodReport { n, p, good: witness.is_none(), witness }
}

fn least_witness(n: u64, small_primes: &[u64], start: u64) -> Option<u64> {
    (start..n).find(|&t| {
        small_primes.iter().all(|&q| t % q != 0) && arith::coprime(t, n) && !arith::is_prime(t)
    })
}

fn primes_up_to(p: u64) -> Vec<u64> {
    (2..=p).filter(|&q| arith::is_prime(q)).collect()
}

/// p-goodness of `n` with the least counterexample as witness.
pub fn is_p_good(n: u64, p: u64) -> Result<PGoodReport> {
    let s = arith::successor_prime(p)?;
    // a composite with every prime factor > p is at least S(p)²
    let start = s.saturating_mul(s);
    Ok(report(n, Some(p), least_witness(n, &primes_up_to(p), start)))
}

/// The unfiltered predicate: every totative of `n` is prime.
pub fn all_totatives_prime(n: u64) -> PGoodReport {
    report(n, None, least_witness(n, &[], 4))
}

/// Every p-good `n` in `1..=limit`, ascending.
pub fn enumerate_p_good(p: u64, limit: u64) -> Result<Vec<u64>> {
    let s = arith::successor_prime(p)?;
    let start = s * s;
    let small = primes_up_to(p);
    Ok((1..=limit)
        .into_par_iter()
        .filter(|&n| least_witness(n, &small, start).is_none())
        .collect())
}

/// Every `n` in `1..=limit` whose totatives are all prime.
pub fn enumerate_all_totatives_prime(limit: u64) -> Vec<u64> {
    (1..=limit)
        .into_par_iter()
        .filter(|&n| least_witness(n, &[], 4).is_none())
        .collect()
}

/// Threshold past which nothing is p-good: `S(S(S(p)))² + 1` for `p ≥ 7`,
/// and 290 for the small primes.
pub fn weak_bound(p: u64) -> Result<u64> {
    let s3 = arith::nth_successor(p, 3)?;
    if p < 7 {
        return Ok(290);
    }
    s3.checked_mul(s3)
        .and_then(|sq| sq.checked_add(1))
        .ok_or(PGoodError::Arith(ArithError::Overflow("weak bound")))
}

/// `S(p)·k_p`, the closed form for the largest p-good number when `p > 7`.
pub fn strong_bound(p: u64) -> Result<u64> {
    let s = arith::successor_prime(p)?;
    if p <= 7 {
        return Err(PGoodError::OutOfRange(p));
    }
    let k = arith::kp_floor(p)?;
    s.checked_mul(k).ok_or(PGoodError::Arith(ArithError::Overflow("strong bound")))
}

/// Evidence produced by [`certify_largest`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LargestCertificate {
    pub p: u64,
    pub largest: u64,
    /// `None` for `p ≤ 7`, where the value comes from a plain scan.
    pub strong_bound: Option<u64>,
    pub weak_bound: u64,
    /// How many `n` were checked by brute force.
    pub scanned: u64,
}

/// Largest p-good number, re-derived by brute force every time.
pub fn largest_p_good(p: u64) -> Result<u64> {
    certify_largest(p).map(|c| c.largest)
}

pub fn certify_largest(p: u64) -> Result<LargestCertificate> {
    let weak = weak_bound(p)?;
    if p <= 7 {
        let good = enumerate_p_good(p, weak)?;
        let largest = *good.last().expect("1 is vacuously good");
        if largest >= weak {
            return Err(PGoodError::CertificationFailed {
                p,
                detail: format!("{largest} is p-good but not below the weak bound {weak}"),
            });
        }
        return Ok(LargestCertificate { p, largest, strong_bound: None, weak_bound: weak, scanned: weak });
    }

    let strong = strong_bound(p)?;
    let head = is_p_good(strong, p)?;
    if !head.good {
        return Err(PGoodError::CertificationFailed {
            p,
            detail: format!("S(p)·k_p = {strong} is not p-good (witness {:?})", head.witness),
        });
    }
    let small = primes_up_to(p);
    let s = arith::successor_prime(p)?;
    let start = s * s;
    let offender = (strong + 1..weak)
        .into_par_iter()
        .filter(|&m| least_witness(m, &small, start).is_none())
        .min();
    if let Some(m) = offender {
        return Err(PGoodError::CertificationFailed {
            p,
            detail: format!("{m} lies above S(p)·k_p = {strong} and is p-good"),
        });
    }
    Ok(LargestCertificate {
        p,
        largest: strong,
        strong_bound: Some(strong),
        weak_bound: weak,
        scanned: weak - strong,
    })
}
