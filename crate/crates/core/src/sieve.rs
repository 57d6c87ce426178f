//! Cached prime table for bulk scans.
//!
//! A `PrimeCtx` owns every prime up to its `limit`. Growing it is the only
//! mutation and requires `&mut self`, so a context is confined to one worker;
//! parallel scans share an already-grown context by reference.
//!
//! Cache file layout (plain text, one token per line):
//!
//! ```text
//! schat-primes 1
//! limit 100
//! 2
//! 3
//! ...
//! 97
//! ```

use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::Path;

use thiserror::Error;

use crate::arith::{self, ArithError};

pub const CACHE_MAGIC: &str = "schat-primes";
pub const CACHE_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("malformed cache at line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("unsupported cache version {0}")]
    Version(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeCtx {
    limit: u64,
    primes: Vec<u64>,
}

/// Sieve of Eratosthenes over `[0, limit]`.
pub fn sieve(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut i = 2usize;
    while i * i <= n {
        if !composite[i] {
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&k| !composite[k]).map(|k| k as u64).collect()
}

impl PrimeCtx {
    pub fn with_limit(limit: u64) -> Self {
        PrimeCtx { limit, primes: sieve(limit) }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Grow (by doubling) until `limit` is covered.
    pub fn ensure(&mut self, limit: u64) {
        if limit <= self.limit {
            return;
        }
        let mut target = self.limit.max(16);
        while target < limit {
            target = target.saturating_mul(2);
        }
        *self = PrimeCtx::with_limit(target);
    }

    pub fn is_prime(&self, n: u64) -> bool {
        if n <= self.limit {
            self.primes.binary_search(&n).is_ok()
        } else {
            arith::is_prime(n)
        }
    }

    /// Number of primes `≤ x`, for `x` within the table.
    pub fn prime_pi(&self, x: u64) -> usize {
        debug_assert!(x <= self.limit);
        self.primes.partition_point(|&p| p <= x)
    }

    pub fn successor(&mut self, p: u64) -> Result<u64, ArithError> {
        if !self.is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        loop {
            let idx = self.primes.partition_point(|&q| q <= p);
            if let Some(&q) = self.primes.get(idx) {
                return Ok(q);
            }
            let want = self.limit.max(p).saturating_mul(2);
            self.ensure(want);
        }
    }

    pub fn predecessor(&self, p: u64) -> Result<u64, ArithError> {
        if !self.is_prime(p) {
            return Err(ArithError::NotPrime(p));
        }
        if p == 2 {
            return Err(ArithError::NoPredecessor);
        }
        if p > self.limit {
            return arith::predecessor_prime(p);
        }
        let idx = self.primes.partition_point(|&q| q < p);
        Ok(self.primes[idx - 1])
    }

    pub fn save(&self, path: &Path) -> Result<(), CacheError> {
        let mut out = BufWriter::new(fs::File::create(path)?);
        writeln!(out, "{CACHE_MAGIC} {CACHE_VERSION}")?;
        writeln!(out, "limit {}", self.limit)?;
        for p in &self.primes {
            writeln!(out, "{p}")?;
        }
        out.flush()?;
        Ok(())
    }

    /// Loads a cache, checking the header and that the list is strictly
    /// increasing and bounded by the recorded limit.
    pub fn load(path: &Path) -> Result<Self, CacheError> {
        let file = io::BufReader::new(fs::File::open(path)?);
        let mut lines = file.lines().enumerate();
        let malformed = |line: usize, message: &str| CacheError::Malformed {
            line: line + 1,
            message: message.to_string(),
        };

        let (i, header) = lines.next().ok_or_else(|| malformed(0, "empty file"))?;
        let header = header?;
        let mut parts = header.split_whitespace();
        if parts.next() != Some(CACHE_MAGIC) {
            return Err(malformed(i, "bad magic"));
        }
        let version: u32 = parts
            .next()
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| malformed(i, "missing version"))?;
        if version != CACHE_VERSION {
            return Err(CacheError::Version(version));
        }

        let (i, limit_line) = lines.next().ok_or_else(|| malformed(1, "missing limit"))?;
        let limit_line = limit_line?;
        let limit: u64 = limit_line
            .strip_prefix("limit ")
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| malformed(i, "bad limit line"))?;

        let mut primes = Vec::new();
        for (i, line) in lines {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let p: u64 = line.trim().parse().map_err(|_| malformed(i, "not a number"))?;
            if primes.last().is_some_and(|&last| last >= p) || p > limit {
                return Err(malformed(i, "entries must increase and stay within limit"));
            }
            primes.push(p);
        }
        Ok(PrimeCtx { limit, primes })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let ctx = PrimeCtx::with_limit(100_000);
        let trial: Vec<u64> = (0..=100_000).filter(|&n| arith::is_prime(n)).collect();
        assert_eq!(ctx.primes(), trial.as_slice());
        assert!(ctx.primes().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn tiny_limits() {
        assert!(sieve(0).is_empty());
        assert!(sieve(1).is_empty());
        assert_eq!(sieve(2), vec![2]);
    }

    #[test]
    fn successor_grows_table() {
        let mut ctx = PrimeCtx::with_limit(10);
        assert_eq!(ctx.successor(7), Ok(11));
        assert!(ctx.limit() >= 11);
        assert_eq!(ctx.successor(997), Ok(1009));
        assert_eq!(ctx.predecessor(1009), Ok(997));
        assert_eq!(ctx.predecessor(2), Err(ArithError::NoPredecessor));
        assert_eq!(ctx.successor(8), Err(ArithError::NotPrime(8)));
    }

    #[test]
    fn cache_roundtrip_and_rejections() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.txt");
        let ctx = PrimeCtx::with_limit(1000);
        ctx.save(&path).unwrap();
        assert_eq!(PrimeCtx::load(&path).unwrap(), ctx);

        fs::write(&path, "schat-primes 9\nlimit 10\n2\n").unwrap();
        assert!(matches!(PrimeCtx::load(&path), Err(CacheError::Version(9))));
        fs::write(&path, "schat-primes 1\nlimit 10\n3\n2\n").unwrap();
        assert!(matches!(PrimeCtx::load(&path), Err(CacheError::Malformed { line: 4, .. })));
        fs::write(&path, "primes 1\n").unwrap();
        assert!(matches!(PrimeCtx::load(&path), Err(CacheError::Malformed { line: 1, .. })));
    }
}
