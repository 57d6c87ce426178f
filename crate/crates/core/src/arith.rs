//! Natural-number arithmetic: primality, neighbouring primes, totatives and
//! the witness functions behind the "largest prime whose square is below n"
//! and "greatest k with k·S(p) < S(S(p))²" axioms.
//!
//! Desk-scale routines work on `u64` with checked arithmetic; anything that
//! would leave `u64` reports [`ArithError::Overflow`] instead of wrapping.
//! [`Nat`] is the arbitrary-precision carrier used where products grow
//! without bound (Bonse products, the standard-model structure).

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision natural number.
pub type Nat = BigUint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("2 has no predecessor prime")]
    NoPredecessor,
    #[error("{value} is too small (need > {min})")]
    TooSmall { value: u64, min: u64 },
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, ArithError>;

/// Deterministic trial division over 6k ± 1.
pub fn is_prime(n: u64) -> bool {
    if n < 4 {
        return n >= 2;
    }
    if n % 2 == 0 || n % 3 == 0 {
        return false;
    }
    let mut d = 5u64;
    while d <= n / d {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// Trial-division primality for arbitrary precision values.
pub fn is_prime_big(n: &Nat) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime(small);
    }
    if n.is_even() {
        return false;
    }
    let root = n.sqrt();
    let mut d = BigUint::from(3u32);
    while d <= root {
        if (n % &d).is_zero() {
            return false;
        }
        d += 2u32;
    }
    true
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(ArithError::NotPrime(p))
    }
}

/// Least prime strictly above the prime `p`.
pub fn successor_prime(p: u64) -> Result<u64> {
    require_prime(p)?;
    next_prime_above(p)
}

/// Least prime strictly above any `n` (not necessarily prime).
pub fn next_prime_above(n: u64) -> Result<u64> {
    let mut q = n.checked_add(1).ok_or(ArithError::Overflow("next prime"))?;
    while !is_prime(q) {
        q = q.checked_add(1).ok_or(ArithError::Overflow("next prime"))?;
    }
    Ok(q)
}

/// Greatest prime strictly below the prime `p > 2`.
pub fn predecessor_prime(p: u64) -> Result<u64> {
    require_prime(p)?;
    if p == 2 {
        return Err(ArithError::NoPredecessor);
    }
    let mut q = p - 1;
    while !is_prime(q) {
        q -= 1;
    }
    Ok(q)
}

/// `successor_prime` applied `k` times.
pub fn nth_successor(p: u64, k: u64) -> Result<u64> {
    require_prime(p)?;
    (0..k).try_fold(p, |q, _| successor_prime(q))
}

/// The prime `p` with `p² < n` such that every larger prime `q` has `q² ≥ n`.
pub fn max_prime_sq_below(n: u64) -> Result<u64> {
    if n <= 4 {
        return Err(ArithError::TooSmall { value: n, min: 4 });
    }
    // largest r with r² < n
    let mut r = (n - 1).sqrt();
    while !is_prime(r) {
        r -= 1;
    }
    Ok(r)
}

/// Greatest common divisor; `gcd(0, 0) = 0` by convention.
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
}

/// Lazily yields every `t` with `1 < t < n` and `gcd(t, n) = 1`, ascending.
pub fn totatives(n: u64) -> impl Iterator<Item = u64> {
    (2..n.max(2)).filter(move |&t| coprime(t, n))
}

/// Least prime dividing `n > 1`.
pub fn smallest_prime_factor(n: u64) -> Result<u64> {
    if n <= 1 {
        return Err(ArithError::TooSmall { value: n, min: 1 });
    }
    for d in [2u64, 3] {
        if n % d == 0 {
            return Ok(d);
        }
    }
    let mut d = 5u64;
    while d <= n / d {
        if n % d == 0 {
            return Ok(d);
        }
        if n % (d + 2) == 0 {
            return Ok(d + 2);
        }
        d += 6;
    }
    Ok(n)
}

/// The greatest `k` with `k·S(p) < S(S(p))²`; then also `(k+1)·S(p) > S(S(p))²`.
pub fn kp_floor(p: u64) -> Result<u64> {
    let s = successor_prime(p)?;
    let ss = successor_prime(s)?;
    let square = ss.checked_mul(ss).ok_or(ArithError::Overflow("S(S(p))²"))?;
    assert_ne!(square % s, 0, "S(p) = {s} divides S(S(p))² = {square}");
    Ok(square / s)
}

/// Prime factorisation as `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    while n > 1 {
        let p = smallest_prime_factor(n).expect("n > 1");
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        out.push((p, e));
    }
    out
}

/// Product of the first `k` primes, exact.
pub fn primorial_of_first(k: usize) -> Nat {
    let mut acc = Nat::one();
    let mut p = 2u64;
    for _ in 0..k {
        acc *= p;
        p = next_prime_above(p).expect("u64 range");
    }
    acc
}
