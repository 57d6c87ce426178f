//! Operations in the positive cone of ℤ[X], where irreducibles are primes.

use std::cmp::Ordering;
use std::fmt::Display;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{find_factor, Coeff, IntPoly, Poly, PolyError, Result};
use crate::arith;

/// Exhaustive irreducibility search runs up to this degree by default.
pub const DEFAULT_DEGREE_BOUND: usize = 6;

/// Outcome of the constant-term criterion: `a_n X^n + … + a_1 X ± p` with `p`
/// prime and `p > Σ_{i≥1} |a_i|` is irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lemma51 {
    AppliesIrreducible { prime: BigInt },
    NotApplicable,
}

pub fn lemma51(f: &IntPoly) -> Lemma51 {
    if f.degree().is_none_or(|d| d == 0) {
        return Lemma51::NotApplicable;
    }
    let p = f.constant_term().abs();
    let prime = p.to_biguint().is_some_and(|u| arith::is_prime_big(&u));
    if prime && p > f.abs_sum_nonconstant() {
        Lemma51::AppliesIrreducible { prime: p }
    } else {
        Lemma51::NotApplicable
    }
}

fn require_cone_above_one(f: &IntPoly) -> Result<()> {
    if !f.in_cone() || f <= &IntPoly::one() {
        return Err(PolyError::Precondition(format!("{f} must be in the cone and greater than 1")));
    }
    Ok(())
}

/// Irreducibility in ℤ[X] for `f > 1` in the cone. Tries the constant-term
/// certificate first; otherwise needs content 1 and an exhaustive factor
/// search, which is only attempted up to `degree_bound`.
pub fn is_irreducible_int(f: &IntPoly, degree_bound: usize) -> Result<bool> {
    require_cone_above_one(f)?;
    let deg = f.degree().expect("f > 1");
    if deg == 0 {
        let c = f.constant_term().to_biguint().expect("positive");
        return Ok(arith::is_prime_big(&c));
    }
    if let Lemma51::AppliesIrreducible { .. } = lemma51(f) {
        return Ok(true);
    }
    if !f.content().is_one() {
        return Ok(false);
    }
    if deg == 1 {
        return Ok(true);
    }
    if deg > degree_bound {
        return Err(PolyError::DegreeBudget { degree: deg, bound: degree_bound });
    }
    Ok(find_factor(f)?.is_none())
}

/// The unique `z` with `g + z = f`, defined when `g ≤ f`.
pub fn monus<C: Coeff>(f: &Poly<C>, g: &Poly<C>) -> Result<Poly<C>>
where
    Poly<C>: Display,
{
    if f < g {
        return Err(PolyError::Underflow { minuend: f.to_string(), subtrahend: g.to_string() });
    }
    Ok(f - g)
}

fn require_irreducible(f: &IntPoly, degree_bound: usize) -> Result<()> {
    if is_irreducible_int(f, degree_bound)? {
        Ok(())
    } else {
        Err(PolyError::NotIrreducible(f.to_string()))
    }
}

fn constant_u64(f: &IntPoly) -> Result<u64> {
    f.constant_term()
        .to_u64()
        .ok_or_else(|| PolyError::Precondition(format!("{f} exceeds the numeral range")))
}

/// A prime larger than `Σ|a_i|` over all coefficients; adding or
/// subtracting it (after removing `a_0`) yields a certified irreducible.
fn certificate_prime(f: &IntPoly) -> Result<BigInt> {
    let total = f.coeffs().iter().fold(BigInt::zero(), |acc, c| acc + c.abs());
    let total = total
        .to_u64()
        .ok_or_else(|| PolyError::Precondition(format!("coefficients of {f} are too large")))?;
    Ok(BigInt::from(arith::next_prime_above(total)?))
}

/// `S(f)`: the least irreducible above `f`, found as `f + c` for the least
/// `c ≥ 1`; the order is discrete, so constant steps miss nothing.
pub fn successor_prime_int(f: &IntPoly, degree_bound: usize) -> Result<IntPoly> {
    require_irreducible(f, degree_bound)?;
    if f.is_constant() {
        return Ok(IntPoly::from_int(arith::successor_prime(constant_u64(f)?)?));
    }
    let p = certificate_prime(f)?;
    let max_step = &p - f.constant_term();
    let mut c = BigInt::one();
    while c <= max_step {
        let g = f + &IntPoly::from_int(c.clone());
        if is_irreducible_int(&g, degree_bound)? {
            return Ok(g);
        }
        c += 1;
    }
    unreachable!("f − a₀ + p is irreducible by the constant-term criterion")
}

/// `P(f)`: the greatest irreducible below `f`.
pub fn predecessor_prime_int(f: &IntPoly, degree_bound: usize) -> Result<IntPoly> {
    require_irreducible(f, degree_bound)?;
    if f.is_constant() {
        return Ok(IntPoly::from_int(arith::predecessor_prime(constant_u64(f)?)?));
    }
    let p = certificate_prime(f)?;
    let max_step = &p + f.constant_term();
    let mut c = BigInt::one();
    while c <= max_step {
        let g = f - &IntPoly::from_int(c.clone());
        if is_irreducible_int(&g, degree_bound)? {
            return Ok(g);
        }
        c += 1;
    }
    unreachable!("f − a₀ − p is irreducible by the constant-term criterion")
}

/// The greatest `k` in the cone with `k·d ≤ m` (so `m < (k+1)·d`).
///
/// Built from the top coefficient down. Above the constant coefficient every
/// step must divide exactly: a nonzero remainder there leaves the lower
/// coefficients of `k` unbounded, so no greatest `k` exists.
pub fn floor_div_int(m: &IntPoly, d: &IntPoly) -> Result<IntPoly> {
    if !m.in_cone() || !d.in_cone() || d.is_zero() {
        return Err(PolyError::Precondition(format!("need m ≥ 0 and d ≥ 1, got m = {m}, d = {d}")));
    }
    if m < d {
        return Ok(IntPoly::zero());
    }
    let e = d.degree().expect("d ≠ 0");
    let n = m.degree().expect("m ≥ d");
    let lead = d.leading().expect("d ≠ 0").clone();
    let mut rem = m.clone();
    let mut k = vec![BigInt::zero(); n - e + 1];
    for j in (0..=n - e).rev() {
        let r = rem.coeff(j + e);
        let q = if j > 0 {
            let (q, r) = r.div_rem(&lead);
            if !r.is_zero() {
                return Err(PolyError::NoFloor { dividend: m.to_string(), divisor: d.to_string() });
            }
            q
        } else {
            r.div_floor(&lead)
        };
        rem = &rem - &(&IntPoly::monomial(q.clone(), j) * d);
        k[j] = q;
    }
    if rem.signum() == Ordering::Less {
        k[0] -= 1;
        rem = &rem + d;
    }
    let k = IntPoly::new(k);
    debug_assert!(&(&k * d) <= m && m < &(&(&k + &IntPoly::one()) * d));
    debug_assert!(rem.in_cone());
    Ok(k)
}

/// An irreducible `q > p` with `q² < n`, witnessing that no prime is the
/// largest with square below `n` (for `n` of odd degree `≥ 3`).
pub fn a18_bigger_prime(n: &IntPoly, p: &IntPoly, degree_bound: usize) -> Result<IntPoly> {
    let deg = n.degree().unwrap_or(0);
    if !n.in_cone() || deg < 3 || deg % 2 == 0 {
        return Err(PolyError::BadShape(format!("{n} must have odd degree ≥ 3")));
    }
    require_irreducible(p, degree_bound)?;
    if &p.square() >= n {
        return Err(PolyError::Precondition(format!("({p})² is not below {n}")));
    }
    let q = successor_prime_int(p, degree_bound)?;
    if &q.square() >= n {
        return Err(PolyError::BadShape(format!("({q})² is not below {n}")));
    }
    Ok(q)
}

/// `q² < 2·P(q)·P(P(q))` for a nonstandard prime `q`.
pub fn a19_check_int(q: &IntPoly, degree_bound: usize) -> Result<bool> {
    if q.degree().is_none_or(|d| d == 0) {
        return Err(PolyError::BadShape(format!("{q} is a numeral, not a nonstandard prime")));
    }
    let pq = predecessor_prime_int(q, degree_bound)?;
    let ppq = predecessor_prime_int(&pq, degree_bound)?;
    let rhs = &(&pq * &ppq) * &IntPoly::from_int(2);
    Ok(&q.square() < &rhs)
}

/// The pieces of `n = S(p)·k_p` for a nonstandard prime `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongBoundInt {
    pub successor: IntPoly,
    pub second_successor: IntPoly,
    pub k: IntPoly,
    pub n: IntPoly,
}

/// `S(p) · k_p` with `k_p` the floor of `S(S(p))² / S(p)`.
pub fn strong_bound_int(p: &IntPoly, degree_bound: usize) -> Result<StrongBoundInt> {
    if p.degree().is_none_or(|d| d == 0) {
        return Err(PolyError::BadShape(format!("{p} is a numeral, not a nonstandard prime")));
    }
    let s = successor_prime_int(p, degree_bound)?;
    let ss = successor_prime_int(&s, degree_bound)?;
    let k = floor_div_int(&ss.square(), &s)?;
    let n = &s * &k;
    Ok(StrongBoundInt { successor: s, second_successor: ss, k, n })
}

/// `f / 2` or `(f − 1) / 2` when it exists in ℤ[X]; used to show that
/// `X + k` is neither even nor odd.
pub fn halve(f: &IntPoly) -> Option<IntPoly> {
    f.div_exact_int(&BigInt::from(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: usize = DEFAULT_DEGREE_BOUND;

    fn z(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn irreducibility_examples() {
        assert_eq!(is_irreducible_int(&z("X^2 + 4"), B), Ok(true));
        assert_eq!(is_irreducible_int(&z("X^2 - 1"), B), Ok(false));
        assert!(z("X^2 - 1").in_cone());
        assert_eq!(is_irreducible_int(&z("2X + 2"), B), Ok(false));
        assert_eq!(is_irreducible_int(&z("X"), B), Ok(true));
        assert_eq!(is_irreducible_int(&z("7"), B), Ok(true));
        assert_eq!(is_irreducible_int(&z("9"), B), Ok(false));
        assert!(is_irreducible_int(&z("1"), B).is_err());
        assert!(is_irreducible_int(&z("-X"), B).is_err());
    }

    #[test]
    fn degree_budget() {
        // X^8 + 2: no certificate (2 ≤ 1 fails), degree above the bound
        assert_eq!(
            is_irreducible_int(&z("X^8 + X + 2"), B),
            Err(PolyError::DegreeBudget { degree: 8, bound: B })
        );
        // certified without search: 11 > 1 + 1
        assert_eq!(is_irreducible_int(&z("X^8 + X + 11"), B), Ok(true));
    }

    #[test]
    fn lemma51_examples() {
        assert!(matches!(lemma51(&z("X^3 + 2X + 7")), Lemma51::AppliesIrreducible { .. }));
        assert_eq!(lemma51(&z("X^2 + 5X + 3")), Lemma51::NotApplicable);
        assert!(matches!(lemma51(&z("X^2 + 3X - 5")), Lemma51::AppliesIrreducible { .. }));
        assert_eq!(lemma51(&z("X^2 + 9")), Lemma51::NotApplicable);
        assert_eq!(lemma51(&z("7")), Lemma51::NotApplicable);
        assert_eq!(is_irreducible_int(&z("X^3 + 2X + 7"), 0), Ok(true));
    }

    #[test]
    fn monus_examples() {
        assert_eq!(monus(&z("X + 3"), &z("X + 1")), Ok(z("2")));
        assert_eq!(monus(&z("X^2 + 4X + 4"), &z("X^2 + 4X + 3")), Ok(z("1")));
        assert!(matches!(monus(&z("1"), &z("X")), Err(PolyError::Underflow { .. })));
    }

    #[test]
    fn successor_predecessor_examples() {
        assert_eq!(successor_prime_int(&z("X"), B), Ok(z("X + 1")));
        assert_eq!(successor_prime_int(&z("X^2 + 4"), B), Ok(z("X^2 + 5")));
        assert_eq!(predecessor_prime_int(&z("X^2 + 4"), B), Ok(z("X^2 + 3")));
        assert_eq!(successor_prime_int(&z("X + 1"), B), Ok(z("X + 2")));
        assert_eq!(successor_prime_int(&z("2X + 1"), B), Ok(z("2X + 3")));
        assert_eq!(predecessor_prime_int(&z("X + 1"), B), Ok(z("X")));
        assert_eq!(predecessor_prime_int(&z("X"), B), Ok(z("X - 1")));
        assert_eq!(successor_prime_int(&z("7"), B), Ok(z("11")));
        assert!(predecessor_prime_int(&z("2"), B).is_err());
        assert!(matches!(successor_prime_int(&z("X^2 - 1"), B), Err(PolyError::NotIrreducible(_))));
    }

    #[test]
    fn floor_div_examples() {
        assert_eq!(floor_div_int(&z("X^2 + 4X + 4"), &z("X + 1")), Ok(z("X + 3")));
        assert!(matches!(floor_div_int(&z("X"), &z("2")), Err(PolyError::NoFloor { .. })));
        assert_eq!(floor_div_int(&z("6"), &z("2")), Ok(z("3")));
        assert_eq!(floor_div_int(&z("7"), &z("2")), Ok(z("3")));
        assert_eq!(floor_div_int(&z("5"), &z("X")), Ok(z("0")));
        assert_eq!(floor_div_int(&z("2X + 1"), &z("2")), Ok(z("X")));
        assert_eq!(floor_div_int(&z("X^2 - 3"), &z("X")), Ok(z("X - 1")));
    }

    #[test]
    fn a18_examples() {
        let n = z("X^3");
        assert_eq!(a18_bigger_prime(&n, &z("2X + 1"), B), Ok(z("2X + 3")));
        assert_eq!(a18_bigger_prime(&n, &z("X + 1"), B), Ok(z("X + 2")));
        assert_eq!(a18_bigger_prime(&n, &z("7"), B), Ok(z("11")));
        assert!(matches!(a18_bigger_prime(&z("X^2"), &z("7"), B), Err(PolyError::BadShape(_))));
        assert!(matches!(a18_bigger_prime(&n, &z("X^2 + 1"), B), Err(PolyError::Precondition(_))));
    }

    #[test]
    fn a19_examples() {
        assert_eq!(a19_check_int(&z("X^2 + 4"), B), Ok(true));
        assert_eq!(a19_check_int(&z("2X + 3"), B), Ok(true));
        assert_eq!(a19_check_int(&z("X + 1"), B), Ok(true));
        assert!(a19_check_int(&z("7"), B).is_err());
    }

    #[test]
    fn strong_bound_examples() {
        let sb = strong_bound_int(&z("X"), B).unwrap();
        assert_eq!(&sb.successor, &z("X + 1"));
        assert_eq!(&sb.second_successor, &z("X + 2"));
        assert_eq!(&sb.k, &z("X + 3"));
        assert_eq!(&sb.n, &z("X^2 + 4X + 3"));
        let sb = strong_bound_int(&z("X + 1"), B).unwrap();
        assert_eq!(&sb.successor, &z("X + 2"));
        assert_eq!(&sb.second_successor, &z("X + 3"));
        // (X+3)² = X² + 6X + 9 = (X+2)(X+4) + 1
        assert_eq!(&sb.k, &z("X + 4"));
    }

    #[test]
    fn no_even_or_odd_in_x_plus_k() {
        for k in 1..=20 {
            let f = &z("X") + &IntPoly::from_int(k);
            assert!(halve(&f).is_none());
            assert!(halve(&(&f - &IntPoly::one())).is_none());
        }
    }
}
