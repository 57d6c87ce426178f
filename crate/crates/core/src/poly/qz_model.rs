//! Operations in the positive cone of ℚ_ℤ[X].
//!
//! The units are ±1, so a nonconstant `f` with `|c₀| ≠ 1` is a multiple of
//! an integer prime dividing `c₀` (of 2 when `c₀ = 0`), and one with
//! `|c₀| = 1` factors exactly as it does over ℚ, with every factor rescaled
//! to constant term ±1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{find_factor, irreducible_factors, IntPoly, Poly, PolyError, QZPoly, Result};
use crate::arith;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QzIrreducibility {
    Irreducible,
    /// Two non-units whose product is the input.
    Composite(QZPoly, QZPoly),
}

impl QzIrreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, QzIrreducibility::Irreducible)
    }
}

fn require_cone_above_one(f: &QZPoly) -> Result<()> {
    if !f.in_cone() || f.is_zero() || f.is_one() {
        return Err(PolyError::Precondition(format!("{f} must be in the cone and greater than 1")));
    }
    Ok(())
}

fn least_prime_factor(c: &BigInt) -> Result<BigInt> {
    let c = c
        .abs()
        .to_u64()
        .ok_or_else(|| PolyError::Precondition(format!("constant {c} exceeds the numeral range")))?;
    Ok(BigInt::from(arith::smallest_prime_factor(c)?))
}

/// Rescales an integer factor to constant term ±1 inside the cone: `+1`
/// when the leading coefficient allows it, else `−1`.
fn normalize_unit_constant(g: &IntPoly) -> QZPoly {
    let c0 = BigRational::from_integer(g.constant_term());
    let mut a = g.map(|c| BigRational::from_integer(c.clone()) / &c0);
    if a.leading().is_some_and(Signed::is_negative) {
        a = -a;
    }
    QZPoly::new(a).expect("constant term ±1")
}

fn check_degree(f: &QZPoly, degree_bound: usize) -> Result<()> {
    let deg = f.degree().unwrap_or(0);
    if deg > degree_bound {
        return Err(PolyError::DegreeBudget { degree: deg, bound: degree_bound });
    }
    Ok(())
}

/// Irreducibility in ℚ_ℤ[X] with a factorisation witness when composite.
///
/// When `|c₀| = 1` the witness is ordered greater factor first.
pub fn is_irreducible_qz(f: &QZPoly, degree_bound: usize) -> Result<QzIrreducibility> {
    require_cone_above_one(f)?;
    let c0 = f.constant_int();
    if f.degree() == Some(0) {
        let c = c0.to_biguint().expect("positive");
        if arith::is_prime_big(&c) {
            return Ok(QzIrreducibility::Irreducible);
        }
        let d = least_prime_factor(&c0)?;
        let rest = QZPoly::from_int(&c0 / &d);
        return Ok(QzIrreducibility::Composite(QZPoly::from_int(d), rest));
    }
    if c0.abs() != BigInt::one() {
        let d = if c0.is_zero() { BigInt::from(2) } else { least_prime_factor(&c0)? };
        let d = QZPoly::from_int(d);
        let rest = f.div_exact(&d).expect("d divides the constant term");
        return Ok(QzIrreducibility::Composite(d, rest));
    }
    check_degree(f, degree_bound)?;
    let (_, scaled) = f.clear_denominators();
    match find_factor(&scaled.primitive_part())? {
        None => Ok(QzIrreducibility::Irreducible),
        Some(g) => {
            let a = normalize_unit_constant(&g);
            let b = f.div_exact(&a).expect("rational factor divides");
            debug_assert!(b.constant_int().abs().is_one());
            Ok(if a >= b { QzIrreducibility::Composite(a, b) } else { QzIrreducibility::Composite(b, a) })
        }
    }
}

/// A prime element of the cone dividing `f > 1`, least under the order.
pub fn prime_divisor_qz(f: &QZPoly, degree_bound: usize) -> Result<QZPoly> {
    require_cone_above_one(f)?;
    let c0 = f.constant_int();
    if f.degree() == Some(0) || c0.abs() != BigInt::one() {
        let d = if c0.is_zero() { BigInt::from(2) } else { least_prime_factor(&c0)? };
        return Ok(QZPoly::from_int(d));
    }
    check_degree(f, degree_bound)?;
    let (_, scaled) = f.clear_denominators();
    let least = irreducible_factors(&scaled)?
        .iter()
        .map(normalize_unit_constant)
        .min()
        .expect("nonconstant polynomial has a factor");
    Ok(least)
}

/// For `a = X + 1` and a degree-1 prime `b > a` (necessarily `cX ± 1` with
/// `c > 1`), the prime `((c + 1)/2)X + 1` strictly between them. No prime
/// above `X + 1` is therefore its successor.
pub fn between_prime_qz(a: &QZPoly, b: &QZPoly, degree_bound: usize) -> Result<QZPoly> {
    let x_plus_one = QZPoly::from_int_poly(&IntPoly::from_i64s(&[1, 1]));
    if a != &x_plus_one {
        return Err(PolyError::BadShape(format!("lower end must be X + 1, got {a}")));
    }
    if b.degree() != Some(1) || b <= a {
        return Err(PolyError::BadShape(format!("{b} is not a degree-1 element above X + 1")));
    }
    if !is_irreducible_qz(b, degree_bound)?.is_irreducible() {
        return Err(PolyError::BadShape(format!("{b} is not prime")));
    }
    let slope = b.leading().expect("degree 1").clone();
    let mid = (slope + BigRational::one()) / BigRational::from_integer(BigInt::from(2));
    let q = QZPoly::linear(mid, 1);
    debug_assert!(a < &q && &q < b);
    debug_assert!(is_irreducible_qz(&q, degree_bound).is_ok_and(|r| r.is_irreducible()));
    Ok(q)
}

/// The element `X + z`.
pub fn x_plus(z: i64) -> QZPoly {
    QZPoly::new(Poly::new(vec![BigRational::from_integer(z.into()), BigRational::one()]))
        .expect("integer constant")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::DEFAULT_DEGREE_BOUND as B;

    fn q(s: &str) -> QZPoly {
        s.parse().unwrap()
    }

    fn composite(f: &str) -> (QZPoly, QZPoly) {
        match is_irreducible_qz(&q(f), B).unwrap() {
            QzIrreducibility::Composite(a, b) => (a, b),
            QzIrreducibility::Irreducible => panic!("{f} reported irreducible"),
        }
    }

    #[test]
    fn irreducibility_examples() {
        assert_eq!(composite("X + 2"), (q("2"), q("1/2X + 1")));
        assert_eq!(is_irreducible_qz(&q("X + 1"), B), Ok(QzIrreducibility::Irreducible));
        assert_eq!(is_irreducible_qz(&q("X - 1"), B), Ok(QzIrreducibility::Irreducible));
        assert_eq!(composite("X^2 + 5/2X + 1"), (q("2X + 1"), q("1/2X + 1")));
        assert_eq!(composite("X"), (q("2"), q("1/2X")));
        assert_eq!(composite("15"), (q("3"), q("5")));
        assert_eq!(is_irreducible_qz(&q("7"), B), Ok(QzIrreducibility::Irreducible));
        assert!(is_irreducible_qz(&q("1"), B).is_err());
    }

    #[test]
    fn witnesses_multiply_back() {
        for f in ["X + 2", "X^2 + 5/2X + 1", "X - 6", "3/4X^2 - 12", "X^2 - 1", "X^2 - 2X + 1"] {
            let (a, b) = composite(f);
            assert_eq!(&a * &b, q(f), "{f}");
            assert!(!a.is_one() && !b.is_one());
            assert!(a.in_cone() && b.in_cone());
        }
    }

    #[test]
    fn prime_divisor_examples() {
        assert_eq!(prime_divisor_qz(&q("X^2 + 6"), B), Ok(q("2")));
        assert_eq!(prime_divisor_qz(&q("X^2 + 5/2X + 1"), B), Ok(q("1/2X + 1")));
        assert_eq!(prime_divisor_qz(&q("15"), B), Ok(q("3")));
        assert_eq!(prime_divisor_qz(&q("X^2 - 3"), B), Ok(q("3")));
        assert_eq!(prime_divisor_qz(&q("X + 1"), B), Ok(q("X + 1")));
    }

    #[test]
    fn between_examples() {
        let a = x_plus(1);
        assert_eq!(between_prime_qz(&a, &q("3X + 1"), B), Ok(q("2X + 1")));
        assert_eq!(between_prime_qz(&a, &q("2X - 1"), B), Ok(q("3/2X + 1")));
        assert_eq!(between_prime_qz(&a, &q("3/2X + 1"), B), Ok(q("5/4X + 1")));
        assert!(between_prime_qz(&a, &q("X^2 + 1"), B).is_err());
        assert!(between_prime_qz(&a, &q("2X + 4"), B).is_err());
        assert!(between_prime_qz(&q("X + 3"), &q("2X + 1"), B).is_err());
    }

    #[test]
    fn x_plus_z_composite_unless_unit() {
        for z in -50..=50i64 {
            let f = x_plus(z);
            let r = is_irreducible_qz(&f, B).unwrap();
            assert_eq!(r.is_irreducible(), z.abs() == 1, "z = {z}");
        }
    }
}
