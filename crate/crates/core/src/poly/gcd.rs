//! Coprimality in the two cones.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use super::qz::div_rem_field;
use super::{IntPoly, Poly, QZPoly};

/// A greatest common divisor in ℚ[X], up to a nonzero scalar.
fn field_gcd(a: &Poly<BigRational>, b: &Poly<BigRational>) -> Poly<BigRational> {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = div_rem_field(&a, &b).expect("b ≠ 0");
        a = b;
        b = r;
    }
    a
}

fn to_rational(f: &IntPoly) -> Poly<BigRational> {
    f.map(|c| BigRational::from_integer(c.clone()))
}

/// No common divisor other than 1 in the cone of ℤ[X]: the contents are
/// coprime and the two polynomials share no factor over ℚ.
pub fn coprime_int(m: &IntPoly, n: &IntPoly) -> bool {
    if m.is_zero() {
        return n.is_one();
    }
    if n.is_zero() {
        return m.is_one();
    }
    m.content().gcd(&n.content()).is_one() && field_gcd(&to_rational(m), &to_rational(n)).is_constant()
}

/// No common divisor other than 1 in the cone of ℚ_ℤ[X]. Integer primes
/// dividing both constant terms divide both elements, and a nonconstant
/// common factor over ℚ can be rescaled to constant term ±1.
pub fn coprime_qz(m: &QZPoly, n: &QZPoly) -> bool {
    if m.is_zero() {
        return n.is_one();
    }
    if n.is_zero() {
        return m.is_one();
    }
    if !m.constant_int().gcd(&n.constant_int()).is_one() {
        return false;
    }
    field_gcd(m.poly(), n.poly()).is_constant()
}
