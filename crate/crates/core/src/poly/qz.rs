use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{IntPoly, Poly, PolyError, Result};

/// Element of ℚ_ℤ[X]: rational coefficients with an integer constant term.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct QZPoly(Poly<BigRational>);

impl QZPoly {
    pub fn new(p: Poly<BigRational>) -> Result<Self> {
        if p.constant_term().is_integer() {
            Ok(QZPoly(p))
        } else {
            Err(PolyError::BadShape(format!("constant term {} is not an integer", p.constant_term())))
        }
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        QZPoly(p.map(|c| BigRational::from_integer(c.clone())))
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        QZPoly(Poly::constant(BigRational::from_integer(c.into())))
    }

    /// `a·X + c` with rational slope.
    pub fn linear(a: BigRational, c: impl Into<BigInt>) -> Self {
        QZPoly(Poly::new(vec![BigRational::from_integer(c.into()), a]))
    }

    pub fn poly(&self) -> &Poly<BigRational> {
        &self.0
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.0.leading()
    }

    pub fn constant_int(&self) -> BigInt {
        self.0.constant_term().to_integer()
    }

    pub fn in_cone(&self) -> bool {
        self.0.in_cone()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0 == Poly::one()
    }

    pub fn signum(&self) -> Ordering {
        self.0.signum()
    }

    /// `(L, L·self)` with `L` the least common denominator, so the second
    /// component has integer coefficients.
    pub fn clear_denominators(&self) -> (BigInt, IntPoly) {
        let l = self
            .0
            .coeffs()
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scaled = self.0.map(|c| (c * BigRational::from_integer(l.clone())).to_integer());
        (l, scaled)
    }

    /// Integer coefficients, if all of them are integral.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.0
            .coeffs()
            .iter()
            .all(BigRational::is_integer)
            .then(|| self.0.map(|c| c.to_integer()))
    }

    /// `Some(q)` iff `self = q · divisor` with `q` in ℚ_ℤ[X].
    pub fn div_exact(&self, divisor: &QZPoly) -> Option<QZPoly> {
        let (q, r) = div_rem_field(&self.0, &divisor.0)?;
        if !r.is_zero() {
            return None;
        }
        QZPoly::new(q).ok()
    }

    pub fn divides(&self, other: &QZPoly) -> bool {
        !self.is_zero() && other.div_exact(self).is_some()
    }
}

/// Euclidean division in ℚ[X]; `None` for a zero divisor.
pub(crate) fn div_rem_field(
    num: &Poly<BigRational>,
    den: &Poly<BigRational>,
) -> Option<(Poly<BigRational>, Poly<BigRational>)> {
    let dd = den.degree()?;
    let lead = den.leading().expect("nonzero").clone();
    let mut rem = num.coeffs().to_vec();
    if rem.len() <= dd {
        return Some((Poly::zero(), num.clone()));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let q = &rem[i + dd] / &lead;
        if q.is_zero() {
            continue;
        }
        for (j, c) in den.coeffs().iter().enumerate() {
            rem[i + j] = &rem[i + j] - &q * c;
        }
        quot[i] = q;
    }
    Some((Poly::new(quot), Poly::new(rem)))
}

impl Add for &QZPoly {
    type Output = QZPoly;

    fn add(self, rhs: &QZPoly) -> QZPoly {
        QZPoly(&self.0 + &rhs.0)
    }
}

impl Sub for &QZPoly {
    type Output = QZPoly;

    fn sub(self, rhs: &QZPoly) -> QZPoly {
        QZPoly(&self.0 - &rhs.0)
    }
}

impl Mul for &QZPoly {
    type Output = QZPoly;

    fn mul(self, rhs: &QZPoly) -> QZPoly {
        QZPoly(&self.0 * &rhs.0)
    }
}

impl Neg for &QZPoly {
    type Output = QZPoly;

    fn neg(self) -> QZPoly {
        QZPoly(-&self.0)
    }
}

impl Add for QZPoly {
    type Output = QZPoly;

    fn add(self, rhs: QZPoly) -> QZPoly {
        &self + &rhs
    }
}

impl Sub for QZPoly {
    type Output = QZPoly;

    fn sub(self, rhs: QZPoly) -> QZPoly {
        &self - &rhs
    }
}

impl Mul for QZPoly {
    type Output = QZPoly;

    fn mul(self, rhs: QZPoly) -> QZPoly {
        &self * &rhs
    }
}

impl fmt::Display for QZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_poly(f, self.0.coeffs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QZPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ring_closure_keeps_integer_constant() {
        let f = q("1/2X + 1");
        assert_eq!(&QZPoly::from_int(2) * &f, q("X + 2"));
        assert_eq!((&f * &f).to_string(), "1/4X^2 + X + 1");
        assert!(QZPoly::new(Poly::constant(BigRational::new(1.into(), 2.into()))).is_err());
    }

    #[test]
    fn exact_division_in_qz() {
        let f = q("X + 2");
        assert_eq!(f.div_exact(&QZPoly::from_int(2)), Some(q("1/2X + 1")));
        // (X + 3)/2 has constant 3/2, not in the ring
        assert_eq!(q("X + 3").div_exact(&QZPoly::from_int(2)), None);
        assert_eq!(q("X^2 + 5/2X + 1").div_exact(&q("2X + 1")), Some(q("1/2X + 1")));
    }

    #[test]
    fn clearing_denominators() {
        let (l, f) = q("1/6X^2 + 3/4X + 1").clear_denominators();
        assert_eq!(l, BigInt::from(12));
        assert_eq!(f, IntPoly::from_i64s(&[12, 9, 2]));
    }
}
