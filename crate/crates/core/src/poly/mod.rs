//! Exact simulators of two nonstandard models of PA⁻: the positive cones of
//! ℤ[X] and of ℚ_ℤ[X] (integer constant term, rational higher coefficients).
//!
//! Both rings are ordered by the sign of the leading coefficient, so
//! `f < g` iff `g − f` has a positive leading coefficient. Every element of
//! a cone is either zero or has a positive leading coefficient.

mod factor;
mod gcd;
mod int;
mod qz;
mod qz_model;
pub mod sample;
mod text;
mod zx_model;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::ArithError;

pub use factor::{find_factor, irreducible_factors};
pub use gcd::{coprime_int, coprime_qz};
pub use int::IntPoly;
pub use qz::QZPoly;
pub use qz_model::{between_prime_qz, is_irreducible_qz, prime_divisor_qz, x_plus, QzIrreducibility};
pub use text::ParsePolyError;
pub use zx_model::{
    a18_bigger_prime, a19_check_int, floor_div_int, halve, is_irreducible_int, lemma51, monus,
    predecessor_prime_int, strong_bound_int, successor_prime_int, Lemma51, StrongBoundInt,
    DEFAULT_DEGREE_BOUND,
};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("degree {degree} exceeds the exhaustive-search bound {bound} and no certificate applies")]
    DegreeBudget { degree: usize, bound: usize },
    #[error("coefficients too large for exhaustive factor search")]
    CoefficientBudget,
    #[error("{0} is not in the positive cone")]
    NotInCone(String),
    #[error("{0} is not irreducible")]
    NotIrreducible(String),
    #[error("monus underflow: {minuend} < {subtrahend}")]
    Underflow { minuend: String, subtrahend: String },
    #[error("no greatest k with k·{divisor} ≤ {dividend} exists in the cone")]
    NoFloor { dividend: String, divisor: String },
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, PolyError>;

/// Coefficient rings used here: ℤ and ℚ, both exact and totally ordered.
pub trait Coeff:
    Clone + Eq + Ord + Zero + One + Signed + fmt::Debug + std::hash::Hash
{
}

impl Coeff for BigInt {}
impl Coeff for BigRational {}

/// Dense polynomial in `X`; `coeffs[i]` multiplies `X^i`. Never stores a
/// leading zero, so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Poly<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Poly::new(vec![c])
    }

    /// `c·X^d`.
    pub fn monomial(c: C, d: usize) -> Self {
        let mut coeffs = vec![C::zero(); d + 1];
        coeffs[d] = c;
        Poly::new(coeffs)
    }

    pub fn x() -> Self {
        Poly::monomial(C::one(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> C {
        self.coeff(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Zero, or a positive leading coefficient.
    pub fn in_cone(&self) -> bool {
        self.leading().is_none_or(Signed::is_positive)
    }

    /// Ring sign: the sign of the leading coefficient.
    pub fn signum(&self) -> Ordering {
        match self.leading() {
            None => Ordering::Equal,
            Some(c) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// Sum of `|a_i|` over `i ≥ 1`.
    pub fn abs_sum_nonconstant(&self) -> C {
        self.coeffs.iter().skip(1).fold(C::zero(), |acc, a| acc + a.abs())
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, a| acc * x.clone() + a.clone())
    }
}

impl<C: Coeff> PartialOrd for Poly<C> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The ring order: compare coefficients from the top degree down.
impl<C: Coeff> Ord for Poly<C> {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.coeffs.len().max(other.coeffs.len());
        for i in (0..n).rev() {
            match self.coeff(i).cmp(&other.coeff(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;

    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;

    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;

    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        Poly::new(self.coeffs.iter().map(|a| -a.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl<C: Coeff> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
        impl<C: Coeff> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: &Poly<C>) -> Poly<C> {
                (&self).$m(rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;

    fn neg(self) -> Poly<C> {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly<BigInt> {
        Poly::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    #[test]
    fn canonical_form() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn product_by_convolution() {
        // (X+1)(X+3) = X² + 4X + 3
        assert_eq!(p(&[1, 1]) * p(&[3, 1]), p(&[3, 4, 1]));
        assert_eq!(p(&[1, 2]) + p(&[]), p(&[1, 2]));
        assert_eq!(p(&[1, 2]) * p(&[]), p(&[]));
    }

    #[test]
    fn order_is_leading_coefficient_sign() {
        // X + 1 < 2X, X − 5 > 100
        assert!(p(&[1, 1]) < p(&[0, 2]));
        assert!(p(&[-5, 1]) > p(&[100]));
        assert!((p(&[-5, 1]) - p(&[100])).signum() == Ordering::Greater);
        assert_eq!(p(&[3, 4]).cmp(&p(&[3, 4])), Ordering::Equal);
        assert!(p(&[-1, 1]).in_cone());
        assert!(!p(&[1, -1]).in_cone());
    }
}
