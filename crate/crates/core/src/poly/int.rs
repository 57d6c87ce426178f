use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Poly;

/// Element of ℤ[X].
pub type IntPoly = Poly<BigInt>;

impl Poly<BigInt> {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Poly::constant(c.into())
    }

    /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, sign chosen so the leading coefficient is positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        Poly::new(self.coeffs().iter().map(|a| a / &c).collect())
    }

    /// Exact division by an integer, if every coefficient is divisible.
    pub fn div_exact_int(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs().len());
        for c in self.coeffs() {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(Poly::new(out))
    }

    /// Exact division in ℤ[X]: `Some(q)` iff `self = q · divisor`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let lead = divisor.leading().expect("nonzero").clone();
        let mut rem: Vec<BigInt> = self.coeffs().to_vec();
        let n = rem.len() - 1;
        if n < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); n - dd + 1];
        for i in (0..=n - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs().iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Poly::new(quot))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && other.div_exact(self).is_some()
    }

    /// `Some(c)` when `self` is the constant `c`.
    pub fn as_constant(&self) -> Option<BigInt> {
        self.is_constant().then(|| self.constant_term())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}

impl fmt::Display for Poly<BigInt> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::text::write_poly(f, self.coeffs())
    }
}
