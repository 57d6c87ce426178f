//! Seeded samplers for cone elements.
//!
//! ℤ[X]: degree ≤ `max_degree`, coefficients in `[-bound, bound]`, positive
//! leading coefficient. ℚ_ℤ[X]: numerators and denominators of the
//! nonconstant coefficients at most 20 in absolute value, integer constant
//! term in `[-50, 50]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rand::Rng;

use super::{is_irreducible_int, IntPoly, Poly, QZPoly};
use crate::arith;

pub const QZ_MAX_NUMERATOR: i64 = 20;
pub const QZ_MAX_DENOMINATOR: i64 = 20;
pub const QZ_MAX_CONSTANT: i64 = 50;

/// A nonzero element of the ℤ[X] cone.
pub fn int_poly<R: Rng>(rng: &mut R, max_degree: usize, bound: i64) -> IntPoly {
    let deg = rng.gen_range(0..=max_degree);
    let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-bound..=bound)).collect();
    coeffs.push(rng.gen_range(1..=bound.max(1)));
    IntPoly::from_i64s(&coeffs)
}

/// A nonconstant irreducible of the ℤ[X] cone with degree ≤ `max_degree`.
pub fn irreducible_int<R: Rng>(rng: &mut R, max_degree: usize, bound: i64) -> IntPoly {
    loop {
        let deg = rng.gen_range(1..=max_degree.max(1));
        let mut coeffs: Vec<i64> = (0..deg).map(|_| rng.gen_range(-bound..=bound)).collect();
        coeffs.push(rng.gen_range(1..=bound.max(1)));
        let f = IntPoly::from_i64s(&coeffs);
        if is_irreducible_int(&f, max_degree).unwrap_or(false) {
            return f;
        }
    }
}

/// `a_n X^n + … + a_1 X ± p` with `|a_i| ≤ bound`, `a_n > 0`, and a prime
/// `p > Σ|a_i|` chosen among the next few primes.
pub fn lemma51_instance<R: Rng>(rng: &mut R, max_degree: usize, bound: i64) -> IntPoly {
    let deg = rng.gen_range(1..=max_degree.max(1));
    let mut coeffs: Vec<i64> = vec![0];
    coeffs.extend((1..deg).map(|_| rng.gen_range(-bound..=bound)));
    coeffs.push(rng.gen_range(1..=bound.max(1)));
    let total: i64 = coeffs.iter().map(|c| c.abs()).sum();
    let mut p = arith::next_prime_above(total as u64).expect("small");
    for _ in 0..rng.gen_range(0..4) {
        p = arith::next_prime_above(p).expect("small");
    }
    coeffs[0] = if rng.gen_bool(0.5) { p as i64 } else { -(p as i64) };
    IntPoly::from_i64s(&coeffs)
}

fn rational<R: Rng>(rng: &mut R) -> BigRational {
    let n = rng.gen_range(-QZ_MAX_NUMERATOR..=QZ_MAX_NUMERATOR);
    let d = rng.gen_range(1..=QZ_MAX_DENOMINATOR);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A nonzero element of the ℚ_ℤ[X] cone.
pub fn qz_poly<R: Rng>(rng: &mut R, max_degree: usize) -> QZPoly {
    loop {
        let deg = rng.gen_range(0..=max_degree);
        let mut coeffs = vec![BigRational::from_integer(BigInt::from(
            rng.gen_range(-QZ_MAX_CONSTANT..=QZ_MAX_CONSTANT),
        ))];
        coeffs.extend((1..=deg).map(|_| rational(rng)));
        let p = Poly::new(coeffs);
        if p.in_cone() && !p.is_zero() {
            return QZPoly::new(p).expect("integer constant");
        }
    }
}

/// A degree-1 prime `cX ± 1` with `c > 1` rational, i.e. a prime above `X + 1`.
pub fn qz_prime_above_x_plus_one<R: Rng>(rng: &mut R) -> QZPoly {
    loop {
        let c = rational(rng).abs();
        if c > BigRational::from_integer(1.into()) {
            let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
            return QZPoly::linear(c, sign);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{lemma51, Lemma51};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samplers_stay_in_their_families() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            assert!(int_poly(&mut rng, 3, 20).in_cone());
            let f = qz_poly(&mut rng, 3);
            assert!(f.in_cone() && !f.is_zero());
            assert!(matches!(lemma51(&lemma51_instance(&mut rng, 4, 10)), Lemma51::AppliesIrreducible { .. }));
            let b = qz_prime_above_x_plus_one(&mut rng);
            assert!(b > super::super::qz_model::x_plus(1));
        }
    }

    #[test]
    fn seeded_samplers_are_reproducible() {
        let a: Vec<_> = (0..20).map({
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            move |_| qz_poly(&mut rng, 3)
        }).collect();
        let b: Vec<_> = (0..20).map({
            let mut rng = ChaCha8Rng::seed_from_u64(1);
            move |_| qz_poly(&mut rng, 3)
        }).collect();
        assert_eq!(a, b);
    }
}
