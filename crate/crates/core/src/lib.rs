//! Largest p-good numbers, prime inequalities and polynomial models of weak arithmetic.
//!
//! * [`arith`] and [`sieve`]: primes, neighbouring primes, totatives.
//! * [`pgood`]: the p-good predicate and certified largest p-good numbers.
//! * [`inequalities`]: scans for the prime inequalities used as axioms.
//! * [`poly`]: exact simulators of the positive cones of ℤ[X] and ℚ_ℤ[X].
//! * [`folio`]: first-order formulas over `{+, ·, 0, 1, <}` and a bounded
//!   three-valued evaluator over those structures.

pub mod arith;
pub mod folio;
pub mod inequalities;
pub mod pgood;
pub mod poly;
pub mod sieve;
