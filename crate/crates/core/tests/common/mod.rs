//! Random formulas over `x`, `y`, `z` for the soundness and monotonicity checks.

use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use schat_core::folio::{Formula, Term};

pub fn random_term(rng: &mut ChaCha8Rng, depth: u32) -> Term {
    let vars = ["x", "y", "z"];
    if depth == 0 || rng.gen_bool(0.4) {
        return match rng.gen_range(0..4) {
            0 => Term::numeral(rng.gen_range(0..6)),
            _ => Term::var(vars[rng.gen_range(0..3)]),
        };
    }
    let (a, b) = (random_term(rng, depth - 1), random_term(rng, depth - 1));
    if rng.gen_bool(0.5) {
        a.add(b)
    } else {
        a.mul(b)
    }
}

pub fn random_formula(rng: &mut ChaCha8Rng, depth: u32) -> Formula {
    let vars = ["x", "y", "z"];
    if depth == 0 || rng.gen_bool(0.25) {
        let (a, b) = (random_term(rng, 2), random_term(rng, 2));
        return match rng.gen_range(0..6) {
            0 => Formula::eq(a, b),
            1 | 2 => Formula::lt(a, b),
            3 => Formula::le(a, b),
            4 => Formula::divides(a, b),
            _ => Formula::prime(a),
        };
    }
    let v = vars[rng.gen_range(0..3)].to_string();
    match rng.gen_range(0..6) {
        0 => random_formula(rng, depth - 1).not(),
        1 => random_formula(rng, depth - 1).and(random_formula(rng, depth - 1)),
        2 => random_formula(rng, depth - 1).or(random_formula(rng, depth - 1)),
        3 => random_formula(rng, depth - 1).implies(random_formula(rng, depth - 1)),
        4 => Formula::Forall(v, Box::new(random_formula(rng, depth - 1))),
        _ => Formula::Exists(v, Box::new(random_formula(rng, depth - 1))),
    }
}

pub fn assignment(rng: &mut ChaCha8Rng) -> Vec<(String, BigUint)> {
    ["x", "y", "z"].iter().map(|v| (v.to_string(), BigUint::from(rng.gen_range(0..40u64)))).collect()
}
