use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ast::Pred;
use crate::{arith, pgood};

/// Kleene's strong three-valued logic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TriBool {
    True,
    False,
    Unknown,
}

impl TriBool {
    pub fn from_bool(b: bool) -> TriBool {
        if b {
            TriBool::True
        } else {
            TriBool::False
        }
    }

    pub fn negate(self) -> TriBool {
        match self {
            TriBool::True => TriBool::False,
            TriBool::False => TriBool::True,
            TriBool::Unknown => TriBool::Unknown,
        }
    }

    pub fn and(self, rhs: TriBool) -> TriBool {
        match (self, rhs) {
            (TriBool::False, _) | (_, TriBool::False) => TriBool::False,
            (TriBool::True, TriBool::True) => TriBool::True,
            _ => TriBool::Unknown,
        }
    }

    pub fn or(self, rhs: TriBool) -> TriBool {
        self.negate().and(rhs.negate()).negate()
    }

    pub fn implies(self, rhs: TriBool) -> TriBool {
        self.negate().or(rhs)
    }

    pub fn is_definite(self) -> bool {
        self != TriBool::Unknown
    }
}

impl std::fmt::Display for TriBool {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TriBool::True => "true",
            TriBool::False => "false",
            TriBool::Unknown => "unknown",
        })
    }
}

/// An interpretation of `{+, ·, 0, 1, <}` with the search aids the bounded
/// evaluator uses.
pub trait Structure: Sync {
    type Elem: Clone + Eq + Hash + Debug + Display + Send + Sync;

    fn name(&self) -> &'static str;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn less(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    /// One element drawn from the structure's sampling distribution.
    fn sample(&self, rng: &mut ChaCha8Rng) -> Self::Elem;

    /// The whole carrier, when quantifiers range over a finite domain.
    fn enumerate(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    /// Every element strictly below `bound`, if there are at most `limit`.
    fn below(&self, bound: &Self::Elem, limit: usize) -> Option<Vec<Self::Elem>>;

    /// Exact value of a defined predicate; `None` means "expand the
    /// definition", `Some(Unknown)` means the decision procedure gave up.
    fn oracle(&self, _pred: Pred, _args: &[Self::Elem]) -> Option<TriBool> {
        None
    }

    /// Candidate instances derived from the values in scope, tried before
    /// sampled ones.
    fn hints(&self, _scope: &[Self::Elem]) -> Vec<Self::Elem> {
        Vec::new()
    }

    fn parse_elem(&self, text: &str) -> Result<Self::Elem, String>;

    fn numeral(&self, u: u64) -> Self::Elem {
        let mut e = self.zero();
        for _ in 0..u {
            e = self.add(&e, &self.one());
        }
        e
    }
}

/// Pushes `e` unless already present.
pub(crate) fn push_unique<E: PartialEq>(out: &mut Vec<E>, e: E) {
    if !out.contains(&e) {
        out.push(e);
    }
}

/// Values above this are not handed to trial-division oracles.
const NAT_ORACLE_LIMIT: u64 = 1 << 40;

/// The standard model ℕ.
#[derive(Debug, Clone, Default)]
pub struct NatStructure {
    exhaustive: Option<u64>,
}

impl NatStructure {
    pub fn new() -> Self {
        NatStructure { exhaustive: None }
    }

    /// Quantifiers range over `{0, …, bound}` only (a finite sub-domain
    /// test); verdicts are then exact for that domain.
    pub fn exhaustive(bound: u64) -> Self {
        NatStructure { exhaustive: Some(bound) }
    }

    fn small(e: &BigUint) -> Option<u64> {
        e.to_u64().filter(|&v| v <= NAT_ORACLE_LIMIT)
    }
}

impl Structure for NatStructure {
    type Elem = BigUint;

    fn name(&self) -> &'static str {
        "nat"
    }

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }

    fn one(&self) -> BigUint {
        BigUint::one()
    }

    fn add(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }

    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }

    fn less(&self, a: &BigUint, b: &BigUint) -> bool {
        a < b
    }

    fn numeral(&self, u: u64) -> BigUint {
        BigUint::from(u)
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> BigUint {
        if let Some(n) = self.exhaustive {
            return BigUint::from(rng.gen_range(0..=n));
        }
        let top: u64 = match rng.gen_range(0..10) {
            0..=4 => 20,
            5..=7 => 1_000,
            _ => 1_000_000,
        };
        BigUint::from(rng.gen_range(0..=top))
    }

    fn enumerate(&self) -> Option<Vec<BigUint>> {
        self.exhaustive.map(|n| (0..=n).map(BigUint::from).collect())
    }

    fn below(&self, bound: &BigUint, limit: usize) -> Option<Vec<BigUint>> {
        let b = bound.to_usize().filter(|&b| b <= limit)?;
        Some((0..b as u64).map(BigUint::from).collect())
    }

    fn oracle(&self, pred: Pred, args: &[BigUint]) -> Option<TriBool> {
        let v = match pred {
            Pred::Le => args[0] <= args[1],
            Pred::Divides => {
                if args[0].is_zero() {
                    args[1].is_zero()
                } else {
                    (&args[1] % &args[0]).is_zero()
                }
            }
            Pred::Coprime => num_integer::Integer::gcd(&args[0], &args[1]).is_one(),
            Pred::Irreducible | Pred::Prime => match Self::small(&args[0]) {
                Some(x) => arith::is_prime(x),
                None => return Some(TriBool::Unknown),
            },
            Pred::Consecutive => match (Self::small(&args[0]), Self::small(&args[1])) {
                (Some(a), Some(b)) => {
                    arith::is_prime(a) && arith::next_prime_above(a).is_ok_and(|s| s == b)
                }
                _ => return Some(TriBool::Unknown),
            },
        };
        Some(TriBool::from_bool(v))
    }

    fn hints(&self, scope: &[BigUint]) -> Vec<BigUint> {
        if self.exhaustive.is_some() {
            return Vec::new();
        }
        let mut out: Vec<u64> = vec![0, 1, 2, 290];
        let vals: Vec<u64> = scope.iter().rev().take(6).filter_map(Self::small).collect();
        for &v in &vals {
            push_unique(&mut out, v);
            push_unique(&mut out, v + 1);
            if let Ok(s) = arith::next_prime_above(v) {
                push_unique(&mut out, s);
            }
            if arith::is_prime(v) && v > 2 {
                push_unique(&mut out, arith::predecessor_prime(v).expect("prime above 2"));
            }
            if v > 1 {
                push_unique(&mut out, arith::smallest_prime_factor(v).expect("v > 1"));
            }
            if let Ok(q) = arith::max_prime_sq_below(v) {
                push_unique(&mut out, q);
                let mut r = q;
                for _ in 0..3 {
                    push_unique(&mut out, r * r);
                    match arith::predecessor_prime(r) {
                        Ok(pr) => r = pr,
                        Err(_) => break,
                    }
                }
            }
            if arith::is_prime(v) && v < 1 << 20 {
                if let Ok(w) = pgood::weak_bound(v) {
                    push_unique(&mut out, w);
                }
                if let Ok(s) = pgood::strong_bound(v) {
                    push_unique(&mut out, s);
                }
            }
        }
        for &v in &vals {
            for &w in &vals {
                if w >= v {
                    push_unique(&mut out, w - v);
                }
                if v > 0 {
                    if w % v == 0 {
                        push_unique(&mut out, w / v);
                    }
                    if let Some(sq) = w.checked_mul(w) {
                        push_unique(&mut out, sq / v);
                    }
                }
            }
        }
        out.into_iter().map(BigUint::from).collect()
    }

    fn parse_elem(&self, text: &str) -> Result<BigUint, String> {
        text.trim().parse().map_err(|e| format!("`{text}` is not a natural number: {e}"))
    }
}
