//! The positive cones of ℤ[X] and ℚ_ℤ[X] as structures.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::ast::Pred;
use super::structure::{push_unique, Structure, TriBool};
use crate::arith;
use crate::poly::{
    between_prime_qz, coprime_int, coprime_qz, floor_div_int, irreducible_factors, is_irreducible_int,
    is_irreducible_qz, predecessor_prime_int, prime_divisor_qz, sample, strong_bound_int, successor_prime_int,
    x_plus, IntPoly, QZPoly, QzIrreducibility, DEFAULT_DEGREE_BOUND,
};

/// Values in scope beyond this many are ignored when building hints.
const HINT_SCOPE: usize = 6;

/// Longest run of constant steps the ℚ_ℤ[X] consecutive-prime oracle scans.
const QZ_GAP_SCAN: i64 = 64;

fn constant_below<E>(bound_const: Option<BigInt>, limit: usize, make: impl Fn(u64) -> E) -> Option<Vec<E>> {
    let c = bound_const?.to_usize().filter(|&c| c <= limit)?;
    Some((0..c as u64).map(make).collect())
}

fn tri<T>(r: Result<T, impl std::fmt::Debug>, f: impl FnOnce(T) -> bool) -> TriBool {
    match r {
        Ok(v) => TriBool::from_bool(f(v)),
        Err(_) => TriBool::Unknown,
    }
}

/// 𝒞(ℤ[X]): polynomials with integer coefficients and positive leading
/// coefficient, plus 0.
#[derive(Debug, Clone)]
pub struct ZxStructure {
    pub degree_bound: usize,
}

impl Default for ZxStructure {
    fn default() -> Self {
        ZxStructure { degree_bound: DEFAULT_DEGREE_BOUND }
    }
}

impl ZxStructure {
    pub fn new(degree_bound: usize) -> Self {
        ZxStructure { degree_bound }
    }

    pub fn is_prime(&self, x: &IntPoly) -> TriBool {
        if x <= &IntPoly::one() {
            return TriBool::False;
        }
        tri(is_irreducible_int(x, self.degree_bound), |b| b)
    }

    fn prime_divisor(&self, v: &IntPoly) -> Option<IntPoly> {
        if v <= &IntPoly::one() {
            return None;
        }
        let content = v.content().to_u64()?;
        if content > 1 || v.is_constant() {
            let c = if v.is_constant() { v.constant_term().to_u64()? } else { content };
            return Some(IntPoly::from_int(arith::smallest_prime_factor(c).ok()?));
        }
        if v.degree()? > self.degree_bound {
            return None;
        }
        irreducible_factors(v).ok()?.into_iter().next()
    }
}

impl Structure for ZxStructure {
    type Elem = IntPoly;

    fn name(&self) -> &'static str {
        "zx"
    }

    fn zero(&self) -> IntPoly {
        IntPoly::zero()
    }

    fn one(&self) -> IntPoly {
        IntPoly::one()
    }

    fn add(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a + b
    }

    fn mul(&self, a: &IntPoly, b: &IntPoly) -> IntPoly {
        a * b
    }

    fn less(&self, a: &IntPoly, b: &IntPoly) -> bool {
        a < b
    }

    fn numeral(&self, u: u64) -> IntPoly {
        IntPoly::from_int(u)
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> IntPoly {
        match rng.gen_range(0..10) {
            0..=2 => IntPoly::from_int(rng.gen_range(0..=20)),
            3..=5 => IntPoly::from_i64s(&[rng.gen_range(-10..=10), 1]),
            _ => sample::int_poly(rng, 2, 10),
        }
    }

    fn below(&self, bound: &IntPoly, limit: usize) -> Option<Vec<IntPoly>> {
        constant_below(bound.as_constant(), limit, IntPoly::from_int)
    }

    fn oracle(&self, pred: Pred, args: &[IntPoly]) -> Option<TriBool> {
        let (a, b) = (&args[0], args.get(1));
        Some(match pred {
            Pred::Le => TriBool::from_bool(a <= b?),
            Pred::Divides => {
                let m = b?;
                TriBool::from_bool(if a.is_zero() { m.is_zero() } else { m.div_exact(a).is_some() })
            }
            Pred::Coprime => TriBool::from_bool(coprime_int(a, b?)),
            Pred::Irreducible | Pred::Prime => self.is_prime(a),
            Pred::Consecutive => {
                let b = b?;
                let base = self.is_prime(a).and(self.is_prime(b)).and(TriBool::from_bool(a < b));
                if base != TriBool::True {
                    return Some(base);
                }
                tri(successor_prime_int(a, self.degree_bound), |s| &s == b)
            }
        })
    }

    fn hints(&self, scope: &[IntPoly]) -> Vec<IntPoly> {
        let mut out: Vec<IntPoly> =
            vec![IntPoly::zero(), IntPoly::one(), IntPoly::from_int(2), IntPoly::x(), IntPoly::from_i64s(&[1, 1])];
        let vals: Vec<&IntPoly> = scope.iter().rev().take(HINT_SCOPE).collect();
        let bound = self.degree_bound;
        for v in &vals {
            push_unique(&mut out, (*v).clone());
            push_unique(&mut out, *v + &IntPoly::one());
            if let Some(d) = self.prime_divisor(v) {
                push_unique(&mut out, d);
            }
            if self.is_prime(v) == TriBool::True {
                if let Ok(s) = successor_prime_int(v, bound) {
                    push_unique(&mut out, s.square());
                    push_unique(&mut out, s);
                }
                if let Ok(p) = predecessor_prime_int(v, bound) {
                    push_unique(&mut out, p);
                }
                if !v.is_constant() {
                    if let Ok(sb) = strong_bound_int(v, bound) {
                        push_unique(&mut out, sb.n);
                    }
                }
            }
        }
        for v in &vals {
            for w in &vals {
                if v <= w {
                    push_unique(&mut out, *w - *v);
                }
                if !v.is_zero() {
                    if let Some(q) = w.div_exact(v) {
                        push_unique(&mut out, q);
                    }
                    if let Ok(k) = floor_div_int(&w.square(), v) {
                        push_unique(&mut out, k);
                    }
                }
            }
        }
        out
    }

    fn parse_elem(&self, text: &str) -> Result<IntPoly, String> {
        let f: IntPoly = text.parse().map_err(|e| format!("{e}"))?;
        if !f.in_cone() {
            return Err(format!("{f} is negative"));
        }
        Ok(f)
    }
}

/// 𝒞(ℚ_ℤ[X]): polynomials with integer constant term, rational higher
/// coefficients and positive leading coefficient, plus 0.
#[derive(Debug, Clone)]
pub struct QzStructure {
    pub degree_bound: usize,
}

impl Default for QzStructure {
    fn default() -> Self {
        QzStructure { degree_bound: DEFAULT_DEGREE_BOUND }
    }
}

impl QzStructure {
    pub fn new(degree_bound: usize) -> Self {
        QzStructure { degree_bound }
    }

    pub fn is_prime(&self, x: &QZPoly) -> TriBool {
        if !x.in_cone() || x.is_zero() || x.is_one() {
            return TriBool::False;
        }
        tri(is_irreducible_qz(x, self.degree_bound), |r| r.is_irreducible())
    }

    /// σ(a, b) for primes `a < b`. Standard pairs are decided in ℕ. Above a
    /// degree-1 prime `cX ± 1` the only neighbour is `cX + 1` over `cX − 1`,
    /// since slopes are dense. Otherwise only gaps that are numerals are
    /// scanned.
    fn consecutive_primes(&self, a: &QZPoly, b: &QZPoly) -> TriBool {
        let da = a.degree().unwrap_or(0);
        let db = b.degree().unwrap_or(0);
        if da == 0 && db == 0 {
            let (Some(x), Some(y)) = (a.constant_int().to_u64(), b.constant_int().to_u64()) else {
                return TriBool::Unknown;
            };
            return tri(arith::next_prime_above(x), |s| s == y);
        }
        if da == 0 {
            return TriBool::False;
        }
        if da == 1 {
            return TriBool::from_bool(db == 1 && (b - a) == QZPoly::from_int(2));
        }
        let gap = b - a;
        let Some(d) = gap.to_int_poly().and_then(|g| g.as_constant()).and_then(|c| c.to_i64()) else {
            return TriBool::Unknown;
        };
        if d > QZ_GAP_SCAN {
            return TriBool::Unknown;
        }
        let mut verdict = TriBool::True;
        for j in 1..d {
            verdict = verdict.and(self.is_prime(&(a + &QZPoly::from_int(j))).negate());
            if verdict == TriBool::False {
                break;
            }
        }
        verdict
    }
}

impl Structure for QzStructure {
    type Elem = QZPoly;

    fn name(&self) -> &'static str {
        "qz"
    }

    fn zero(&self) -> QZPoly {
        QZPoly::from_int(0)
    }

    fn one(&self) -> QZPoly {
        QZPoly::from_int(1)
    }

    fn add(&self, a: &QZPoly, b: &QZPoly) -> QZPoly {
        a + b
    }

    fn mul(&self, a: &QZPoly, b: &QZPoly) -> QZPoly {
        a * b
    }

    fn less(&self, a: &QZPoly, b: &QZPoly) -> bool {
        a < b
    }

    fn numeral(&self, u: u64) -> QZPoly {
        QZPoly::from_int(u)
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> QZPoly {
        match rng.gen_range(0..10) {
            0..=2 => QZPoly::from_int(rng.gen_range(0..=20)),
            3..=4 => x_plus(rng.gen_range(-10..=10)),
            5 => sample::qz_prime_above_x_plus_one(rng),
            _ => sample::qz_poly(rng, 2),
        }
    }

    fn below(&self, bound: &QZPoly, limit: usize) -> Option<Vec<QZPoly>> {
        let c = bound.degree().is_none_or(|d| d == 0).then(|| bound.constant_int());
        constant_below(c, limit, QZPoly::from_int)
    }

    fn oracle(&self, pred: Pred, args: &[QZPoly]) -> Option<TriBool> {
        let (a, b) = (&args[0], args.get(1));
        Some(match pred {
            Pred::Le => TriBool::from_bool(a <= b?),
            Pred::Divides => {
                let m = b?;
                TriBool::from_bool(if a.is_zero() { m.is_zero() } else { m.div_exact(a).is_some() })
            }
            Pred::Coprime => TriBool::from_bool(coprime_qz(a, b?)),
            Pred::Irreducible | Pred::Prime => self.is_prime(a),
            Pred::Consecutive => {
                let b = b?;
                let base = self.is_prime(a).and(self.is_prime(b)).and(TriBool::from_bool(a < b));
                if base != TriBool::True {
                    return Some(base);
                }
                self.consecutive_primes(a, b)
            }
        })
    }

    fn hints(&self, scope: &[QZPoly]) -> Vec<QZPoly> {
        let mut out = vec![self.zero(), self.one(), QZPoly::from_int(2), x_plus(1), x_plus(-1)];
        let vals: Vec<&QZPoly> = scope.iter().rev().take(HINT_SCOPE).collect();
        let bound = self.degree_bound;
        for v in &vals {
            push_unique(&mut out, (*v).clone());
            push_unique(&mut out, *v + &self.one());
            if v.in_cone() && !v.is_zero() && !v.is_one() {
                if let Ok(d) = prime_divisor_qz(v, bound) {
                    push_unique(&mut out, d);
                }
                if let Ok(QzIrreducibility::Composite(f, g)) = is_irreducible_qz(v, bound) {
                    push_unique(&mut out, f);
                    push_unique(&mut out, g);
                }
            }
        }
        for v in &vals {
            for w in &vals {
                if v <= w {
                    push_unique(&mut out, *w - *v);
                    if let Ok(m) = between_prime_qz(v, w, bound) {
                        push_unique(&mut out, m);
                    }
                }
                if !v.is_zero() {
                    if let Some(q) = w.div_exact(v) {
                        push_unique(&mut out, q);
                    }
                }
            }
        }
        out
    }

    fn parse_elem(&self, text: &str) -> Result<QZPoly, String> {
        let f: QZPoly = text.parse().map_err(|e| format!("{e}"))?;
        if !f.in_cone() {
            return Err(format!("{f} is negative"));
        }
        Ok(f)
    }
}
