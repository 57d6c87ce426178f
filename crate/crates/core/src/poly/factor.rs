//! Exact factor search in ℤ[X] by Kronecker's method.
//!
//! A factor `g` of degree `d` satisfies `g(a) | f(a)` at every integer `a`,
//! so `g` is determined by its values at `d + 1` nodes, each drawn from the
//! finitely many divisors of `f(a)`. Candidates are rebuilt with Newton's
//! divided differences, which stay integral for integer polynomials, and
//! the survivors are confirmed by exact division.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{IntPoly, PolyError, Result};

/// Nodes are taken from `[-NODE_RADIUS, NODE_RADIUS]`.
const NODE_RADIUS: i128 = 12;
/// Largest `|f(a)|` whose divisors we enumerate.
const MAX_NODE_VALUE: i128 = 1_000_000_000_000;
/// Cap on the number of interpolated candidates per degree.
const MAX_CANDIDATES: u128 = 200_000_000;

struct Node {
    x: i128,
    value: i128,
    divisors: Vec<i128>,
}

fn to_i128(f: &IntPoly) -> Result<Vec<i128>> {
    f.coeffs()
        .iter()
        .map(|c| c.to_i128().filter(|v| v.abs() < (1i128 << 60)).ok_or(PolyError::CoefficientBudget))
        .collect()
}

fn eval_i128(coeffs: &[i128], x: i128) -> Option<i128> {
    coeffs.iter().rev().try_fold(0i128, |acc, &c| acc.checked_mul(x)?.checked_add(c))
}

fn positive_divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1i128;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn linear_factor(root: i128) -> IntPoly {
    IntPoly::from_i64s(&[0, 1]) - IntPoly::from_int(BigInt::from(root))
}

/// Newton interpolation through `(xs[i], ys[i])`; `None` if a divided
/// difference is not an integer (then no integer polynomial fits).
fn interpolate(xs: &[i128], ys: &[i128]) -> Option<Vec<i128>> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            let num = dd[i] - dd[i - 1];
            let den = xs[i] - xs[i - k];
            if num % den != 0 {
                return None;
            }
            dd[i] = num / den;
        }
    }
    // expand dd[n-1]·Π(X − x_j) + ... in Horner fashion
    let mut coeffs = vec![dd[n - 1]];
    for k in (0..n - 1).rev() {
        let mut next = vec![0i128; coeffs.len() + 1];
        for (i, &c) in coeffs.iter().enumerate() {
            next[i + 1] = next[i + 1].checked_add(c)?;
            next[i] = next[i].checked_sub(c.checked_mul(xs[k])?)?;
        }
        next[0] = next[0].checked_add(dd[k])?;
        coeffs = next;
    }
    Some(coeffs)
}

fn divides_i128(d: i128, n: i128) -> bool {
    d != 0 && n % d == 0
}

/// A factor of exact degree `d` of the primitive polynomial `f`, if any.
fn factor_of_degree(f: &IntPoly, coeffs: &[i128], d: usize) -> Result<Option<IntPoly>> {
    let deg = coeffs.len() - 1;
    let mut nodes = Vec::new();
    for step in 0..=2 * NODE_RADIUS {
        // 0, 1, -1, 2, -2, ...
        let x = if step % 2 == 1 { (step + 1) / 2 } else { -(step / 2) };
        let value = eval_i128(coeffs, x).ok_or(PolyError::CoefficientBudget)?;
        if value == 0 {
            return Ok(Some(linear_factor(x)));
        }
        if value.abs() <= MAX_NODE_VALUE {
            nodes.push(Node { x, value, divisors: positive_divisors(value) });
        }
    }
    if nodes.len() < d + 1 {
        return Err(PolyError::CoefficientBudget);
    }
    nodes.sort_by_key(|n| n.divisors.len());
    let (chosen, extra) = nodes.split_at(d + 1);

    // the first node takes only positive values: g and −g are the same factor
    let choices: Vec<Vec<i128>> = chosen
        .iter()
        .enumerate()
        .map(|(i, n)| {
            if i == 0 {
                n.divisors.clone()
            } else {
                n.divisors.iter().flat_map(|&v| [v, -v]).collect()
            }
        })
        .collect();
    let total = choices.iter().try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128));
    if total.is_none_or(|t| t > MAX_CANDIDATES) {
        return Err(PolyError::CoefficientBudget);
    }

    let xs: Vec<i128> = chosen.iter().map(|n| n.x).collect();
    let lead_f = coeffs[deg];
    let const_f = coeffs[0];
    let mut idx = vec![0usize; d + 1];
    let mut ys = vec![0i128; d + 1];
    loop {
        for (i, &j) in idx.iter().enumerate() {
            ys[i] = choices[i][j];
        }
        if let Some(g) = interpolate(&xs, &ys) {
            let plausible = g.len() == d + 1
                && g[d] != 0
                && divides_i128(g[d], lead_f)
                && divides_i128(g[0], const_f)
                && extra
                    .iter()
                    .all(|n| eval_i128(&g, n.x).is_some_and(|v| divides_i128(v, n.value)));
            if plausible {
                let cand = IntPoly::new(g.iter().map(|&c| BigInt::from(c)).collect());
                if f.div_exact(&cand).is_some() {
                    return Ok(Some(cand.primitive_part()));
                }
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(None);
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// A nontrivial factor of the primitive, nonconstant `f` of least possible
/// degree (at most `deg f / 2`), or `None` when `f` is irreducible over ℚ.
pub fn find_factor(f: &IntPoly) -> Result<Option<IntPoly>> {
    let coeffs = to_i128(f)?;
    let deg = f.degree().unwrap_or(0);
    if deg < 2 {
        return Ok(None);
    }
    if coeffs[0] == 0 {
        return Ok(Some(IntPoly::x()));
    }
    for d in 1..=deg / 2 {
        if let Some(g) = factor_of_degree(f, &coeffs, d)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Complete factorisation over ℚ of a nonconstant `f` into primitive
/// irreducible factors with positive leading coefficients (with
/// multiplicity, ascending by degree then by the ring order).
pub fn irreducible_factors(f: &IntPoly) -> Result<Vec<IntPoly>> {
    let mut pending = vec![f.primitive_part()];
    let mut done = Vec::new();
    while let Some(g) = pending.pop() {
        if g.degree().is_none_or(|d| d == 0) {
            continue;
        }
        match find_factor(&g)? {
            Some(h) => {
                let rest = g.div_exact(&h).expect("found factor divides");
                pending.push(h);
                pending.push(rest.primitive_part());
            }
            None => done.push(g),
        }
    }
    done.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    Ok(done)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let g = [3i128, -2, 5];
        let xs = [0i128, 1, -1];
        let ys: Vec<i128> = xs.iter().map(|&x| eval_i128(&g, x).unwrap()).collect();
        assert_eq!(interpolate(&xs, &ys), Some(g.to_vec()));
        // values 0, 1 at 0, 2 need slope 1/2
        assert_eq!(interpolate(&[0, 2], &[0, 1]), None);
    }

    #[test]
    fn finds_linear_and_quadratic_factors() {
        // X² − 1
        assert!(find_factor(&p(&[-1, 0, 1])).unwrap().is_some());
        assert_eq!(find_factor(&p(&[4, 0, 1])).unwrap(), None);
        // (X² + 1)(X² + X + 3) has no rational roots
        let f = p(&[1, 0, 1]) * p(&[3, 1, 1]);
        let g = find_factor(&f).unwrap().unwrap();
        assert_eq!(g.degree(), Some(2));
        assert!(f.div_exact(&g).is_some());
        // (X³ + 2X + 7)(X³ − X + 2): a cubic factor of a sextic
        let f = p(&[7, 2, 0, 1]) * p(&[2, -1, 0, 1]);
        let g = find_factor(&f).unwrap().unwrap();
        assert_eq!(g.degree(), Some(3));
    }

    #[test]
    fn complete_factorisation() {
        let f = p(&[2, 5, 2]); // (2X + 1)(X + 2)
        assert_eq!(irreducible_factors(&f).unwrap(), vec![p(&[2, 1]), p(&[1, 2])]);
        let f = p(&[0, 0, 1]) * p(&[1, 0, 1]);
        assert_eq!(irreducible_factors(&f).unwrap(), vec![p(&[0, 1]), p(&[0, 1]), p(&[1, 0, 1])]);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(positive_divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(positive_divisors(-7), vec![1, 7]);
        assert_eq!(positive_divisors(1), vec![1]);
    }

    #[test]
    fn zero_constant_has_factor_x() {
        assert_eq!(find_factor(&p(&[0, 3, 1])).unwrap(), Some(p(&[0, 1])));
        let big = IntPoly::new(vec![BigInt::from(1u64) << 70u32, BigInt::from(1), BigInt::from(1)]);
        assert_eq!(find_factor(&big), Err(PolyError::CoefficientBudget));
    }
}
