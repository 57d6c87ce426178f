//! Acceptance criteria 1–11. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails. Run with `cargo test --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use schat_core::arith;
use schat_core::folio::{axiom_catalog, check_structure, eval_bounded, parse, pretty, pretty_ascii, verify};
use schat_core::folio::{CheckOptions, EvalConfig, NatStructure, QzStructure, TriBool};
use schat_core::inequalities::{scan, Inequality, ScanBudget};
use schat_core::pgood;
use schat_core::poly::sample;
use schat_core::poly::{
    a18_bigger_prime, a19_check_int, between_prime_qz, find_factor, floor_div_int, is_irreducible_int,
    is_irreducible_qz, lemma51, predecessor_prime_int, strong_bound_int, successor_prime_int, x_plus, IntPoly,
    Lemma51, QzIrreducibility, DEFAULT_DEGREE_BOUND,
};

mod common;

type Verdict = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn trial_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

fn euclid(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        euclid(b, a % b)
    }
}

/// Straight from the definition: every totative whose prime factors all
/// exceed `p` is prime. `p = None` drops the filter.
fn naive_good(n: u64, p: Option<u64>) -> bool {
    (2..n).filter(|&t| euclid(t, n) == 1).all(|t| {
        let filtered = match p {
            Some(p) => (2..=p).all(|q| !trial_prime(q) || t % q != 0),
            None => true,
        };
        !filtered || trial_prime(t)
    })
}

fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| trial_prime(n)).collect()
}

fn c1() -> Verdict {
    let lib: Vec<u64> = (1..=290).filter(|&n| pgood::is_p_good(n, 7).unwrap().good).collect();
    let naive: Vec<u64> = (1..=290).filter(|&n| naive_good(n, Some(7))).collect();
    ensure(lib == naive, || "library and definition disagree below 291".into())?;
    let largest = *lib.last().unwrap();
    ensure(largest == 286, || format!("largest 7-good ≤ 290 is {largest}"))?;
    ensure(pgood::largest_p_good(7).unwrap() == 286, || "largest_p_good(7) ≠ 286".into())?;
    Ok("largest 7-good = 286".into())
}

fn c2() -> Verdict {
    let lib = pgood::enumerate_all_totatives_prime(10_000);
    let naive: Vec<u64> = (1..=10_000).filter(|&n| naive_good(n, None)).collect();
    ensure(lib == naive, || "library and definition disagree".into())?;
    let largest = *lib.last().unwrap();
    ensure(largest == 30, || format!("largest is {largest}"))?;
    Ok(format!("largest all-totatives-prime n ≤ 10^4 = {largest}"))
}

fn c3() -> Verdict {
    let mut scanned = 0u64;
    for p in primes_in(8, 100) {
        let strong = pgood::strong_bound(p).unwrap();
        let weak = pgood::weak_bound(p).unwrap();
        let (s, ss) = (arith::successor_prime(p).unwrap(), arith::nth_successor(p, 2).unwrap());
        let k = strong / s;
        ensure(strong % s == 0 && k * s < ss * ss && (k + 1) * s > ss * ss, || format!("k_p wrong for p = {p}"))?;
        ensure(pgood::is_p_good(strong, p).unwrap().good, || format!("S(p)·k_p = {strong} not {p}-good"))?;
        for m in strong + 1..weak {
            ensure(!pgood::is_p_good(m, p).unwrap().good, || format!("{m} is {p}-good above {strong}"))?;
            scanned += 1;
        }
    }
    Ok(format!("21 primes, {scanned} values between the bounds, 0 discrepancies"))
}

fn c4() -> Verdict {
    let mut checked = 0;
    for p in primes_in(7, 50) {
        let weak = pgood::weak_bound(p).unwrap();
        for m in weak..=weak + 1000 {
            let r = pgood::is_p_good(m, p).unwrap();
            ensure(!r.good, || format!("{m} is {p}-good at or above the weak bound"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} values, 0 exceptions"))
}

fn scan_zero(which: Inequality, limit: u64) -> Result<u64, String> {
    let r = scan(which, limit, ScanBudget::default()).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("{which}: {} failures, first {:?}", r.failures.len(), r.failures.first()))?;
    Ok(r.checked)
}

fn c5() -> Verdict {
    let n = scan_zero(Inequality::A19, 10_000_000)?;
    let expect = primes_below_1e7() - 2;
    ensure(n == expect, || format!("checked {n} triples, expected {expect}"))?;
    Ok(format!("{n} triples, 0 failures"))
}

/// π(10^7) by an independent odd-only sieve.
fn primes_below_1e7() -> u64 {
    let n = 10_000_000usize;
    let mut odd_composite = vec![false; n / 2 + 1];
    let mut i = 3;
    while i * i <= n {
        if !odd_composite[i / 2] {
            (i * i..=n).step_by(2 * i).for_each(|j| odd_composite[j / 2] = true);
        }
        i += 2;
    }
    1 + (1..=(n - 1) / 2).filter(|&k| !odd_composite[k]).count() as u64
}

fn c6() -> Verdict {
    let e = scan_zero(Inequality::Eq4, 10_000_000)?;
    let c = scan_zero(Inequality::Chebyshev, 10_000_000)?;
    Ok(format!("eq4 {e} primes, chebyshev {c} primes, 0 failures"))
}

fn c7() -> Verdict {
    let n = scan_zero(Inequality::Bonse, 1000)?;
    ensure(n == 997, || format!("checked {n}"))?;
    Ok("k = 4..1000, 0 failures".into())
}

fn c8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let mut count = 0;
    for _ in 0..1000 {
        let f = sample::lemma51_instance(&mut rng, 4, 10);
        ensure(f.degree().unwrap() <= 4, || format!("{f} has degree above 4"))?;
        let largest = f.coeffs()[1..].iter().map(|c| c.magnitude().clone()).max().unwrap();
        ensure(largest <= BigUint::from(10u32), || format!("{f} has a coefficient above 10"))?;
        ensure(matches!(lemma51(&f), Lemma51::AppliesIrreducible { .. }), || format!("{f} is not an instance"))?;
        ensure(f.content() == 1.into(), || format!("{f} has nontrivial content"))?;
        let factor = find_factor(&f).map_err(|e| e.to_string())?;
        ensure(factor.is_none(), || format!("{f} has factor {}", factor.clone().unwrap()))?;
        count += 1;
    }
    Ok(format!("{count} instances, all irreducible by exhaustive search"))
}

fn c9() -> Verdict {
    let mut names: Vec<String> = (1..=15).map(|i| format!("A{i}")).collect();
    names.extend(["A19".into(), "A20".into()]);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let opts = CheckOptions { instances: 10_000, ..CheckOptions::default() };
    let report = check_structure(&QzStructure::default(), &refs, &opts).map_err(|e| e.to_string())?;
    ensure(report.counterexample_count() == 0, || format!("{} counterexamples", report.counterexample_count()))?;

    for z in -50i64..=50 {
        if z.abs() == 1 {
            continue;
        }
        let f = x_plus(z);
        match is_irreducible_qz(&f, DEFAULT_DEGREE_BOUND).map_err(|e| e.to_string())? {
            QzIrreducibility::Composite(a, b) => {
                ensure(&a * &b == f, || format!("{a} · {b} ≠ {f}"))?;
                ensure(!a.is_one() && !b.is_one(), || format!("trivial split of {f}"))?;
            }
            QzIrreducibility::Irreducible => return Err(format!("{f} reported irreducible")),
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let p = x_plus(1);
    for _ in 0..100 {
        let q = sample::qz_prime_above_x_plus_one(&mut rng);
        ensure(is_irreducible_qz(&q, DEFAULT_DEGREE_BOUND).map_err(|e| e.to_string())?.is_irreducible(), || format!("{q} not prime"))?;
        let u = between_prime_qz(&p, &q, DEFAULT_DEGREE_BOUND).map_err(|e| e.to_string())?;
        ensure(p.poly() < u.poly() && u.poly() < q.poly(), || format!("{u} not between X + 1 and {q}"))?;
        ensure(is_irreducible_qz(&u, DEFAULT_DEGREE_BOUND).map_err(|e| e.to_string())?.is_irreducible(), || format!("{u} not prime"))?;
    }
    let checked: usize = report.axioms.iter().map(|a| a.checked).sum();
    Ok(format!("{checked} axiom instances, 99 unit-shift splits, 100 refuted successors"))
}

fn c10() -> Verdict {
    let b = DEFAULT_DEGREE_BOUND;
    let e = |e: schat_core::poly::PolyError| e.to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let f = sample::irreducible_int(&mut rng, 3, 10);
        let s = successor_prime_int(&f, b).map_err(e)?;
        ensure(predecessor_prime_int(&s, b).map_err(e)? == f, || format!("P(S({f})) ≠ {f}"))?;
        let p = predecessor_prime_int(&f, b).map_err(e)?;
        ensure(successor_prime_int(&p, b).map_err(e)? == f, || format!("S(P({f})) ≠ {f}"))?;
        ensure(a19_check_int(&f, b).map_err(e)?, || format!("A19 fails at {f}"))?;
    }

    let n = IntPoly::from_i64s(&[0, 0, 0, 1]);
    for k in -25..25 {
        let p = IntPoly::from_i64s(&[k, 1]);
        let q = a18_bigger_prime(&n, &p, b).map_err(e)?;
        ensure(p < q && &q.square() < &n, || format!("{q} does not beat {p}"))?;
        ensure(is_irreducible_int(&q, b).map_err(e)?, || format!("{q} not prime"))?;
    }

    let x1 = IntPoly::from_i64s(&[1, 1]);
    let x2sq = IntPoly::from_i64s(&[2, 1]).square();
    ensure(floor_div_int(&x2sq, &x1).map_err(e)? == IntPoly::from_i64s(&[3, 1]), || "floor((X+2)²/(X+1)) ≠ X + 3".into())?;
    let sb = strong_bound_int(&IntPoly::x(), b).map_err(e)?;
    ensure(sb.n == IntPoly::from_i64s(&[3, 4, 1]), || format!("strong bound at X is {}", sb.n))?;
    let sq = sb.second_successor.square();
    let k1 = &sb.k + &IntPoly::from_i64s(&[1]);
    ensure(&sb.k * &sb.successor < sq && &k1 * &sb.successor > sq, || "k_p inequalities fail".into())?;
    Ok("100 irreducibles round-trip, 50 A18 refutations, n = X^2 + 4X + 3".into())
}

fn c11() -> Verdict {
    for entry in axiom_catalog() {
        ensure(parse(&pretty(&entry.formula)).ok().as_ref() == Some(&entry.formula), || format!("{} (unicode)", entry.name))?;
        ensure(parse(&pretty_ascii(&entry.formula)).ok().as_ref() == Some(&entry.formula), || format!("{} (ascii)", entry.name))?;
    }
    let s = NatStructure::new();
    let cfg = EvalConfig { samples: 8, budget: 5_000, ..EvalConfig::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut definite = 0;
    for i in 0..10_000 {
        let f = common::random_formula(&mut rng, 3);
        let env = common::assignment(&mut rng);
        let o = eval_bounded(&f, &s, &env, &cfg).map_err(|e| e.to_string())?;
        match (&o.cert, o.value) {
            (Some(c), v) => {
                ensure(verify(&s, &f, &env, v == TriBool::True, c), || format!("pair {i}: {} does not re-check", pretty(&f)))?;
                definite += 1;
            }
            (None, TriBool::Unknown) => {}
            (None, v) => return Err(format!("pair {i}: {v} without certificate")),
        }
    }
    Ok(format!("23 entries round-trip; {definite}/10000 definite verdicts all re-check"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict, Duration); 11] = [
        ("largest 7-good number", c1, Duration::from_secs(5)),
        ("all totatives prime", c2, Duration::from_secs(5)),
        ("closed form vs brute force", c3, Duration::from_secs(120)),
        ("nothing p-good past the weak bound", c4, Duration::from_secs(60)),
        ("A19 scan to 10^7", c5, Duration::from_secs(60)),
        ("eq4 and Chebyshev scans to 10^7", c6, Duration::from_secs(60)),
        ("Bonse scan", c7, Duration::from_secs(5)),
        ("constant-term criterion", c8, Duration::from_secs(120)),
        ("ℚ_ℤ[X] model suite", c9, Duration::from_secs(600)),
        ("ℤ[X] model suite", c10, Duration::from_secs(600)),
        ("formula layer", c11, Duration::from_secs(600)),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let verdict = verdict.and_then(|d| {
            if took <= limit {
                Ok(d)
            } else {
                Err(format!("{d}, but took {took:.1?} (limit {limit:?})"))
            }
        });
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{took:.2?}]", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} [{took:.2?}]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
