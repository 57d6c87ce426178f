use proptest::prelude::*;
use schat_core::arith::{
    coprime, factorize, gcd, kp_floor, max_prime_sq_below, predecessor_prime, successor_prime, totatives,
};
use schat_core::inequalities::{check_a19, check_chebyshev, consecutive_triples, scan, scan_with, Inequality, ScanBudget};
use schat_core::pgood::{
    all_totatives_prime, certify_largest, enumerate_all_totatives_prime, enumerate_p_good, is_p_good, strong_bound,
    weak_bound,
};
use schat_core::sieve::{sieve, PrimeCtx};
use schat_core::arith;

/// Plain byte-array sieve, written separately from the library's.
fn reference_sieve(limit: usize) -> Vec<bool> {
    let mut is = vec![true; limit + 1];
    is[0] = false;
    if limit >= 1 {
        is[1] = false;
    }
    let mut i = 2;
    while i * i <= limit {
        if is[i] {
            let mut j = i * i;
            while j <= limit {
                is[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is
}

fn phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

#[test]
fn primality_agrees_with_a_sieve_to_a_million() {
    let reference = reference_sieve(1_000_000);
    for (n, &expect) in reference.iter().enumerate() {
        assert_eq!(arith::is_prime(n as u64), expect, "{n}");
    }
    let listed: Vec<u64> = (0..=1_000_000u64).filter(|&n| reference[n as usize]).collect();
    assert_eq!(sieve(1_000_000), listed);
}

#[test]
fn neighbouring_primes_invert() {
    let primes = sieve(100_000);
    for w in primes.windows(2) {
        assert_eq!(successor_prime(w[0]), Ok(w[1]));
        assert_eq!(predecessor_prime(w[1]), Ok(w[0]));
    }
    for &p in &primes {
        assert_eq!(predecessor_prime(successor_prime(p).unwrap()), Ok(p));
        if p > 2 {
            assert_eq!(successor_prime(predecessor_prime(p).unwrap()), Ok(p));
        }
    }
}

#[test]
fn largest_prime_square_below() {
    for n in 5..=1_000_000u64 {
        let p = max_prime_sq_below(n).unwrap();
        assert!(arith::is_prime(p) && p * p < n, "{n}");
        let s = successor_prime(p).unwrap();
        assert!(s * s >= n, "{n}");
    }
}

#[test]
fn coprime_or_divides() {
    for s in sieve(500) {
        for v in s * s + 1..=100_000 {
            assert!(gcd(v, s * s) == 1 || v % s == 0, "s = {s}, v = {v}");
        }
    }
}

#[test]
fn totatives_count_matches_phi() {
    for n in 1..=10_000u64 {
        let expect = if n > 1 { phi(n) - 1 } else { 0 };
        assert_eq!(totatives(n).count() as u64, expect, "{n}");
    }
    assert_eq!(phi(1), 1);
}

#[test]
fn kp_floor_inequalities() {
    for p in sieve(10_000) {
        let k = kp_floor(p).unwrap();
        let s = successor_prime(p).unwrap();
        let ss = successor_prime(s).unwrap();
        assert!(k * s < ss * ss && (k + 1) * s > ss * ss, "p = {p}");
    }
}

#[test]
fn largest_p_good_small_table() {
    let table: Vec<(u64, u64)> = [2, 3, 5, 7, 11, 13].iter().map(|&p| (p, certify_largest(p).unwrap().largest)).collect();
    // p ≤ 7 by plain scan; the 7 → 286 entry is the published one
    assert_eq!(table[3], (7, 286));
    for &(p, largest) in &table[4..] {
        assert_eq!(Some(largest), certify_largest(p).unwrap().strong_bound);
        assert_eq!(largest, strong_bound(p).unwrap());
    }
    for &(p, largest) in &table {
        assert!(is_p_good(largest, p).unwrap().good);
        assert!(largest < weak_bound(p).unwrap());
    }
}

#[test]
fn thirty_is_the_last_all_prime_totatives() {
    let all: Vec<u64> = enumerate_p_good(2, 300).unwrap().into_iter().filter(|&n| all_totatives_prime(n).good).collect();
    assert_eq!(all.iter().max(), Some(&30));
    assert_eq!(enumerate_all_totatives_prime(300), all);
}

#[test]
fn witnesses_are_least_counterexamples() {
    let r = is_p_good(289, 7).unwrap();
    assert_eq!((r.good, r.witness), (false, Some(121)));
    assert_eq!(r.to_line(), "n=289 p=7 good=false witness=121");
    let r = all_totatives_prime(31);
    assert_eq!(r.witness, Some(4));
    for n in [1, 2, 3] {
        assert!(is_p_good(n, 7).unwrap().good);
        assert!(all_totatives_prime(n).good);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn stricter_filters_keep_goodness(n in 1u64..3_000, i in 0usize..8, j in 0usize..8) {
        let primes = [2u64, 3, 5, 7, 11, 13, 17, 19];
        let (p, q) = (primes[i.min(j)], primes[i.max(j)]);
        if is_p_good(n, p).unwrap().good {
            prop_assert!(is_p_good(n, q).unwrap().good);
        }
        if all_totatives_prime(n).good {
            prop_assert!(is_p_good(n, p).unwrap().good);
        }
    }

    #[test]
    fn witness_is_a_genuine_counterexample(n in 1u64..5_000, i in 0usize..6) {
        let p = [2u64, 3, 5, 7, 11, 13][i];
        let r = is_p_good(n, p).unwrap();
        if let Some(t) = r.witness {
            prop_assert!(t > 1 && t < n && coprime(t, n) && !arith::is_prime(t));
            prop_assert!(factorize(t).iter().all(|&(q, _)| q > p));
        }
    }

    #[test]
    fn gcd_divides_both(a in 0u64..1_000_000, b in 0u64..1_000_000) {
        let g = gcd(a, b);
        if g > 0 {
            prop_assert!(a % g == 0 && b % g == 0);
            prop_assert_eq!(gcd(a / g, b / g), 1);
        } else {
            prop_assert!(a == 0 && b == 0);
        }
    }
}

#[test]
fn triples_count_and_implication_chain() {
    for limit in [5u64, 100, 10_000, 200_000] {
        let pi = sieve(limit).len();
        assert_eq!(consecutive_triples(limit).count(), pi - 2);
    }
    for t in consecutive_triples(200_000).filter(|t| t.q >= 19) {
        if check_a19(t) {
            assert!(check_chebyshev(t.q).unwrap(), "{t:?}");
        }
    }
}

#[test]
fn scans_are_clean_and_independent_of_the_prime_source() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("primes.txt");
    PrimeCtx::with_limit(300_000).save(&path).unwrap();
    let table = PrimeCtx::load(&path).unwrap();
    for which in [Inequality::A19, Inequality::Eq4, Inequality::Chebyshev] {
        let plain = scan(which, 100_000, ScanBudget::default()).unwrap();
        assert!(plain.passed());
        assert_eq!(scan_with(which, 100_000, ScanBudget::default(), Some(&table)).unwrap(), plain);
        // a table too short to cover the range falls back to sieving
        let short = PrimeCtx::with_limit(1000);
        assert_eq!(scan_with(which, 100_000, ScanBudget::default(), Some(&short)).unwrap(), plain);
    }
    let tiny = scan(Inequality::A19, 18, ScanBudget::default()).unwrap();
    assert_eq!((tiny.checked, tiny.failures.len()), (5, 0));
}
