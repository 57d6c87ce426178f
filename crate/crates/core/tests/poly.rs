use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schat_core::poly::sample;
use schat_core::poly::{
    between_prime_qz, find_factor, floor_div_int, halve, irreducible_factors, is_irreducible_int, is_irreducible_qz,
    lemma51, monus, predecessor_prime_int, prime_divisor_qz, strong_bound_int, successor_prime_int, IntPoly, Lemma51,
    PolyError, QZPoly, DEFAULT_DEGREE_BOUND,
};

const B: usize = DEFAULT_DEGREE_BOUND;

fn z(s: &str) -> IntPoly {
    s.parse().unwrap()
}

fn q(s: &str) -> QZPoly {
    s.parse().unwrap()
}

fn konst(c: i64) -> IntPoly {
    IntPoly::from_int(c)
}

#[test]
fn ring_axioms_on_sampled_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..10_000 {
        let (a, b, c) = (sample::int_poly(&mut rng, 3, 20), sample::int_poly(&mut rng, 3, 20), sample::int_poly(&mut rng, 3, 20));
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&a + &b, &b + &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&a * &IntPoly::one(), a);
        assert!((&a + &b).in_cone() && (&a * &b).in_cone());
    }
    for _ in 0..10_000 {
        let (a, b, c) = (sample::qz_poly(&mut rng, 3), sample::qz_poly(&mut rng, 3), sample::qz_poly(&mut rng, 3));
        assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert!((&a * &b).in_cone());
    }
}

#[test]
fn order_axioms_and_discreteness() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..10_000 {
        let (a, b, c) = (sample::qz_poly(&mut rng, 2), sample::qz_poly(&mut rng, 2), sample::qz_poly(&mut rng, 2));
        let (a, b, c) = (a.poly(), b.poly(), c.poly());
        if a < b && b < c {
            assert!(a < c);
        }
        if a < b {
            assert!(&(a + c) < &(b + c));
            if !c.is_zero() {
                assert!(&(a * c) < &(b * c));
            }
        }
        // nothing strictly between f and f + 1; within f + 5 only integer steps
        let one = q("1").poly().clone();
        let five = q("5").poly().clone();
        let d = b;
        let g = a + d;
        assert!(!(a < &g && g < a + &one));
        if a < &g && g <= a + &five {
            assert!(d.is_constant(), "{d:?}");
        }
    }
}

#[test]
fn unit_shifts_are_neither_even_nor_odd() {
    for k in 1..=20 {
        let f = &IntPoly::x() + &konst(k);
        assert_eq!(halve(&f), None, "X + {k} is even");
        assert_eq!(halve(&monus(&f, &konst(1)).unwrap()), None, "X + {k} is odd");
    }
    assert_eq!(halve(&z("2X + 4")), Some(z("X + 2")));
}

#[test]
fn constant_term_criterion_is_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let f = sample::lemma51_instance(&mut rng, 4, 10);
        assert!(matches!(lemma51(&f), Lemma51::AppliesIrreducible { .. }));
        assert_eq!(find_factor(&f).unwrap(), None, "{f}");
    }
    assert_eq!(lemma51(&z("X^2 + 4X + 5")), Lemma51::NotApplicable);
    assert_eq!(lemma51(&z("X^2 + X - 3")), Lemma51::AppliesIrreducible { prime: BigInt::from(3) });
}

#[test]
fn primes_are_irreducible_in_zx() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..300 {
        let f = sample::int_poly(&mut rng, 3, 12);
        if f.is_constant() || !is_irreducible_int(&f, B).unwrap() {
            continue;
        }
        assert_eq!(f.content(), BigInt::from(1));
        assert_eq!(irreducible_factors(&f).unwrap(), vec![f.clone()]);
    }
}

#[test]
fn successor_and_predecessor_invert() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..100 {
        let f = sample::irreducible_int(&mut rng, 3, 10);
        let s = successor_prime_int(&f, B).unwrap();
        assert!(f < s && is_irreducible_int(&s, B).unwrap());
        assert_eq!(predecessor_prime_int(&s, B).unwrap(), f);
        assert!(monus(&s, &f).unwrap().is_constant());
    }
}

#[test]
fn qz_factorisations_multiply_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut composite = 0;
    for _ in 0..2000 {
        let f = sample::qz_poly(&mut rng, 3);
        if f.is_zero() || f.is_one() {
            continue;
        }
        if let schat_core::poly::QzIrreducibility::Composite(a, b) = is_irreducible_qz(&f, B).unwrap() {
            assert_eq!(&a * &b, f);
            assert!(!a.is_one() && !b.is_one());
            composite += 1;
        }
    }
    assert!(composite > 1000);
    let d = prime_divisor_qz(&q("X^2 + 6"), B).unwrap();
    assert!(is_irreducible_qz(&d, B).unwrap().is_irreducible());
}

#[test]
fn between_primes_sit_strictly_between() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = q("X + 1");
    for _ in 0..100 {
        let b = sample::qz_prime_above_x_plus_one(&mut rng);
        let u = between_prime_qz(&a, &b, B).unwrap();
        assert!(a.poly() < u.poly() && u.poly() < b.poly());
        assert!(is_irreducible_qz(&u, B).unwrap().is_irreducible());
    }
    assert!(between_prime_qz(&q("X + 2"), &q("2X + 1"), B).is_err());
}

#[test]
fn floor_division_and_the_strong_bound() {
    assert_eq!(floor_div_int(&z("X^2 + 4X + 4"), &z("X + 1")).unwrap(), z("X + 3"));
    assert!(matches!(floor_div_int(&z("X"), &konst(2)), Err(PolyError::NoFloor { .. })));
    let sb = strong_bound_int(&IntPoly::x(), B).unwrap();
    assert_eq!((sb.successor.clone(), sb.second_successor.clone()), (z("X + 1"), z("X + 2")));
    assert_eq!(sb.n, z("X^2 + 4X + 3"));
    assert!(sb.successor.divides(&sb.n));
    assert!(sb.n < sb.second_successor.square());
    assert!(sb.successor.square() < sb.n);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn floor_div_brackets_the_quotient(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = sample::int_poly(&mut rng, 3, 20);
        let d = sample::int_poly(&mut rng, 2, 20);
        if let Ok(k) = floor_div_int(&m, &d) {
            prop_assert!(&k * &d <= m);
            prop_assert!(m < &(&k + &IntPoly::one()) * &d);
        }
    }

    #[test]
    fn text_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = sample::int_poly(&mut rng, 4, 50);
        prop_assert_eq!(f.to_string().parse::<IntPoly>().unwrap(), f);
        let g = sample::qz_poly(&mut rng, 4);
        prop_assert_eq!(g.to_string().parse::<QZPoly>().unwrap(), g);
    }
}
