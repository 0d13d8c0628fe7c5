use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;

use clebsch::formulas::{validate, SelectionReason};
use clebsch::numerics::{
    binomial, canonical_sqrt, canonical_sqrt_with, h, BigRational, HalfInt, PrimeSieve, RadicalSum,
};
use clebsch::{cg_alternative, cg_racah, to_decimal, CouplingSpec, Validity};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn is_squarefree(k: u64) -> bool {
    let mut d = 2;
    let mut n = k;
    while d * d <= n {
        if n.is_multiple_of(d * d) {
            return false;
        }
        if n.is_multiple_of(d) {
            n /= d;
        }
        d += 1;
    }
    true
}

fn small_squarefree() -> impl Strategy<Value = u64> {
    (1u64..200).prop_filter("squarefree", |&k| is_squarefree(k))
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-60i64..=60, 1i64..=64).prop_map(|(n, d)| q(n, d))
}

fn radical_sum() -> impl Strategy<Value = RadicalSum> {
    prop::collection::vec((rational(), small_squarefree()), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, k)| RadicalSum::term(c, BigUint::from(k)))
            .sum()
    })
}

fn single_term() -> impl Strategy<Value = RadicalSum> {
    (rational(), small_squarefree()).prop_map(|(c, k)| RadicalSum::term(c, BigUint::from(k)))
}

/// Round-half-even of a rational at `places`, written independently of the
/// library's renderer.
fn round_rational(x: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = x.abs() * BigRational::from_integer(scale.clone());
    let (fl, rem) = scaled.numer().div_rem(scaled.denom());
    let twice: BigInt = rem * 2;
    let n = match twice.cmp(scaled.denom()) {
        std::cmp::Ordering::Less => fl,
        std::cmp::Ordering::Greater => fl + 1,
        std::cmp::Ordering::Equal if fl.is_even() => fl,
        std::cmp::Ordering::Equal => fl + 1,
    };
    let (whole, frac) = n.div_rem(&scale);
    let sign = if x.is_negative() && !n.is_zero() {
        "-"
    } else {
        ""
    };
    format!(
        "{sign}{whole}.{:0>width$}",
        frac.to_string(),
        width = places as usize
    )
}

/// Oracle: the rational part is exact; each irrational term is enclosed in
/// an interval of width 10^-digits. An irrational total never sits on a
/// rounding tie, so the interval is narrowed until both ends round alike.
fn oracle_decimal(x: &RadicalSum, places: u32) -> String {
    let mut rational = BigRational::zero();
    let mut irrational = Vec::new();
    for (k, c) in x.terms() {
        if k.is_one() {
            rational += c;
        } else {
            irrational.push((c.clone(), k.clone()));
        }
    }
    if irrational.is_empty() {
        return round_rational(&rational, places);
    }
    let mut digits = 2 * (places + 10);
    loop {
        let scale = BigUint::from(10u32).pow(digits);
        let unit = BigRational::new(1.into(), BigInt::from(scale.clone()));
        let mut lo = rational.clone();
        let mut hi = rational.clone();
        for (c, k) in &irrational {
            // ⌊√k·10^d⌋ ≤ √k·10^d < ⌊√k·10^d⌋ + 1
            let root = (k * &scale * &scale).sqrt();
            let below = BigRational::from_integer(BigInt::from(root)) * &unit;
            let above = &below + &unit;
            if c.is_positive() {
                lo += c * &below;
                hi += c * &above;
            } else {
                lo += c * &above;
                hi += c * &below;
            }
        }
        let (a, b) = (round_rational(&lo, places), round_rational(&hi, places));
        if a == b {
            return a;
        }
        digits *= 2;
    }
}

fn trial_sqrt_oracle(n: u64) -> (u64, u64) {
    // n = a²·k with k squarefree
    let mut a = 1;
    let mut k = 1;
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        a *= p.pow(e / 2);
        if e % 2 == 1 {
            k *= p;
        }
        p += 1;
    }
    (a, k * rest)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn to_decimal_matches_interval_oracle(x in radical_sum(), places in 1u32..9) {
        prop_assert_eq!(to_decimal(&x, places), oracle_decimal(&x, places));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn canonical_sqrt_is_exact_and_squarefree(n in 0u64..1_000_000, d in 1u64..100_000) {
        let r = BigRational::new(n.into(), d.into());
        let (c, k) = canonical_sqrt(&r).unwrap();
        prop_assert!(!c.is_negative());
        let k64 = k.to_u64().unwrap();
        prop_assert!(is_squarefree(k64));
        prop_assert_eq!(&c * &c * BigRational::from_integer(BigInt::from(k64)), r.clone());
        if n == 0 {
            prop_assert_eq!(k64, 1);
        }
    }

    #[test]
    fn canonical_sqrt_of_integers_matches_trial_division(n in 1u64..10_000_000) {
        let sieve = PrimeSieve::new(4096);
        let (c, k) = canonical_sqrt_with(&BigRational::from_integer(n.into()), &sieve).unwrap();
        let (a, kk) = trial_sqrt_oracle(n);
        prop_assert_eq!(c, BigRational::from_integer(a.into()));
        prop_assert_eq!(k, BigUint::from(kk));
    }

    #[test]
    fn addition_is_commutative_and_associative(a in radical_sum(), b in radical_sum(), c in radical_sum()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a - &a, RadicalSum::zero());
        prop_assert_eq!(&a + &RadicalSum::zero(), a.clone());
    }

    #[test]
    fn multiplication_is_commutative_associative_distributive(a in radical_sum(), b in radical_sum(), c in radical_sum()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &RadicalSum::one(), a.clone());
    }

    #[test]
    fn scaling_matches_multiplication(a in radical_sum(), s in rational()) {
        prop_assert_eq!(a.scale(&s), &a * &RadicalSum::from_rational(s.clone()));
    }

    #[test]
    fn no_zero_coefficients_and_squarefree_kernels(a in radical_sum(), b in radical_sum()) {
        for x in [&a + &b, &a * &b] {
            for (k, c) in x.terms() {
                prop_assert!(!c.is_zero());
                prop_assert!(is_squarefree(k.to_u64().unwrap()));
            }
        }
    }

    #[test]
    fn square_of_single_term_is_rational(x in single_term()) {
        let sq = &x * &x;
        prop_assert!(sq.term_count() <= 1);
        if let Some((c, k)) = sq.single_term() {
            prop_assert!(k.is_one());
            prop_assert!(c.is_positive());
        }
        prop_assert_eq!(sq.to_rational(), x.square());
    }

    #[test]
    fn text_round_trip(x in radical_sum()) {
        let text = x.to_string();
        prop_assert_eq!(text.parse::<RadicalSum>().unwrap(), x);
    }

    #[test]
    fn binomial_recurrence((n, k) in (1u64..=100).prop_flat_map(|n| (Just(n), 0..=n as i64))) {
        prop_assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
    }

    #[test]
    fn selection_rule_zero_off_diagonal(
        (tj1, tj2, tj, a, b, c) in (0i64..=8, 0i64..=8, 0i64..=16)
            .prop_flat_map(|(x, y, z)| (Just(x), Just(y), Just(z), 0..=x, 0..=y, 0..=z))
    ) {
        let (m1, m2, m) = (h(tj1 - 2 * a), h(tj2 - 2 * b), h(tj - 2 * c));
        prop_assume!(m != m1 + m2);
        let spec = CouplingSpec::new(h(tj1), h(tj2), m1, m2, h(tj), m);
        prop_assert!(matches!(validate(&spec), Validity::SelectionZero(_)));
        prop_assert!(cg_alternative(&spec).unwrap().is_zero());
        prop_assert!(cg_racah(&spec).unwrap().is_zero());
    }

    #[test]
    fn coefficients_are_single_terms_bounded_by_one(
        (tj1, tj2, a, b, s) in (0i64..=10, 0i64..=10)
            .prop_flat_map(|(x, y)| (Just(x), Just(y), 0..=x, 0..=y, 0..=x.min(y)))
    ) {
        let (j1, j2) = (h(tj1), h(tj2));
        let (m1, m2) = (h(tj1 - 2 * a), h(tj2 - 2 * b));
        let j = (j1 - j2).abs() + HalfInt::from_int(s);
        prop_assume!((m1 + m2).abs() <= j);
        let spec = CouplingSpec::new(j1, j2, m1, m2, j, m1 + m2);
        let v = cg_alternative(&spec).unwrap();
        prop_assert!(v.term_count() <= 1);
        prop_assert!(v.square().unwrap_or_default() <= BigRational::one());
        prop_assert_eq!(v, cg_racah(&spec).unwrap());
    }
}

#[test]
fn spec_examples_for_numerics() {
    let (c, k) = canonical_sqrt(&q(4, 9)).unwrap();
    assert_eq!((c, k), (q(2, 3), BigUint::from(1u32)));
    let (c, k) = canonical_sqrt(&q(8, 18)).unwrap();
    assert_eq!((c, k), (q(2, 3), BigUint::from(1u32)));
    let (c, k) = canonical_sqrt(&q(3, 5)).unwrap();
    assert_eq!((c, k), (q(1, 5), BigUint::from(15u32)));
    assert!(canonical_sqrt(&q(-1, 2)).is_err());
    // 1031 · 1033: no prime factor within the default bound, not a square
    assert!(canonical_sqrt(&q(1031 * 1033, 1)).is_err());
    assert!(canonical_sqrt(&q(1031 * 1031 * 2, 1)).is_ok());

    let root2 = RadicalSum::term(q(1, 1), 2u32.into());
    assert_eq!(&root2 + &root2, RadicalSum::term(q(2, 1), 2u32.into()));
    assert_eq!(&root2 * &root2, RadicalSum::from_integer(2));
    assert!((&root2 + &-&root2).is_zero());

    assert_eq!(binomial(4, 2), BigUint::from(6u32));
    assert_eq!(binomial(4, 5), BigUint::zero());

    assert_eq!(
        to_decimal(&RadicalSum::term(q(1, 5), 15u32.into()), 5),
        "0.77460"
    );
    assert_eq!(to_decimal(&RadicalSum::one(), 5), "1.00000");
    assert_eq!(
        to_decimal(&RadicalSum::term(q(-1, 3), 3u32.into()), 5),
        "-0.57735"
    );
}

#[test]
fn decimal_ties_round_to_even() {
    assert_eq!(
        to_decimal(&RadicalSum::from_rational(q(1, 64)), 5),
        "0.01562"
    );
    assert_eq!(
        to_decimal(&RadicalSum::from_rational(q(3, 64)), 5),
        "0.04688"
    );
    assert_eq!(
        to_decimal(&RadicalSum::from_rational(q(-1, 64)), 5),
        "-0.01562"
    );
    assert_eq!(
        oracle_decimal(&RadicalSum::from_rational(q(1, 64)), 5),
        "0.01562"
    );
}

#[test]
fn validation_examples() {
    let well = CouplingSpec::from_twice([4, 2, 0, 0, 6, 0]);
    assert_eq!(validate(&well), Validity::WellFormed);
    let off = CouplingSpec::from_twice([2, 2, 2, 2, 2, 0]);
    assert_eq!(
        validate(&off),
        Validity::SelectionZero(SelectionReason::ProjectionSum)
    );
    let bad = CouplingSpec::from_twice([1, 1, 0, 1, 2, 1]);
    assert!(matches!(validate(&bad), Validity::MalformedArguments(_)));
}
