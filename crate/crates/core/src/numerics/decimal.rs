//! Correctly rounded decimal rendering of radical sums.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::numerics::radical::RadicalSum;

fn pow10(e: u32) -> BigUint {
    BigUint::from(10u32).pow(e)
}

/// Round-half-even of `num/den` for non-negative integers.
fn round_half_even(num: &BigUint, den: &BigUint) -> BigUint {
    let (q, r) = num.div_rem(den);
    let twice_r: BigUint = r << 1u32;
    match twice_r.cmp(den) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1u32,
        std::cmp::Ordering::Equal => {
            if q.is_even() {
                q
            } else {
                q + 1u32
            }
        }
    }
}

/// Round-half-even of `√x` for a non-negative rational `x`.
fn round_sqrt_half_even(x: &BigRational) -> BigUint {
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    // ⌊√x⌋ = isqrt(⌊x⌋)
    let n = (num / den).sqrt();
    // compare x with (n + 1/2)²  ⇔  4·num vs (2n+1)²·den
    let mid = (&n << 1u32) + 1u32;
    let lhs = num << 2u32;
    let rhs = &mid * &mid * den;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Less => n,
        std::cmp::Ordering::Greater => n + 1u32,
        std::cmp::Ordering::Equal => {
            if n.is_even() {
                n
            } else {
                n + 1u32
            }
        }
    }
}

fn format_scaled(negative: bool, magnitude: &BigUint, places: u32) -> String {
    let scale = pow10(places);
    let (whole, frac) = magnitude.div_rem(&scale);
    let sign = if negative && !magnitude.is_zero() {
        "-"
    } else {
        ""
    };
    format!(
        "{sign}{whole}.{frac:0>width$}",
        frac = frac.to_string(),
        width = places as usize
    )
}

/// Bounds `lo ≤ x·10^p ≤ hi` for a radical sum.
fn scaled_bounds(x: &RadicalSum, p: u32) -> (BigInt, BigInt) {
    let scale = BigRational::from_integer(BigInt::from(pow10(p)));
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    for (k, c) in x.terms() {
        let t = c * c * BigRational::from_integer(BigInt::from(k.clone())) * &scale * &scale;
        let floor = (t.numer().magnitude() / t.denom().magnitude()).sqrt();
        let floor = BigInt::from(floor);
        if c.is_negative() {
            lo -= &floor + 1;
            hi -= floor;
        } else {
            lo += &floor;
            hi += floor + 1;
        }
    }
    (lo, hi)
}

fn round_signed(v: &BigInt, den: &BigUint) -> (bool, BigUint) {
    (v.is_negative(), round_half_even(v.magnitude(), den))
}

/// Renders `x` with exactly `places` fractional digits, rounding half to even.
///
/// Single-term values are rounded exactly. Genuine sums are irrational, so
/// interval bounds are refined until both ends round to the same digits.
pub fn to_decimal(x: &RadicalSum, places: u32) -> String {
    assert!(places >= 1, "at least one decimal place is required");
    if x.is_zero() {
        return format_scaled(false, &BigUint::zero(), places);
    }
    if let Some((c, k)) = x.single_term() {
        let s = pow10(places);
        let t = c
            * c
            * BigRational::from_integer(BigInt::from(k.clone()))
            * BigRational::from_integer(BigInt::from(&s * &s));
        let digits = round_sqrt_half_even(&t);
        return format_scaled(c.is_negative(), &digits, places);
    }
    let mut guard = 16u32;
    loop {
        let p = places + guard;
        let (lo, hi) = scaled_bounds(x, p);
        let den = pow10(guard);
        let a = round_signed(&lo, &den);
        let b = round_signed(&hi, &den);
        let same = a == b || (a.1.is_zero() && b.1.is_zero());
        if same {
            return format_scaled(a.0, &a.1, places);
        }
        guard *= 2;
        debug_assert!(guard < 1 << 16, "decimal refinement did not converge");
    }
}

/// The exact value `n / 10^places` of a rendered decimal string, for tests
/// and table parsing.
pub fn parse_decimal(s: &str) -> Option<BigRational> {
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits: BigInt = format!("{whole}{frac}").parse().ok()?;
    let v = BigRational::new(digits, BigInt::from(pow10(frac.len() as u32)));
    Some(if negative { -v } else { v })
}
