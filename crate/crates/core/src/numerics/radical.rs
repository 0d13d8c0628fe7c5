//! Exact sums of square roots, `Σ cᵢ·√kᵢ`, with rational `cᵢ` and distinct
//! squarefree kernels `kᵢ`.
//!
//! The representation is canonical: kernels are squarefree and coefficients
//! are never zero, so structural equality of the term maps is value equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::stats;

/// Primes up to `bound`, used to split integers into square and squarefree parts.
#[derive(Debug, Clone)]
pub struct PrimeSieve {
    bound: u64,
    primes: Vec<u32>,
}

impl PrimeSieve {
    /// Radicands for `2j ≤ 200` only carry primes up to about 401.
    pub const DEFAULT_BOUND: u64 = 1024;

    pub fn new(bound: u64) -> Self {
        let bound = bound.max(2);
        let n = bound as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if !composite[i] {
                primes.push(i as u32);
                let mut j = i * i;
                while j <= n {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        PrimeSieve { bound, primes }
    }

    pub fn global() -> &'static PrimeSieve {
        static SIEVE: OnceLock<PrimeSieve> = OnceLock::new();
        SIEVE.get_or_init(|| PrimeSieve::new(Self::DEFAULT_BOUND))
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Splits `n > 0` as `a²·k` with `k` squarefree, returning `(a, k)`.
    ///
    /// Fails when a cofactor survives trial division that is neither prime
    /// (provably, i.e. below `bound²`) nor a perfect square.
    pub fn square_split(&self, n: &BigUint) -> Result<(BigUint, BigUint)> {
        debug_assert!(!n.is_zero());
        let mut rest = n.clone();
        let mut root = BigUint::one();
        let mut kernel = BigUint::one();
        let mut exhausted = true;
        for &p in &self.primes {
            if rest.is_one() {
                exhausted = false;
                break;
            }
            let p64 = p as u64;
            if rest < BigUint::from(p64 * p64) {
                // no factor ≤ √rest remains, so rest is prime
                kernel *= &rest;
                rest = BigUint::one();
                exhausted = false;
                break;
            }
            let e = if p == 2 {
                let tz = rest.trailing_zeros().unwrap_or(0);
                rest >>= tz;
                tz
            } else {
                let mut e = 0u64;
                while rem_small(&rest, p) == 0 {
                    rest /= p;
                    e += 1;
                }
                e
            };
            if e == 0 {
                continue;
            }
            if e % 2 == 1 {
                kernel *= p;
            }
            for _ in 0..e / 2 {
                root *= p;
            }
        }
        if exhausted && !rest.is_one() {
            if rest < BigUint::from(self.bound) * BigUint::from(self.bound) {
                kernel *= &rest;
            } else {
                let s = rest.sqrt();
                if &s * &s == rest {
                    root *= s;
                } else {
                    return Err(Error::KernelBeyondPrimeBound {
                        cofactor: rest.to_string(),
                        bound: self.bound,
                    });
                }
            }
        }
        Ok((root, kernel))
    }
}

fn rem_small(n: &BigUint, p: u32) -> u32 {
    let p = p as u128;
    n.iter_u64_digits()
        .rev()
        .fold(0u128, |r, d| ((r << 64) | d as u128) % p) as u32
}

/// `√r = c·√k` with `c ≥ 0` and `k` squarefree; `√0 = 0·√1`.
pub fn canonical_sqrt(r: &BigRational) -> Result<(BigRational, BigUint)> {
    canonical_sqrt_with(r, PrimeSieve::global())
}

pub fn canonical_sqrt_with(r: &BigRational, sieve: &PrimeSieve) -> Result<(BigRational, BigUint)> {
    if r.is_negative() {
        return Err(Error::NegativeRadicand(r.to_string()));
    }
    if r.is_zero() {
        return Ok((BigRational::zero(), BigUint::one()));
    }
    let num = r.numer().magnitude();
    let den = r.denom().magnitude();
    stats::note_bits(num.bits().max(den.bits()));
    // √(p/q) = a√kp / (b√kq) = a√(kp·kq) / (b·kq), with kp, kq coprime
    let (a, kp) = sieve.square_split(num)?;
    let (b, kq) = sieve.square_split(den)?;
    let coeff = BigRational::new(BigInt::from(a), BigInt::from(b * &kq));
    Ok((coeff, kp * kq))
}

/// `√k₁·√k₂ = g·√(k₁k₂/g²)` with `g = gcd(k₁, k₂)`; the result kernel is squarefree.
fn kernel_product(k1: &BigUint, k2: &BigUint) -> (BigUint, BigUint) {
    if k1.is_one() {
        return (BigUint::one(), k2.clone());
    }
    if k2.is_one() {
        return (BigUint::one(), k1.clone());
    }
    let g = k1.gcd(k2);
    let k = (k1 / &g) * (k2 / &g);
    (g, k)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RadicalSum {
    terms: BTreeMap<BigUint, BigRational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::term(q, BigUint::one())
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// `c·√k`; `k` must already be squarefree.
    pub fn term(c: BigRational, k: BigUint) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            debug_assert!(!k.is_zero());
            terms.insert(k, c);
        }
        RadicalSum { terms }
    }

    /// `√r` for a non-negative rational.
    pub fn sqrt(r: &BigRational) -> Result<Self> {
        let (c, k) = canonical_sqrt(r)?;
        Ok(Self::term(c, k))
    }

    /// `±√(num/den)` for non-negative integers, `den > 0`.
    pub fn signed_sqrt_ratio(negative: bool, num: BigUint, den: BigUint) -> Result<Self> {
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        let s = Self::sqrt(&r)?;
        Ok(if negative { -s } else { s })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &BigRational)> {
        self.terms.iter()
    }

    /// The `(coefficient, kernel)` pair of a single-term value.
    pub fn single_term(&self) -> Option<(&BigRational, &BigUint)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (c, k))
        } else {
            None
        }
    }

    /// The value as a rational, when it has no irrational part.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    /// Sign of a value with at most one term; `None` for genuine sums.
    pub fn signum(&self) -> Option<i8> {
        match self.single_term() {
            _ if self.is_zero() => Some(0),
            Some((c, _)) => Some(if c.is_positive() { 1 } else { -1 }),
            None => None,
        }
    }

    /// `x²` as a rational, for values with at most one term.
    pub fn square(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let (c, k) = self.single_term()?;
        Some(c * c * BigRational::from_integer(BigInt::from(k.clone())))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        RadicalSum {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * q)).collect(),
        }
    }

    fn accumulate(&mut self, k: BigUint, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn f64_approx(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(k, c)| c.to_f64().unwrap_or(f64::NAN) * k.to_f64().unwrap_or(f64::NAN).sqrt())
            .sum()
    }

    /// Largest bit length among the stored integers.
    pub fn max_bits(&self) -> u64 {
        self.terms
            .iter()
            .map(|(k, c)| k.bits().max(c.numer().bits()).max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

impl Add<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.accumulate(k.clone(), c.clone());
        }
        out
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;
    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        for (k, c) in rhs.terms {
            self.accumulate(k, c);
        }
        self
    }
}

impl std::ops::AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        for (k, c) in &rhs.terms {
            self.accumulate(k.clone(), c.clone());
        }
    }
}

impl std::ops::AddAssign for RadicalSum {
    fn add_assign(&mut self, rhs: RadicalSum) {
        for (k, c) in rhs.terms {
            self.accumulate(k, c);
        }
    }
}

impl Neg for RadicalSum {
    type Output = RadicalSum;
    fn neg(mut self) -> RadicalSum {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;
    fn neg(self) -> RadicalSum {
        -self.clone()
    }
}

impl Sub<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        self + &(-rhs)
    }
}

impl Sub for RadicalSum {
    type Output = RadicalSum;
    fn sub(self, rhs: RadicalSum) -> RadicalSum {
        self + (-rhs)
    }
}

impl Mul<&RadicalSum> for &RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                let (g, k) = kernel_product(k1, k2);
                let c = c1 * c2 * BigRational::from_integer(BigInt::from(g));
                out.accumulate(k, c);
            }
        }
        out
    }
}

impl Mul for RadicalSum {
    type Output = RadicalSum;
    fn mul(self, rhs: RadicalSum) -> RadicalSum {
        &self * &rhs
    }
}

impl std::iter::Sum for RadicalSum {
    fn sum<I: Iterator<Item = RadicalSum>>(iter: I) -> RadicalSum {
        iter.fold(RadicalSum::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for RadicalSum {
    /// `0`, a rational such as `-1/2`, `sqrt(p/q)` / `-sqrt(p/q)` for a single
    /// irrational term, and `c1*sqrt(k1) + c2*sqrt(k2) + ...` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        if let Some((c, k)) = self.single_term() {
            if k.is_one() {
                return f.write_str(&fmt_rational(c));
            }
            let sq = self.square().expect("single term");
            let sign = if c.is_negative() { "-" } else { "" };
            return write!(f, "{sign}sqrt({})", fmt_rational(&sq));
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                if k.is_one() {
                    fmt_rational(c)
                } else {
                    format!("{}*sqrt({k})", fmt_rational(c))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.sign() != Sign::Plus {
        return None;
    }
    Some(BigRational::new(num, den))
}

fn parse_term(s: &str) -> Option<RadicalSum> {
    let s = s.trim();
    let (coeff, radicand) = if let Some(inner) = s.strip_prefix("-sqrt(") {
        (
            BigRational::from_integer((-1).into()),
            inner.strip_suffix(')')?,
        )
    } else if let Some(inner) = s.strip_prefix("sqrt(") {
        (BigRational::one(), inner.strip_suffix(')')?)
    } else if let Some((c, rest)) = s.split_once("*sqrt(") {
        (parse_rational(c)?, rest.strip_suffix(')')?)
    } else {
        return Some(RadicalSum::from_rational(parse_rational(s)?));
    };
    let r = parse_rational(radicand)?;
    Some(RadicalSum::sqrt(&r).ok()?.scale(&coeff))
}

impl FromStr for RadicalSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "radical",
            input: s.to_string(),
        };
        if s.trim().is_empty() {
            return Err(err());
        }
        s.split(" + ")
            .map(|t| parse_term(t).ok_or_else(err))
            .sum::<Result<RadicalSum>>()
    }
}

impl serde::Serialize for RadicalSum {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for RadicalSum {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn rs(c: BigRational, k: u32) -> RadicalSum {
        RadicalSum::term(c, BigUint::from(k))
    }

    #[test]
    fn canonical_sqrt_examples() {
        assert_eq!(
            canonical_sqrt(&q(4, 9)).unwrap(),
            (q(2, 3), BigUint::from(1u32))
        );
        assert_eq!(
            canonical_sqrt(&q(8, 18)).unwrap(),
            (q(2, 3), BigUint::from(1u32))
        );
        assert_eq!(
            canonical_sqrt(&q(3, 5)).unwrap(),
            (q(1, 5), BigUint::from(15u32))
        );
        assert_eq!(
            canonical_sqrt(&q(0, 1)).unwrap(),
            (q(0, 1), BigUint::from(1u32))
        );
        assert_eq!(
            canonical_sqrt(&q(12, 1)).unwrap(),
            (q(2, 1), BigUint::from(3u32))
        );
    }

    #[test]
    fn canonical_sqrt_rejects_negative() {
        assert!(matches!(
            canonical_sqrt(&q(-1, 2)),
            Err(Error::NegativeRadicand(_))
        ));
    }

    #[test]
    fn sieve_bound_is_enforced() {
        let sieve = PrimeSieve::new(10);
        // 13 < 10², so it is provably prime
        assert_eq!(
            sieve.square_split(&BigUint::from(13u32)).unwrap().1,
            BigUint::from(13u32)
        );
        // 101² is a perfect square even though 101 is beyond the sieve
        let (a, k) = sieve
            .square_split(&BigUint::from(101u32 * 101 * 3))
            .unwrap();
        assert_eq!((a, k), (BigUint::from(101u32), BigUint::from(3u32)));
        // 101·103 cannot be classified
        assert!(matches!(
            sieve.square_split(&BigUint::from(101u32 * 103)),
            Err(Error::KernelBeyondPrimeBound { .. })
        ));
    }

    #[test]
    fn field_operation_examples() {
        let r2 = rs(q(1, 1), 2);
        assert_eq!(&r2 + &r2, rs(q(2, 1), 2));
        assert_eq!(&r2 * &r2, rs(q(2, 1), 1));
        assert!((&r2 + &(-&r2)).is_zero());
        assert_eq!(rs(q(1, 1), 6) * rs(q(1, 2), 10), rs(q(1, 1), 15));
    }

    #[test]
    fn rendering() {
        assert_eq!(RadicalSum::zero().to_string(), "0");
        assert_eq!(RadicalSum::one().to_string(), "1");
        assert_eq!(rs(q(1, 5), 15).to_string(), "sqrt(3/5)");
        assert_eq!(rs(q(-1, 2), 2).to_string(), "-sqrt(1/2)");
        assert_eq!(rs(q(3, 1), 2).to_string(), "sqrt(18)");
        assert_eq!(rs(q(-1, 2), 1).to_string(), "-1/2");
        let sum = rs(q(1, 2), 1) + rs(q(-1, 3), 3);
        assert_eq!(sum.to_string(), "1/2 + -1/3*sqrt(3)");
    }

    #[test]
    fn parsing_inverts_rendering() {
        for text in [
            "0",
            "1",
            "-1/2",
            "sqrt(3/5)",
            "-sqrt(1/2)",
            "sqrt(18)",
            "1/2 + -1/3*sqrt(3)",
        ] {
            let x: RadicalSum = text.parse().unwrap();
            assert_eq!(x.to_string(), text);
        }
        assert!("sqrt(-2)".parse::<RadicalSum>().is_err());
        assert!("".parse::<RadicalSum>().is_err());
        assert!("2*sqr(3)".parse::<RadicalSum>().is_err());
    }
}
