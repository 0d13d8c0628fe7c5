//! Rationals held as prime-exponent vectors, for products and quotients of
//! factorials and binomials.
//!
//! Exponents of `n!` come from a growable table (Legendre's formula applied
//! incrementally), so square roots split into square and squarefree parts
//! without multiplying the product out and factoring it again.

use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use crate::numerics::radical::RadicalSum;
use crate::numerics::stats;

#[derive(Default)]
struct ExponentTable {
    primes: Vec<u32>,
    /// `factorials[n][i]` = exponent of `primes[i]` in `n!`.
    factorials: Vec<Vec<u32>>,
}

fn table() -> &'static RwLock<ExponentTable> {
    static TABLE: OnceLock<RwLock<ExponentTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(ExponentTable::default()))
}

fn ensure(n: usize) {
    if table().read().unwrap().factorials.len() > n {
        return;
    }
    let mut t = table().write().unwrap();
    if t.factorials.is_empty() {
        t.factorials.push(Vec::new());
    }
    while t.factorials.len() <= n {
        let k = t.factorials.len() as u32;
        let mut exps = t.factorials[k as usize - 1].clone();
        let mut rest = k;
        for (i, &p) in t.primes.iter().enumerate() {
            if p * p > rest {
                break;
            }
            while rest.is_multiple_of(p) {
                rest /= p;
                exps[i] += 1;
            }
        }
        if rest > 1 {
            match t.primes.binary_search(&rest) {
                Ok(i) => exps[i] += 1,
                Err(_) => {
                    // rest is a new prime, necessarily equal to k
                    t.primes.push(rest);
                    exps.push(1);
                }
            }
        }
        t.factorials.push(exps);
    }
}

/// `Π pᵢ^eᵢ` with signed exponents, or exactly zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimeExponents {
    exps: Vec<i64>,
    zero: bool,
}

impl PrimeExponents {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    fn add_factorial(&mut self, n: u64, sign: i64) {
        ensure(n as usize);
        let t = table().read().unwrap();
        let f = &t.factorials[n as usize];
        if self.exps.len() < f.len() {
            self.exps.resize(f.len(), 0);
        }
        for (e, &x) in self.exps.iter_mut().zip(f) {
            *e += sign * x as i64;
        }
    }

    /// Multiplies by `n!`.
    pub fn mul_factorial(&mut self, n: i64) -> &mut Self {
        if n < 0 {
            self.zero = true;
        } else {
            self.add_factorial(n as u64, 1);
        }
        self
    }

    /// Divides by `n!`; `n` must be non-negative.
    pub fn div_factorial(&mut self, n: i64) -> &mut Self {
        assert!(n >= 0, "division by the factorial of a negative number");
        self.add_factorial(n as u64, -1);
        self
    }

    /// Multiplies by `C(n, k)` with the generalized-zero convention.
    pub fn mul_binomial(&mut self, n: i64, k: i64) -> &mut Self {
        if n < 0 || k < 0 || k > n {
            self.zero = true;
            return self;
        }
        self.mul_factorial(n).div_factorial(k).div_factorial(n - k)
    }

    /// Divides by `C(n, k)`, which must be nonzero.
    pub fn div_binomial(&mut self, n: i64, k: i64) -> &mut Self {
        assert!(
            n >= 0 && (0..=n).contains(&k),
            "division by a zero binomial C({n}, {k})"
        );
        self.div_factorial(n).mul_factorial(k).mul_factorial(n - k)
    }

    /// Multiplies by a small positive integer; the exponent table is grown
    /// up to `x`, so this is meant for values like `2J + 1`.
    pub fn mul_int(&mut self, x: u64) -> &mut Self {
        if x == 0 {
            self.zero = true;
            return self;
        }
        ensure(x as usize);
        let t = table().read().unwrap();
        let mut rest = x;
        for (i, &p) in t.primes.iter().enumerate() {
            if rest == 1 {
                break;
            }
            let p = p as u64;
            while rest.is_multiple_of(p) {
                rest /= p;
                if self.exps.len() <= i {
                    self.exps.resize(i + 1, 0);
                }
                self.exps[i] += 1;
            }
        }
        debug_assert_eq!(rest, 1);
        self
    }

    pub fn to_rational(&self) -> BigRational {
        if self.zero {
            return BigRational::from_integer(BigInt::from(0));
        }
        let t = table().read().unwrap();
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for (&e, &p) in self.exps.iter().zip(&t.primes) {
            let pw = BigUint::from(p).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num *= pw;
            } else if e < 0 {
                den *= pw;
            }
        }
        BigRational::new_raw(BigInt::from(num), BigInt::from(den))
    }

    /// `±√(self)` in canonical form.
    pub fn signed_sqrt(&self, negative: bool) -> RadicalSum {
        if self.zero {
            return RadicalSum::zero();
        }
        let t = table().read().unwrap();
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        let mut kernel = BigUint::one();
        for (&e, &p) in self.exps.iter().zip(&t.primes) {
            if e == 0 {
                continue;
            }
            // p^e = (p^q)²·p^r, r ∈ {0, 1}
            let q = e.div_euclid(2);
            if e.rem_euclid(2) == 1 {
                kernel *= p;
            }
            let pw = BigUint::from(p).pow(q.unsigned_abs() as u32);
            if q > 0 {
                num *= pw;
            } else if q < 0 {
                den *= pw;
            }
        }
        stats::note_bits(num.bits().max(den.bits()).max(kernel.bits()));
        let mut num = BigInt::from(num);
        if negative {
            num = -num;
        }
        RadicalSum::term(BigRational::new_raw(num, BigInt::from(den)), kernel)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{binomial, canonical_sqrt_with, factorial, PrimeSieve};
    use proptest::prelude::*;

    #[test]
    fn factorial_exponents() {
        let mut x = PrimeExponents::one();
        x.mul_factorial(10);
        assert_eq!(
            x.to_rational(),
            BigRational::from_integer(BigInt::from(factorial(10)))
        );
        x.div_factorial(12);
        assert_eq!(x.to_rational(), BigRational::new(1.into(), 132.into()));
    }

    #[test]
    fn zero_binomials() {
        let mut x = PrimeExponents::one();
        x.mul_binomial(4, 5);
        assert!(x.is_zero());
        assert!(x.signed_sqrt(false).is_zero());
    }

    proptest! {
        #[test]
        fn sqrt_matches_trial_division(
            facts in proptest::collection::vec((0i64..120, any::<bool>()), 0..6),
            binoms in proptest::collection::vec((0i64..150, 0i64..150), 0..4),
            ints in proptest::collection::vec(1u64..5000, 0..3),
            negative in any::<bool>(),
        ) {
            let mut x = PrimeExponents::one();
            let mut q = BigRational::one();
            for (n, up) in facts {
                let f = BigRational::from_integer(BigInt::from(factorial(n as u64)));
                if up { x.mul_factorial(n); q *= f; } else { x.div_factorial(n); q /= f; }
            }
            for (n, k) in binoms {
                let k = k.min(n);
                x.mul_binomial(n, k);
                q *= BigRational::from_integer(BigInt::from(binomial(n as u64, k)));
            }
            for v in ints {
                x.mul_int(v);
                q *= BigRational::from_integer(BigInt::from(v));
            }
            prop_assert_eq!(x.to_rational(), q.clone());
            // every prime factor is below 5000
            let (c, k) = canonical_sqrt_with(&q, &PrimeSieve::new(5000)).unwrap();
            let expected = RadicalSum::term(if negative { -c } else { c }, k);
            prop_assert_eq!(x.signed_sqrt(negative), expected);
        }
    }
}
