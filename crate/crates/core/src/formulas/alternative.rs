//! The single-sum binomial closed form obtained by rebuilding each multiplet
//! from its highest-weight state.
//!
//! For `a = j1 + j2 - J` and `t = j2 - j1 + J`,
//!
//! ```text
//! C = δ(M, m1+m2) Σ_{l=K}^{N} (-1)^l √( B1·B2·B3·B4·B5·B6 / (C(2j1,l)·C(2J,J-M)·S) )
//!
//! B1 = C(2j1-l, j1-m1-l)          B4 = C(j1-m1, l)
//! B2 = C(t+l, J-M+m1-j1+l)        B5 = C(j2-M+m1, J-M+m1-j1+l)
//! B3 = C(t+l, l)                  B6 = C(a, l)
//! S  = Σ_{i=0}^{a} C(t+i, i)·C(a, i) / C(2j1, i)
//! K  = max(0, j1-J+m2),  N = min(a, j1-m1)
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::formulas::spec::{admissible, triangle, CouplingSpec};
use crate::numerics::combinatorics::binom;
use crate::numerics::{HalfInt, PrimeExponents, RadicalSum};

/// `x` as an integer; callers only pass sums that the selection rules make integral.
pub(crate) fn int(x: HalfInt) -> i64 {
    debug_assert!(x.is_integer(), "{x} is not an integer");
    x.twice().div_euclid(2)
}

fn ratio(num: num_bigint::BigUint, den: num_bigint::BigUint) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The normalization sum `S(j1, j2, J)` shared by a whole multiplet.
pub fn normalization_sum(j1: HalfInt, j2: HalfInt, j: HalfInt) -> BigRational {
    let a = int(j1 + j2 - j);
    let t = int(j2 - j1 + j);
    let two_j1 = j1.twice();
    (0..=a)
        .map(|i| ratio(binom(t + i, i) * binom(a, i), binom(two_j1, i)))
        .fold(BigRational::zero(), |acc, x| acc + x)
}

/// The closed form prepared for one multiplet `(j1, j2, J)`; reuses the
/// normalization across all `(M, m1)` of the multiplet.
#[derive(Debug, Clone)]
pub struct AlternativeFormula {
    j1: HalfInt,
    j2: HalfInt,
    j: HalfInt,
    inv_sqrt_norm: RadicalSum,
}

impl AlternativeFormula {
    pub fn new(j1: HalfInt, j2: HalfInt, j: HalfInt) -> Result<Self> {
        if j1.twice() < 0 || j2.twice() < 0 || !triangle(j1, j2, j) {
            return Err(Error::Domain(format!(
                "J={j} is not an admissible coupling of j1={j1} and j2={j2}"
            )));
        }
        let s = normalization_sum(j1, j2, j);
        let inv_sqrt_norm = RadicalSum::sqrt(&s.recip())?;
        Ok(AlternativeFormula {
            j1,
            j2,
            j,
            inv_sqrt_norm,
        })
    }

    /// `C(j1, j2, m1, M - m1, J, M)`. Projections must be in range and of
    /// matching parity.
    pub fn coefficient(&self, m1: HalfInt, m: HalfInt) -> Result<RadicalSum> {
        let (j1, j2, j) = (self.j1, self.j2, self.j);
        let m2 = m - m1;
        if m1.abs() > j1 || m2.abs() > j2 || m.abs() > j {
            return Ok(RadicalSum::zero());
        }
        let a = int(j1 + j2 - j);
        let t = int(j2 - j1 + j);
        let j1_minus_m1 = int(j1 - m1);
        let j2_minus_m2 = int(j2 - m2);
        // J - M + m1 - j1 = J - j1 - m2
        let shift = int(j - j1 - m2);
        let lower = 0.max(int(j1 - j + m2));
        let upper = a.min(j1_minus_m1);
        let two_j1 = j1.twice();

        let mut sum = RadicalSum::zero();
        for l in lower..=upper {
            let mut radicand = PrimeExponents::one();
            radicand
                .mul_binomial(two_j1 - l, j1_minus_m1 - l)
                .mul_binomial(t + l, shift + l)
                .mul_binomial(t + l, l)
                .mul_binomial(j1_minus_m1, l)
                .mul_binomial(j2_minus_m2, shift + l)
                .mul_binomial(a, l);
            if radicand.is_zero() {
                continue;
            }
            radicand
                .div_binomial(two_j1, l)
                .div_binomial(j.twice(), int(j - m));
            sum += radicand.signed_sqrt(l % 2 == 1);
        }
        Ok(&sum * &self.inv_sqrt_norm)
    }
}

/// The closed-form coefficient; zero whenever a selection rule applies.
pub fn cg_alternative(spec: &CouplingSpec) -> Result<RadicalSum> {
    if !admissible(spec)? {
        return Ok(RadicalSum::zero());
    }
    AlternativeFormula::new(spec.j1, spec.j2, spec.j)?.coefficient(spec.m1, spec.m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::to_decimal;

    fn cg(t: [i64; 6]) -> RadicalSum {
        cg_alternative(&CouplingSpec::from_twice(t)).unwrap()
    }

    #[test]
    fn documented_values() {
        assert_eq!(cg([2, 2, 0, 0, 4, 0]).to_string(), "sqrt(2/3)");
        assert_eq!(cg([4, 2, 4, 2, 6, 6]), RadicalSum::one());
        assert_eq!(to_decimal(&cg([2, 2, 0, 0, 0, 0]), 5), "-0.57735");
        assert!(cg([2, 2, 0, 0, 2, 0]).is_zero());
    }

    #[test]
    fn selection_zero_and_malformed() {
        assert!(cg([2, 2, 2, 2, 2, 0]).is_zero());
        assert!(cg([2, 2, 0, 0, 6, 0]).is_zero());
        assert!(matches!(
            cg_alternative(&CouplingSpec::from_twice([1, 1, 0, 1, 2, 1])),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn normalization_sum_small_case() {
        // j1 = j2 = 1/2, J = 0: S = 1 + 1·1/1 = 2
        let s = normalization_sum(
            HalfInt::from_twice(1),
            HalfInt::from_twice(1),
            HalfInt::ZERO,
        );
        assert_eq!(s, BigRational::from_integer(2.into()));
    }
}
