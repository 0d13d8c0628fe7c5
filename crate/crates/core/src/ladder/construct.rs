//! Closed-form state constructions: the stretched multiplet, the
//! highest-weight state of every other multiplet, and the general state
//! expansion in `β(l, p)`.

use crate::error::{Error, Result};
use crate::formulas::alternative::{int, normalization_sum};
use crate::formulas::spec::triangle;
use crate::ladder::alpha::alpha_sequence;
use crate::ladder::state::StateVector;
use crate::numerics::combinatorics::binom;
use crate::numerics::{HalfInt, PrimeExponents, RadicalSum};

/// `|J = j1 + j2, M = j1 + j2 - n⟩`.
pub fn stretched_multiplet_state(j1: HalfInt, j2: HalfInt, n: i64) -> Result<StateVector> {
    let (a, b) = (j1.twice(), j2.twice());
    if a < 0 || b < 0 || n < 0 || n > a + b {
        return Err(Error::Domain(format!(
            "n={n} is outside 0..=2(j1+j2) for j1={j1}, j2={j2}"
        )));
    }
    let den = binom(a + b, n);
    let mut state = StateVector::zero(j1, j2);
    for k in 0..=n {
        let num = binom(a, k) * binom(b, n - k);
        if num.bits() == 0 {
            continue;
        }
        let c = RadicalSum::signed_sqrt_ratio(false, num, den.clone())?;
        state.add_component(j1 - HalfInt::from_int(k), j2 - HalfInt::from_int(n - k), c)?;
    }
    Ok(state)
}

/// `|J, M = J⟩`, assembled from the α sequence with `m = j1 + j2 - J`.
pub fn highest_weight_state(j1: HalfInt, j2: HalfInt, j: HalfInt) -> Result<StateVector> {
    if j1.twice() < 0 || j2.twice() < 0 || !triangle(j1, j2, j) {
        return Err(Error::Domain(format!(
            "J={j} violates the triangle rule for j1={j1}, j2={j2}"
        )));
    }
    let m = int(j1 + j2 - j);
    let seq = alpha_sequence(j1, j2, m)?;
    let mut state = StateVector::zero(j1, j2);
    for (l, alpha) in seq.alphas.into_iter().enumerate() {
        let l = l as i64;
        let m1 = j1 - HalfInt::from_int(l);
        let m2 = j2 - HalfInt::from_int(m - l);
        state.add_component(m1, m2, alpha)?;
    }
    Ok(state)
}

/// The expansion coefficients `β(l, p)` of `|j1+j2-m, j1+j2-m-s⟩`, prepared
/// for one multiplet `m`.
#[derive(Debug, Clone)]
pub struct BetaExpansion {
    j1: HalfInt,
    j2: HalfInt,
    m: i64,
    /// `1/√S`
    inv_sqrt_norm: RadicalSum,
}

impl BetaExpansion {
    pub fn new(j1: HalfInt, j2: HalfInt, m: i64) -> Result<Self> {
        if j1.twice() < 0 || j2.twice() < 0 || m < 0 || m > j1.twice().min(j2.twice()) {
            return Err(Error::Domain(format!(
                "m={m} is outside 0..=min(2j1, 2j2) for j1={j1}, j2={j2}"
            )));
        }
        let j = j1 + j2 - HalfInt::from_int(m);
        let s = normalization_sum(j1, j2, j);
        let inv_sqrt_norm = RadicalSum::sqrt(&s.recip())?;
        Ok(BetaExpansion {
            j1,
            j2,
            m,
            inv_sqrt_norm,
        })
    }

    /// `β(l, p)`; zero when the indices leave the physical range.
    pub fn beta(&self, s: i64, l: i64, p: i64) -> Result<RadicalSum> {
        let (a, b, m) = (self.j1.twice(), self.j2.twice(), self.m);
        if l < 0 || l > m || p < 0 || p > s || s < 0 || s > a + b - 2 * m {
            return Ok(RadicalSum::zero());
        }
        let m1 = self.j1 - HalfInt::from_int(l + p);
        let m2 = self.j2 - HalfInt::from_int(m - l + s - p);
        if m1.abs() > self.j1 || m2.abs() > self.j2 {
            return Ok(RadicalSum::zero());
        }
        let mut radicand = PrimeExponents::one();
        radicand
            .mul_binomial(a - l, p)
            .mul_binomial(b - m + l, s - p)
            .mul_binomial(b - m + l, l)
            .mul_binomial(l + p, p)
            .mul_binomial(m - l + s - p, s - p)
            .mul_binomial(m, l);
        if radicand.is_zero() {
            return Ok(RadicalSum::zero());
        }
        radicand.div_binomial(a, l).div_binomial(a + b - 2 * m, s);
        Ok(&radicand.signed_sqrt(l % 2 == 1) * &self.inv_sqrt_norm)
    }

    /// `|j1+j2-m, j1+j2-m-s⟩` summed over all `(l, p)`.
    pub fn state(&self, s: i64) -> Result<StateVector> {
        let mut out = StateVector::zero(self.j1, self.j2);
        for l in 0..=self.m {
            for p in 0..=s {
                let b = self.beta(s, l, p)?;
                if b.is_zero() {
                    continue;
                }
                let m1 = self.j1 - HalfInt::from_int(l + p);
                let m2 = self.j2 - HalfInt::from_int(self.m - l + s - p);
                out.add_component(m1, m2, b)?;
            }
        }
        Ok(out)
    }
}

/// `β(l, p)` for the state `|j1+j2-m, j1+j2-m-s⟩`, component
/// `|j1-l-p, j2-m+l-s+p⟩`.
pub fn beta_closed_form(
    j1: HalfInt,
    j2: HalfInt,
    m: i64,
    s: i64,
    l: i64,
    p: i64,
) -> Result<RadicalSum> {
    BetaExpansion::new(j1, j2, m)?.beta(s, l, p)
}
