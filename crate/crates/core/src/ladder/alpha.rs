//! Coefficients of the highest-weight state of the multiplet `J = j1 + j2 - m`,
//! fixed by `J₊|J, J⟩ = 0` and normalization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::{HalfInt, RadicalSum};

/// `α₀ … α_m`, where `αₗ` multiplies `|j1 - l, j2 - m + l⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaSequence {
    pub m: i64,
    pub alphas: Vec<RadicalSum>,
}

/// `Π_{k=1}^{l} (2j2 - m + k)(m - k + 1) / (k (2j1 - k + 1))` for `l = 0..=m`,
/// by the running product; the empty product is 1.
pub fn alpha_products(j1: HalfInt, j2: HalfInt, m: i64) -> Vec<BigRational> {
    let two_j1 = j1.twice();
    let two_j2 = j2.twice();
    let mut out = Vec::with_capacity(m as usize + 1);
    let mut p = BigRational::one();
    out.push(p.clone());
    for k in 1..=m {
        let num = (two_j2 - m + k) * (m - k + 1);
        let den = k * (two_j1 - k + 1);
        p *= BigRational::new(BigInt::from(num), BigInt::from(den));
        out.push(p.clone());
    }
    out
}

pub fn alpha_sequence(j1: HalfInt, j2: HalfInt, m: i64) -> Result<AlphaSequence> {
    if m < 0 || m > j1.twice().min(j2.twice()) {
        return Err(Error::Domain(format!(
            "m={m} is outside 0..=min(2j1, 2j2) for j1={j1}, j2={j2}"
        )));
    }
    let products = alpha_products(j1, j2, m);
    let total = products.iter().fold(BigRational::zero(), |acc, p| acc + p);
    let alphas = products
        .iter()
        .enumerate()
        .map(|(l, p)| {
            let a = RadicalSum::sqrt(&(p / &total))?;
            Ok(if l % 2 == 1 { -a } else { a })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlphaSequence { m, alphas })
}
