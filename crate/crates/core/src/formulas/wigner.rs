//! Conversion between Clebsch–Gordan coefficients and Wigner 3j symbols:
//!
//! ```text
//! C(j1, j2, m1, m2, J, M) = (-1)^(M + j1 - j2) √(2J+1) (j1 j2 J; m1 m2 -M)
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::formulas::racah::cg_racah;
use crate::formulas::spec::{check_pair, CouplingSpec, ThreeJSpec};
use crate::numerics::RadicalSum;

/// `1/√(2J+1)`
fn inv_sqrt_dim(twice_j: i64) -> RadicalSum {
    let r = BigRational::new(BigInt::from(1), BigInt::from(twice_j + 1));
    RadicalSum::sqrt(&r).expect("positive radicand")
}

/// Maps a CG value to the 3j symbol `(j1 j2 J; m1 m2 -M)` and its value.
///
/// The phase exponent `M + j1 - j2` is an integer for every nonzero
/// coefficient; a zero value maps to zero.
pub fn cg_to_wigner3j(spec: &CouplingSpec, value: &RadicalSum) -> (ThreeJSpec, RadicalSum) {
    let three_j = ThreeJSpec {
        j1: spec.j1,
        j2: spec.j2,
        j3: spec.j,
        m1: spec.m1,
        m2: spec.m2,
        m3: -spec.m,
    };
    if value.is_zero() {
        return (three_j, RadicalSum::zero());
    }
    let phase_twice = (spec.m + spec.j1 - spec.j2).twice();
    debug_assert!(
        phase_twice % 2 == 0,
        "non-integer phase for a nonzero coefficient"
    );
    let mut out = value * &inv_sqrt_dim(spec.j.twice());
    if phase_twice.div_euclid(2) % 2 != 0 {
        out = -out;
    }
    (three_j, out)
}

/// Wigner 3j symbol, computed from Racah's formula and the conversion above.
pub fn wigner3j(spec: &ThreeJSpec) -> Result<RadicalSum> {
    let names = [("j1", "m1"), ("j2", "m2"), ("j3", "m3")];
    for ((j, m), (jn, mn)) in spec.columns().into_iter().zip(names) {
        if let Some(bad) = check_pair(j, m, jn, mn) {
            return Err(Error::Malformed(bad));
        }
    }
    if (spec.m1 + spec.m2 + spec.m3).twice() != 0 {
        return Ok(RadicalSum::zero());
    }
    let cg = CouplingSpec::new(spec.j1, spec.j2, spec.m1, spec.m2, spec.j3, -spec.m3);
    let value = cg_racah(&cg)?;
    Ok(cg_to_wigner3j(&cg, &value).1)
}
