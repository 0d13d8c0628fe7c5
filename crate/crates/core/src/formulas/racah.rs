//! Racah's single-sum formula, used as an independent oracle.
//!
//! ```text
//! C = δ(M, m1+m2) √( (2J+1)(j1+j2-J)!(J+j1-j2)!(J+j2-j1)! / (j1+j2+J+1)! )
//!       · √( (j1+m1)!(j1-m1)!(j2+m2)!(j2-m2)!(J+M)!(J-M)! )
//!       · Σ_z (-1)^z / ( z!(j1+j2-J-z)!(j1-m1-z)!(j2+m2-z)!(J-j2+m1+z)!(J-j1-m2+z)! )
//! ```

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::Result;
use crate::formulas::alternative::int;
use crate::formulas::spec::{admissible, CouplingSpec};
use crate::numerics::{factorial, stats, PrimeExponents, RadicalSum};

fn fact(n: i64) -> BigUint {
    debug_assert!(n >= 0);
    factorial(n as u64)
}

pub fn cg_racah(spec: &CouplingSpec) -> Result<RadicalSum> {
    if !admissible(spec)? {
        return Ok(RadicalSum::zero());
    }
    let CouplingSpec {
        j1,
        j2,
        m1,
        m2,
        j,
        m,
    } = *spec;
    let a = int(j1 + j2 - j);
    let b = int(j1 - m1);
    let c = int(j2 + m2);
    let d = int(j - j2 + m1);
    let e = int(j - j1 - m2);

    let z_min = 0.max(-d).max(-e);
    let z_max = a.min(b).min(c);
    if z_min > z_max {
        return Ok(RadicalSum::zero());
    }

    let mut sum = BigRational::zero();
    for z in z_min..=z_max {
        let den = fact(z) * fact(a - z) * fact(b - z) * fact(c - z) * fact(d + z) * fact(e + z);
        let term = BigRational::new(BigInt::one(), BigInt::from(den));
        if z % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    if sum.is_zero() {
        return Ok(RadicalSum::zero());
    }

    stats::note_bits(sum.numer().bits().max(sum.denom().bits()));

    let mut radicand = PrimeExponents::one();
    radicand
        .mul_int((j.twice() + 1) as u64)
        .mul_factorial(a)
        .mul_factorial(int(j + j1 - j2))
        .mul_factorial(int(j + j2 - j1))
        .mul_factorial(int(j1 + m1))
        .mul_factorial(b)
        .mul_factorial(c)
        .mul_factorial(int(j2 - m2))
        .mul_factorial(int(j + m))
        .mul_factorial(int(j - m))
        .div_factorial(int(j1 + j2 + j) + 1);
    Ok(radicand.signed_sqrt(false).scale(&sum))
}
