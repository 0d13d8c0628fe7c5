//! Binomial coefficients and factorials over arbitrary-precision integers.
//!
//! Values come from a process-wide table that grows on demand. Readers share
//! a read lock; a miss takes the write lock and extends the table up to the
//! requested size. Filling is deterministic, so concurrent fills are
//! indistinguishable from a single-threaded recomputation.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;

#[derive(Default)]
struct Tables {
    factorials: Vec<BigUint>,
    /// Pascal rows `0..pascal.len()`.
    pascal: Vec<Vec<BigUint>>,
}

fn tables() -> &'static RwLock<Tables> {
    static TABLES: OnceLock<RwLock<Tables>> = OnceLock::new();
    TABLES.get_or_init(|| RwLock::new(Tables::default()))
}

/// `n!`
pub fn factorial(n: u64) -> BigUint {
    let n = n as usize;
    {
        let t = tables().read().unwrap();
        if let Some(v) = t.factorials.get(n) {
            return v.clone();
        }
    }
    let mut t = tables().write().unwrap();
    if t.factorials.is_empty() {
        t.factorials.push(BigUint::one());
    }
    while t.factorials.len() <= n {
        let k = t.factorials.len();
        let next = &t.factorials[k - 1] * BigUint::from(k);
        t.factorials.push(next);
    }
    t.factorials[n].clone()
}

/// Largest argument for which binomials are served from the Pascal table;
/// beyond it they are computed from factorials.
const PASCAL_LIMIT: usize = 512;

/// Binomial coefficient with the generalized-zero convention: `0` when
/// `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::ZERO;
    }
    let (n, k) = (n as usize, k as usize);
    if n >= PASCAL_LIMIT {
        return factorial(n as u64) / (factorial(k as u64) * factorial((n - k) as u64));
    }
    {
        let t = tables().read().unwrap();
        if let Some(row) = t.pascal.get(n) {
            return row[k].clone();
        }
    }
    let mut t = tables().write().unwrap();
    while t.pascal.len() <= n {
        let row = match t.pascal.last() {
            None => vec![BigUint::one()],
            Some(prev) => {
                let mut row = Vec::with_capacity(prev.len() + 1);
                row.push(BigUint::one());
                for w in prev.windows(2) {
                    row.push(&w[0] + &w[1]);
                }
                row.push(BigUint::one());
                row
            }
        };
        t.pascal.push(row);
    }
    t.pascal[n][k].clone()
}

/// Binomial over signed arguments; a negative upper argument also yields `0`.
pub(crate) fn binom(n: i64, k: i64) -> BigUint {
    if n < 0 {
        BigUint::ZERO
    } else {
        binomial(n as u64, k)
    }
}
