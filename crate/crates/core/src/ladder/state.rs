use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::numerics::{HalfInt, RadicalSum};

/// A product-basis ket `|m1, m2⟩`; the `(j1, j2)` it belongs to is carried by
/// the enclosing [`StateVector`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductBasisIndex {
    pub m1: HalfInt,
    pub m2: HalfInt,
}

impl ProductBasisIndex {
    pub fn new(m1: HalfInt, m2: HalfInt) -> Self {
        ProductBasisIndex { m1, m2 }
    }

    pub fn total(&self) -> HalfInt {
        self.m1 + self.m2
    }
}

/// A vector in the product space of `j1 ⊗ j2`, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateVector {
    j1: HalfInt,
    j2: HalfInt,
    components: BTreeMap<ProductBasisIndex, RadicalSum>,
}

fn in_range(j: HalfInt, m: HalfInt) -> bool {
    m.abs() <= j && (j + m).is_integer()
}

/// `√((j ∓ m)(j ± m + 1))` for the ladder matrix elements; `raise` picks the sign.
fn ladder_element(j: HalfInt, m: HalfInt, raise: bool) -> RadicalSum {
    let (a, b) = if raise {
        (j - m, j + m + HalfInt::from_int(1))
    } else {
        (j + m, j - m + HalfInt::from_int(1))
    };
    let prod = a.twice() * b.twice() / 4;
    RadicalSum::sqrt(&BigRational::from_integer(BigInt::from(prod))).expect("non-negative")
}

impl StateVector {
    pub fn zero(j1: HalfInt, j2: HalfInt) -> Self {
        StateVector {
            j1,
            j2,
            components: BTreeMap::new(),
        }
    }

    pub fn j1(&self) -> HalfInt {
        self.j1
    }

    pub fn j2(&self) -> HalfInt {
        self.j2
    }

    /// Adds `value` to the component at `|m1, m2⟩`.
    pub fn add_component(&mut self, m1: HalfInt, m2: HalfInt, value: RadicalSum) -> Result<()> {
        if !in_range(self.j1, m1) || !in_range(self.j2, m2) {
            return Err(Error::Domain(format!(
                "|{m1}, {m2}⟩ is not a basis ket of {} ⊗ {}",
                self.j1, self.j2
            )));
        }
        if value.is_zero() {
            return Ok(());
        }
        let key = ProductBasisIndex::new(m1, m2);
        let entry = self.components.entry(key).or_default();
        *entry += value;
        if entry.is_zero() {
            self.components.remove(&key);
        }
        Ok(())
    }

    pub fn component(&self, m1: HalfInt, m2: HalfInt) -> RadicalSum {
        self.components
            .get(&ProductBasisIndex::new(m1, m2))
            .cloned()
            .unwrap_or_default()
    }

    pub fn components(&self) -> impl Iterator<Item = (&ProductBasisIndex, &RadicalSum)> {
        self.components.iter()
    }

    /// Number of nonzero components.
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    /// The shared `M = m1 + m2` of all nonzero components, if there is exactly one.
    pub fn projection(&self) -> Option<HalfInt> {
        let mut it = self.components.keys().map(ProductBasisIndex::total);
        let first = it.next()?;
        it.all(|m| m == first).then_some(first)
    }

    pub fn inner(&self, other: &StateVector) -> RadicalSum {
        let mut acc = RadicalSum::zero();
        for (k, v) in &self.components {
            if let Some(w) = other.components.get(k) {
                acc += v * w;
            }
        }
        acc
    }

    pub fn norm_squared(&self) -> RadicalSum {
        self.inner(self)
    }

    pub fn scale(&self, factor: &RadicalSum) -> StateVector {
        let mut out = StateVector::zero(self.j1, self.j2);
        for (k, v) in &self.components {
            let x = v * factor;
            if !x.is_zero() {
                out.components.insert(*k, x);
            }
        }
        out
    }

    fn apply_ladder(&self, raise: bool) -> StateVector {
        let step = HalfInt::from_int(if raise { 1 } else { -1 });
        let mut out = StateVector::zero(self.j1, self.j2);
        for (k, v) in &self.components {
            let m1 = k.m1 + step;
            if in_range(self.j1, m1) {
                let c = v * &ladder_element(self.j1, k.m1, raise);
                out.add_component(m1, k.m2, c).expect("in range");
            }
            let m2 = k.m2 + step;
            if in_range(self.j2, m2) {
                let c = v * &ladder_element(self.j2, k.m2, raise);
                out.add_component(k.m1, m2, c).expect("in range");
            }
        }
        out
    }

    /// `J₋ = J₋⁽¹⁾ + J₋⁽²⁾` applied exactly, without renormalizing.
    pub fn apply_jminus(&self) -> StateVector {
        self.apply_ladder(false)
    }

    /// `J₊ = J₊⁽¹⁾ + J₊⁽²⁾` applied exactly.
    pub fn apply_jplus(&self) -> StateVector {
        self.apply_ladder(true)
    }
}

/// `√((J+M)(J-M+1))`, the norm of `J₋|J, M⟩`.
pub fn lowering_norm(j: HalfInt, m: HalfInt) -> RadicalSum {
    ladder_element(j, m, false)
}

/// Maps a normalized `|J, M⟩` to the normalized `|J, M-1⟩`.
pub fn lower_normalized(state: &StateVector, j: HalfInt) -> Result<StateVector> {
    let m = state
        .projection()
        .ok_or_else(|| Error::Domain("state has no single M projection".into()))?;
    if m.twice() <= -j.twice() || m.abs() > j {
        return Err(Error::Domain(format!("cannot lower |J={j}, M={m}⟩")));
    }
    let norm = lowering_norm(j, m).square().expect("single term");
    let inv = RadicalSum::sqrt(&norm.recip())?;
    Ok(state.apply_jminus().scale(&inv))
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(k, v)| format!("({v})|{}, {}⟩", k.m1, k.m2))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::h;

    fn r(n: i64, d: i64) -> RadicalSum {
        RadicalSum::sqrt(&BigRational::new(n.into(), d.into())).unwrap()
    }

    #[test]
    fn lowering_the_j1_triplet_state() {
        // |1,1⟩ of 1 ⊗ 1 = √½|1,0⟩ - √½|0,1⟩
        let mut s = StateVector::zero(h(2), h(2));
        s.add_component(h(2), h(0), r(1, 2)).unwrap();
        s.add_component(h(0), h(2), -r(1, 2)).unwrap();
        let lowered = lower_normalized(&s, h(2)).unwrap();
        assert_eq!(lowered.component(h(-2), h(2)), -r(1, 2));
        assert_eq!(lowered.component(h(2), h(-2)), r(1, 2));
        assert!(lowered.component(h(0), h(0)).is_zero());
        assert_eq!(lowered.norm_squared(), RadicalSum::one());
    }

    #[test]
    fn cannot_lower_past_the_bottom() {
        let mut s = StateVector::zero(h(1), h(0));
        s.add_component(h(-1), h(0), RadicalSum::one()).unwrap();
        assert!(lower_normalized(&s, h(1)).is_err());
    }

    #[test]
    fn out_of_range_component_is_rejected() {
        let mut s = StateVector::zero(h(1), h(1));
        assert!(s.add_component(h(3), h(1), RadicalSum::one()).is_err());
        assert!(s.add_component(h(0), h(1), RadicalSum::one()).is_err());
    }

    #[test]
    fn jplus_kills_the_top_state() {
        let mut s = StateVector::zero(h(3), h(1));
        s.add_component(h(3), h(1), RadicalSum::one()).unwrap();
        assert!(s.apply_jplus().is_zero());
        assert_eq!(s.projection(), Some(h(4)));
    }
}
