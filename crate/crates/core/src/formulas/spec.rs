use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Malformed};
use crate::numerics::HalfInt;

/// Arguments of `C(j1, j2, m1, m2, J, M) = ⟨j1 m1; j2 m2 | J M⟩`.
///
/// `j` and `m` are the total angular momentum and its projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CouplingSpec {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub j: HalfInt,
    pub m: HalfInt,
}

impl CouplingSpec {
    pub fn new(j1: HalfInt, j2: HalfInt, m1: HalfInt, m2: HalfInt, j: HalfInt, m: HalfInt) -> Self {
        CouplingSpec {
            j1,
            j2,
            m1,
            m2,
            j,
            m,
        }
    }

    /// Builds a spec from doubled values `[2j1, 2j2, 2m1, 2m2, 2J, 2M]`.
    pub fn from_twice(t: [i64; 6]) -> Self {
        let [j1, j2, m1, m2, j, m] = t.map(HalfInt::from_twice);
        CouplingSpec {
            j1,
            j2,
            m1,
            m2,
            j,
            m,
        }
    }
}

impl fmt::Display for CouplingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "C(j1={}, j2={}, m1={}, m2={}, J={}, M={})",
            self.j1, self.j2, self.m1, self.m2, self.j, self.m
        )
    }
}

/// Arguments of the 3j symbol `(j1 j2 j3; m1 m2 m3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThreeJSpec {
    pub j1: HalfInt,
    pub j2: HalfInt,
    pub j3: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub m3: HalfInt,
}

impl ThreeJSpec {
    /// From doubled values `[2j1, 2j2, 2j3, 2m1, 2m2, 2m3]`.
    pub fn from_twice(t: [i64; 6]) -> Self {
        let [j1, j2, j3, m1, m2, m3] = t.map(HalfInt::from_twice);
        ThreeJSpec {
            j1,
            j2,
            j3,
            m1,
            m2,
            m3,
        }
    }

    pub fn columns(&self) -> [(HalfInt, HalfInt); 3] {
        [(self.j1, self.m1), (self.j2, self.m2), (self.j3, self.m3)]
    }

    pub fn from_columns(c: [(HalfInt, HalfInt); 3]) -> Self {
        ThreeJSpec {
            j1: c[0].0,
            j2: c[1].0,
            j3: c[2].0,
            m1: c[0].1,
            m2: c[1].1,
            m3: c[2].1,
        }
    }
}

impl fmt::Display for ThreeJSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} {} {}; {} {} {})",
            self.j1, self.j2, self.j3, self.m1, self.m2, self.m3
        )
    }
}

/// Why well-formed arguments still give a vanishing coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectionReason {
    /// `M ≠ m1 + m2`
    ProjectionSum,
    /// `j1 + j2 + J` is not an integer
    NonIntegerSum,
    /// `J` outside `|j1 - j2| ..= j1 + j2`
    Triangle,
}

impl fmt::Display for SelectionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelectionReason::ProjectionSum => "M != m1 + m2",
            SelectionReason::NonIntegerSum => "j1 + j2 + J is not an integer",
            SelectionReason::Triangle => "J violates the triangle rule",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    WellFormed,
    MalformedArguments(Malformed),
    SelectionZero(SelectionReason),
}

/// Checks one `(j, m)` pair; `None` when it is well formed.
pub(crate) fn check_pair(
    j: HalfInt,
    m: HalfInt,
    j_name: &'static str,
    m_name: &'static str,
) -> Option<Malformed> {
    if j.twice() < 0 {
        Some(Malformed::NegativeJ { name: j_name })
    } else if !(j + m).is_integer() {
        Some(Malformed::Parity { name: m_name })
    } else if m.abs() > j {
        Some(Malformed::ProjectionOutOfRange { name: m_name })
    } else {
        None
    }
}

pub(crate) fn triangle(a: HalfInt, b: HalfInt, c: HalfInt) -> bool {
    (a - b).abs() <= c && c <= a + b && (a + b + c).is_integer()
}

/// Classifies a coupling as well formed, malformed (a caller bug) or
/// vanishing by a selection rule.
pub fn validate(spec: &CouplingSpec) -> Validity {
    let pairs = [
        (spec.j1, spec.m1, "j1", "m1"),
        (spec.j2, spec.m2, "j2", "m2"),
        (spec.j, spec.m, "J", "M"),
    ];
    for (j, m, jn, mn) in pairs {
        if let Some(bad) = check_pair(j, m, jn, mn) {
            return Validity::MalformedArguments(bad);
        }
    }
    // with M = m1 + m2 and valid parities, j1 + j2 + J is always an
    // integer, so that rule has to be tested first to ever fire
    if !(spec.j1 + spec.j2 + spec.j).is_integer() {
        Validity::SelectionZero(SelectionReason::NonIntegerSum)
    } else if spec.m != spec.m1 + spec.m2 {
        Validity::SelectionZero(SelectionReason::ProjectionSum)
    } else if !triangle(spec.j1, spec.j2, spec.j) {
        Validity::SelectionZero(SelectionReason::Triangle)
    } else {
        Validity::WellFormed
    }
}

/// `Ok(true)` when the coefficient may be nonzero, `Ok(false)` when a
/// selection rule forces zero.
pub(crate) fn admissible(spec: &CouplingSpec) -> Result<bool, Error> {
    match validate(spec) {
        Validity::WellFormed => Ok(true),
        Validity::SelectionZero(_) => Ok(false),
        Validity::MalformedArguments(m) => Err(Error::Malformed(m)),
    }
}
