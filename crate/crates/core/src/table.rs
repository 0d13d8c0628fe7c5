//! Full coefficient tables for a pair `(j1, j2)`, by any route.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas::alternative::int;
use crate::formulas::{cg_racah, AlternativeFormula, CouplingSpec};
use crate::ladder::{highest_weight_state, lower_normalized, BetaExpansion, StateVector};
use crate::numerics::{to_decimal, HalfInt, RadicalSum};

/// Decimal places in rendered tables.
pub const TABLE_PLACES: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// The single-sum binomial closed form.
    ClosedForm,
    /// Racah's formula.
    Racah,
    /// Highest-weight states lowered one step at a time.
    LadderIterative,
    /// The `β(l, p)` state expansion.
    BetaClosedForm,
}

impl Route {
    pub const ALL: [Route; 4] = [
        Route::ClosedForm,
        Route::Racah,
        Route::LadderIterative,
        Route::BetaClosedForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::ClosedForm => "closed-form",
            Route::Racah => "racah",
            Route::LadderIterative => "ladder-iterative",
            Route::BetaClosedForm => "beta-closed-form",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed-form" | "alternative" | "closed" => Ok(Route::ClosedForm),
            "racah" => Ok(Route::Racah),
            "ladder-iterative" | "ladder" => Ok(Route::LadderIterative),
            "beta-closed-form" | "beta" => Ok(Route::BetaClosedForm),
            _ => Err(Error::Parse {
                what: "route",
                input: s.to_string(),
            }),
        }
    }
}

/// One row of a coefficient table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoefficientRecord {
    #[serde(rename = "J")]
    pub j: HalfInt,
    #[serde(rename = "M")]
    pub m: HalfInt,
    pub m1: HalfInt,
    pub m2: HalfInt,
    pub exact: RadicalSum,
    pub value: String,
}

impl CoefficientRecord {
    pub fn new(j: HalfInt, m: HalfInt, m1: HalfInt, m2: HalfInt, exact: RadicalSum) -> Self {
        let value = to_decimal(&exact, TABLE_PLACES);
        CoefficientRecord {
            j,
            m,
            m1,
            m2,
            exact,
            value,
        }
    }
}

/// Admissible total angular momenta `|j1 - j2| ..= j1 + j2`.
pub fn total_momenta(j1: HalfInt, j2: HalfInt) -> impl Iterator<Item = HalfInt> {
    let lo = (j1 - j2).abs().twice();
    let hi = (j1 + j2).twice();
    (lo..=hi).step_by(2).map(HalfInt::from_twice)
}

fn check_pair(j1: HalfInt, j2: HalfInt) -> Result<()> {
    if j1.twice() < 0 || j2.twice() < 0 {
        return Err(Error::Domain(format!(
            "j1={j1} and j2={j2} must be non-negative"
        )));
    }
    Ok(())
}

/// Builds `|J, M⟩` from single coefficients `C(m1, M - m1)`.
fn state_from_coefficients(
    j1: HalfInt,
    j2: HalfInt,
    m: HalfInt,
    mut coefficient: impl FnMut(HalfInt) -> Result<RadicalSum>,
) -> Result<StateVector> {
    let mut state = StateVector::zero(j1, j2);
    for m1 in j1.projections() {
        let m2 = m - m1;
        if m2.abs() > j2 {
            continue;
        }
        state.add_component(m1, m2, coefficient(m1)?)?;
    }
    Ok(state)
}

/// The states `|J, J⟩, |J, J-1⟩, …, |J, -J⟩` of one multiplet.
pub fn multiplet_states(
    j1: HalfInt,
    j2: HalfInt,
    j: HalfInt,
    route: Route,
) -> Result<Vec<StateVector>> {
    check_pair(j1, j2)?;
    let projections = j.projections_desc();
    match route {
        Route::ClosedForm => {
            let formula = AlternativeFormula::new(j1, j2, j)?;
            projections
                .map(|m| state_from_coefficients(j1, j2, m, |m1| formula.coefficient(m1, m)))
                .collect()
        }
        Route::Racah => projections
            .map(|m| {
                state_from_coefficients(j1, j2, m, |m1| {
                    cg_racah(&CouplingSpec::new(j1, j2, m1, m - m1, j, m))
                })
            })
            .collect(),
        Route::LadderIterative => {
            let mut states = Vec::with_capacity(j.twice() as usize + 1);
            let mut current = highest_weight_state(j1, j2, j)?;
            for _ in 0..j.twice() {
                let next = lower_normalized(&current, j)?;
                states.push(std::mem::replace(&mut current, next));
            }
            states.push(current);
            Ok(states)
        }
        Route::BetaClosedForm => {
            let expansion = BetaExpansion::new(j1, j2, int(j1 + j2 - j))?;
            (0..=j.twice()).map(|s| expansion.state(s)).collect()
        }
    }
}

/// `(J, M, m1) → C` for every nonzero coefficient, in table order.
pub type CoefficientMap = BTreeMap<(HalfInt, HalfInt, HalfInt), RadicalSum>;

pub fn coefficient_map(j1: HalfInt, j2: HalfInt, route: Route) -> Result<CoefficientMap> {
    let mut out = CoefficientMap::new();
    for j in total_momenta(j1, j2) {
        for (s, state) in multiplet_states(j1, j2, j, route)?.into_iter().enumerate() {
            let m = j - HalfInt::from_int(s as i64);
            for (idx, value) in state.components() {
                debug_assert_eq!(idx.total(), m);
                out.insert((j, m, idx.m1), value.clone());
            }
        }
    }
    Ok(out)
}

/// Every nonzero coefficient of `j1 ⊗ j2`, sorted by `(J, M, m1)`.
pub fn build_full_table(j1: HalfInt, j2: HalfInt, route: Route) -> Result<Vec<CoefficientRecord>> {
    let map = coefficient_map(j1, j2, route)?;
    Ok(map
        .into_iter()
        .map(|((j, m, m1), exact)| CoefficientRecord::new(j, m, m1, m - m1, exact))
        .collect())
}
