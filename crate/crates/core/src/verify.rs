//! Exact cross-route certification.
//!
//! Every check sweeps a range of `(j1, j2)` cells, compares exact values and
//! reports the first counterexample in cell order. Cells are evaluated in
//! parallel; results are merged in cell order, never completion order.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::formulas::{cg_racah, wigner3j, AlternativeFormula, CouplingSpec, ThreeJSpec};
use crate::ladder::{highest_weight_state, lowering_norm, BetaExpansion, StateVector};
use crate::numerics::{h, HalfInt, RadicalSum};
use crate::table::{coefficient_map, multiplet_states, total_momenta, CoefficientMap, Route};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Agreement,
    Unitarity,
    Collapse,
    #[serde(rename = "threej")]
    ThreeJ,
    CondonShortley,
    Ladder,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Agreement,
        Check::Unitarity,
        Check::Collapse,
        Check::ThreeJ,
        Check::CondonShortley,
        Check::Ladder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Agreement => "agreement",
            Check::Unitarity => "unitarity",
            Check::Collapse => "collapse",
            Check::ThreeJ => "threej",
            Check::CondonShortley => "condon-shortley",
            Check::Ladder => "ladder",
        }
    }

    pub fn run(self, max_twice_j: i64) -> VerificationReport {
        match self {
            Check::Agreement => check_formula_agreement(max_twice_j),
            Check::Unitarity => check_unitarity_sweep(max_twice_j),
            Check::Collapse => check_radical_collapse(max_twice_j),
            Check::ThreeJ => check_threej_symmetries(max_twice_j),
            Check::CondonShortley => check_condon_shortley(max_twice_j),
            Check::Ladder => check_ladder(max_twice_j),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse {
                what: "check",
                input: s.to_string(),
            })
    }
}

/// The failing case and the exact values that disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub case: String,
    pub values: Vec<(String, String)>,
}

impl Counterexample {
    fn new(case: impl Into<String>) -> Self {
        Counterexample {
            case: case.into(),
            values: Vec::new(),
        }
    }

    fn with(mut self, label: impl Into<String>, value: impl ToString) -> Self {
        self.values.push((label.into(), value.to_string()));
        self
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.case)?;
        for (label, value) in &self.values {
            write!(f, "\n    {label}: {value}")?;
        }
        Ok(())
    }
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub max_twice_j: i64,
    pub routes: Vec<Route>,
    /// Number of cells (or cases) examined.
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<Counterexample>,
    #[serde(rename = "elapsed_seconds", serialize_with = "seconds")]
    pub elapsed: Duration,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {:<16} max 2j={:<3} cases={:<7} {:.3}s",
            self.check,
            self.max_twice_j,
            self.cases,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}

type CellOutcome = std::result::Result<(), Counterexample>;

fn from_error(case: String, e: Error) -> Counterexample {
    Counterexample::new(case).with("error", e)
}

/// All `(2j1, 2j2)` with both in `0..=max`, in row-major order.
fn cells(max_twice_j: i64) -> Vec<(i64, i64)> {
    let max = max_twice_j.max(-1);
    (0..=max)
        .flat_map(|a| (0..=max).map(move |b| (a, b)))
        .collect()
}

fn run_cells<T: Sync>(
    check: &str,
    max_twice_j: i64,
    routes: Vec<Route>,
    items: &[T],
    f: impl Fn(&T) -> CellOutcome + Sync,
) -> VerificationReport {
    let start = Instant::now();
    let outcomes: Vec<CellOutcome> = items.par_iter().map(&f).collect();
    let counterexample = outcomes.into_iter().find_map(|o| o.err());
    VerificationReport {
        check: check.to_string(),
        max_twice_j,
        routes,
        cases: items.len(),
        passed: counterexample.is_none(),
        counterexample,
        elapsed: start.elapsed(),
    }
}

fn first_difference(a: &CoefficientMap, b: &CoefficientMap) -> Option<(HalfInt, HalfInt, HalfInt)> {
    let zero = RadicalSum::zero();
    a.keys()
        .chain(b.keys())
        .filter(|k| a.get(k).unwrap_or(&zero) != b.get(k).unwrap_or(&zero))
        .min()
        .copied()
}

fn agreement_cell(tj1: i64, tj2: i64, routes: &[Route]) -> CellOutcome {
    let (j1, j2) = (h(tj1), h(tj2));
    let cell = format!("j1={j1}, j2={j2}");
    let maps = routes
        .iter()
        .map(|&r| coefficient_map(j1, j2, r))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| from_error(cell.clone(), e))?;
    for map in maps.iter().skip(1) {
        if let Some((j, m, m1)) = first_difference(&maps[0], map) {
            let spec = CouplingSpec::new(j1, j2, m1, m - m1, j, m);
            let mut ce = Counterexample::new(spec.to_string());
            for (r, mp) in routes.iter().zip(&maps) {
                let v = mp.get(&(j, m, m1)).cloned().unwrap_or_default();
                ce = ce.with(r.name(), v);
            }
            return Err(ce);
        }
    }
    Ok(())
}

/// Closed form, Racah and iterative lowering agree exactly on every
/// coefficient with `2j1, 2j2 ≤ max_twice_j`.
pub fn check_formula_agreement(max_twice_j: i64) -> VerificationReport {
    check_route_agreement(
        max_twice_j,
        &[Route::ClosedForm, Route::Racah, Route::LadderIterative],
    )
}

/// Exact agreement among an arbitrary set of routes.
pub fn check_route_agreement(max_twice_j: i64, routes: &[Route]) -> VerificationReport {
    run_cells(
        "agreement",
        max_twice_j,
        routes.to_vec(),
        &cells(max_twice_j),
        |&(a, b)| agreement_cell(a, b, routes),
    )
}

fn expect_delta(
    value: RadicalSum,
    expected_one: bool,
    case: impl FnOnce() -> String,
) -> CellOutcome {
    let expected = if expected_one {
        RadicalSum::one()
    } else {
        RadicalSum::zero()
    };
    if value == expected {
        Ok(())
    } else {
        Err(Counterexample::new(case())
            .with("inner product", value)
            .with("expected", expected))
    }
}

/// Row orthonormality and column completeness of the closed-form
/// coefficient matrix of `j1 ⊗ j2`.
pub fn check_unitarity(j1: HalfInt, j2: HalfInt) -> VerificationReport {
    let items = [(j1.twice(), j2.twice())];
    let max = j1.twice().max(j2.twice());
    run_cells(
        "unitarity",
        max,
        vec![Route::ClosedForm],
        &items,
        |&(a, b)| unitarity_cell(h(a), h(b)),
    )
}

pub fn check_unitarity_sweep(max_twice_j: i64) -> VerificationReport {
    run_cells(
        "unitarity",
        max_twice_j,
        vec![Route::ClosedForm],
        &cells(max_twice_j),
        |&(a, b)| unitarity_cell(h(a), h(b)),
    )
}

fn unitarity_cell(j1: HalfInt, j2: HalfInt) -> CellOutcome {
    let cell = format!("j1={j1}, j2={j2}");
    let map =
        coefficient_map(j1, j2, Route::ClosedForm).map_err(|e| from_error(cell.clone(), e))?;
    let zero = RadicalSum::zero();
    let get = |j: HalfInt, m: HalfInt, m1: HalfInt| map.get(&(j, m, m1)).unwrap_or(&zero);
    let js: Vec<HalfInt> = total_momenta(j1, j2).collect();
    let max_m = j1 + j2;
    for m in max_m.projections() {
        let m1s: Vec<HalfInt> = j1
            .projections()
            .filter(|&m1| (m - m1).abs() <= j2)
            .collect();
        let level: Vec<HalfInt> = js.iter().copied().filter(|j| m.abs() <= *j).collect();
        // rows: Σ_{m1} C(J) C(J') = δ(J, J')
        for (a, &ja) in level.iter().enumerate() {
            for &jb in &level[a..] {
                let dot: RadicalSum = m1s.iter().map(|&m1| get(ja, m, m1) * get(jb, m, m1)).sum();
                expect_delta(dot, ja == jb, || {
                    format!("{cell}, M={m}: rows J={ja}, J'={jb}")
                })?;
            }
        }
        // columns: Σ_J C(m1) C(m1') = δ(m1, m1')
        for (a, &ma) in m1s.iter().enumerate() {
            for &mb in &m1s[a..] {
                let dot: RadicalSum = level.iter().map(|&j| get(j, m, ma) * get(j, m, mb)).sum();
                expect_delta(dot, ma == mb, || {
                    format!("{cell}, M={m}: columns m1={ma}, m1'={mb}")
                })?;
            }
        }
    }
    Ok(())
}

/// Every closed-form evaluation sums to at most one radical term.
pub fn check_radical_collapse(max_twice_j: i64) -> VerificationReport {
    run_cells(
        "collapse",
        max_twice_j,
        vec![Route::ClosedForm],
        &cells(max_twice_j),
        |&(a, b)| {
            let (j1, j2) = (h(a), h(b));
            for j in total_momenta(j1, j2) {
                let case = |m1: HalfInt, m: HalfInt| {
                    CouplingSpec::new(j1, j2, m1, m - m1, j, m).to_string()
                };
                let formula = AlternativeFormula::new(j1, j2, j)
                    .map_err(|e| from_error(format!("j1={j1}, j2={j2}, J={j}"), e))?;
                for m in j.projections() {
                    for m1 in j1.projections().filter(|&m1| (m - m1).abs() <= j2) {
                        let v = formula
                            .coefficient(m1, m)
                            .map_err(|e| from_error(case(m1, m), e))?;
                        if v.term_count() > 1 {
                            return Err(Counterexample::new(case(m1, m)).with("closed-form", v));
                        }
                    }
                }
            }
            Ok(())
        },
    )
}

fn parity_sign(sum: HalfInt, v: &RadicalSum) -> Option<RadicalSum> {
    if v.is_zero() {
        return Some(RadicalSum::zero());
    }
    let n = sum.to_integer()?;
    Some(if n % 2 == 0 { v.clone() } else { -v })
}

fn threej_triple(tj: [i64; 3]) -> CellOutcome {
    let [a, b, c] = tj.map(h);
    for m1 in a.projections() {
        for m2 in b.projections() {
            let m3 = -(m1 + m2);
            if m3.abs() > c || !(c + m3).is_integer() {
                continue;
            }
            let base = ThreeJSpec::from_columns([(a, m1), (b, m2), (c, m3)]);
            let case = format!("3j{base}");
            let v = wigner3j(&base).map_err(|e| from_error(case.clone(), e))?;
            let cols = base.columns();
            let signed = parity_sign(a + b + c, &v).ok_or_else(|| {
                Counterexample::new(case.clone())
                    .with("nonzero value with non-integer j1+j2+j3", &v)
            })?;
            let variants = [
                ([cols[1], cols[2], cols[0]], false),
                ([cols[2], cols[0], cols[1]], false),
                ([cols[1], cols[0], cols[2]], true),
                ([cols[0], cols[2], cols[1]], true),
                ([cols[2], cols[1], cols[0]], true),
                (cols.map(|(j, m)| (j, -m)), true),
            ];
            for (perm, odd) in variants {
                let spec = ThreeJSpec::from_columns(perm);
                let w = wigner3j(&spec).map_err(|e| from_error(format!("3j{spec}"), e))?;
                let expected = if odd { &signed } else { &v };
                if &w != expected {
                    return Err(Counterexample::new(case)
                        .with(format!("3j{spec}"), w)
                        .with("expected", expected));
                }
            }
        }
    }
    Ok(())
}

/// Permutation and reflection symmetries of the 3j symbol over every triple
/// with `2j ≤ max_twice_j`.
pub fn check_threej_symmetries(max_twice_j: i64) -> VerificationReport {
    let max = max_twice_j.max(-1);
    let triples: Vec<[i64; 3]> = (0..=max)
        .flat_map(|a| (0..=max).flat_map(move |b| (0..=max).map(move |c| [a, b, c])))
        .collect();
    run_cells("threej", max_twice_j, vec![Route::Racah], &triples, |&t| {
        threej_triple(t)
    })
}

/// `C(j1, j2, j1, J - j1, J, J) > 0` for every route.
pub fn check_condon_shortley(max_twice_j: i64) -> VerificationReport {
    let routes = Route::ALL.to_vec();
    run_cells(
        "condon-shortley",
        max_twice_j,
        routes.clone(),
        &cells(max_twice_j),
        |&(a, b)| {
            let (j1, j2) = (h(a), h(b));
            for j in total_momenta(j1, j2) {
                let spec = CouplingSpec::new(j1, j2, j1, j - j1, j, j);
                let err = |e| from_error(spec.to_string(), e);
                let values = [
                    AlternativeFormula::new(j1, j2, j)
                        .and_then(|f| f.coefficient(j1, j))
                        .map_err(err)?,
                    cg_racah(&spec).map_err(err)?,
                    highest_weight_state(j1, j2, j)
                        .map_err(err)?
                        .component(j1, j - j1),
                    BetaExpansion::new(j1, j2, (a + b - j.twice()) / 2)
                        .and_then(|e| e.state(0))
                        .map_err(err)?
                        .component(j1, j - j1),
                ];
                for (route, v) in routes.iter().zip(&values) {
                    if v.signum() != Some(1) {
                        return Err(Counterexample::new(spec.to_string()).with(route.name(), v));
                    }
                }
            }
            Ok(())
        },
    )
}

/// Raising annihilates every highest-weight state; lowering maps each state
/// of every route onto `√((J+M)(J-M+1))` times its successor; every state is
/// normalized and lives in one M level.
pub fn check_ladder(max_twice_j: i64) -> VerificationReport {
    let routes = Route::ALL.to_vec();
    run_cells(
        "ladder",
        max_twice_j,
        routes.clone(),
        &cells(max_twice_j),
        |&(a, b)| {
            let (j1, j2) = (h(a), h(b));
            for j in total_momenta(j1, j2) {
                let cell = format!("j1={j1}, j2={j2}, J={j}");
                let hw =
                    highest_weight_state(j1, j2, j).map_err(|e| from_error(cell.clone(), e))?;
                let raised = hw.apply_jplus();
                if !raised.is_zero() {
                    return Err(
                        Counterexample::new(format!("{cell}: J+|J,J>")).with("result", raised)
                    );
                }
                for &route in &routes {
                    let states = multiplet_states(j1, j2, j, route)
                        .map_err(|e| from_error(cell.clone(), e))?;
                    for (s, state) in states.iter().enumerate() {
                        let m = j - HalfInt::from_int(s as i64);
                        let case = || format!("{cell}, M={m}, route {route}");
                        if state.norm_squared() != RadicalSum::one()
                            || state.projection() != Some(m)
                        {
                            return Err(Counterexample::new(case())
                                .with("state", state)
                                .with("norm squared", state.norm_squared()));
                        }
                        let lowered = state.apply_jminus();
                        let expected = match states.get(s + 1) {
                            Some(next) => next.scale(&lowering_norm(j, m)),
                            None => StateVector::zero(j1, j2),
                        };
                        if lowered != expected {
                            return Err(Counterexample::new(case())
                                .with("J-|J,M>", lowered)
                                .with("expected", expected));
                        }
                    }
                }
            }
            Ok(())
        },
    )
}
