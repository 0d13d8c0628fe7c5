//! Wall-clock comparison of full-table generation across routes.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::Result;
use crate::numerics::{h, stats};
use crate::table::{coefficient_map, CoefficientMap, Route};

pub const BENCH_ROUTES: [Route; 3] = [Route::ClosedForm, Route::Racah, Route::LadderIterative];

#[derive(Debug, Clone, Serialize)]
pub struct Timing {
    /// Mean wall time of one sweep.
    pub wall_seconds: f64,
    pub coefficients_per_second: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RouteBench {
    pub route: Route,
    pub reps: u32,
    pub coefficients: usize,
    pub peak_bits: u64,
    pub identical_to_closed_form: bool,
    pub timing: Timing,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub max_twice_j: i64,
    pub routes: Vec<RouteBench>,
}

impl BenchReport {
    pub fn all_identical(&self) -> bool {
        self.routes.iter().all(|r| r.identical_to_closed_form)
    }
}

fn sweep(max_twice_j: i64, route: Route) -> Result<Vec<CoefficientMap>> {
    let mut maps = Vec::new();
    for a in 0..=max_twice_j {
        for b in 0..=max_twice_j {
            maps.push(coefficient_map(h(a), h(b), route)?);
        }
    }
    Ok(maps)
}

/// Times `reps` full sweeps over every `(j1, j2)` with `2j ≤ max_twice_j`
/// for each route, checking each route's tables against the closed form.
pub fn run_bench(max_twice_j: i64, reps: u32) -> Result<BenchReport> {
    let reps = reps.max(1);
    let mut reference: Option<Vec<CoefficientMap>> = None;
    let mut routes = Vec::new();
    for route in BENCH_ROUTES {
        stats::take_peak_bits();
        let mut total = Duration::ZERO;
        let mut last = Vec::new();
        for _ in 0..reps {
            let start = Instant::now();
            last = sweep(max_twice_j, route)?;
            total += start.elapsed();
        }
        let peak_bits = stats::take_peak_bits().max(
            last.iter()
                .flat_map(|m| m.values())
                .map(|v| v.max_bits())
                .max()
                .unwrap_or(0),
        );
        let coefficients: usize = last.iter().map(|m| m.len()).sum();
        let identical = match &reference {
            None => true,
            Some(r) => *r == last,
        };
        if reference.is_none() {
            reference = Some(last);
        }
        let wall = (total.as_secs_f64() / reps as f64).max(f64::MIN_POSITIVE);
        routes.push(RouteBench {
            route,
            reps,
            coefficients,
            peak_bits,
            identical_to_closed_form: identical,
            timing: Timing {
                wall_seconds: wall,
                coefficients_per_second: coefficients as f64 / wall,
            },
        });
    }
    Ok(BenchReport {
        max_twice_j,
        routes,
    })
}

pub fn render_pretty(report: &BenchReport) -> String {
    let mut out = format!(
        "{:<18} {:>6} {:>12} {:>10} {:>10} {:>14} {:>12}\n",
        "route", "reps", "coefficients", "peak bits", "identical", "wall s", "coeff/s"
    );
    for r in &report.routes {
        out.push_str(&format!(
            "{:<18} {:>6} {:>12} {:>10} {:>10} {:>14.6} {:>12.0}\n",
            r.route.name(),
            r.reps,
            r.coefficients,
            r.peak_bits,
            if r.identical_to_closed_form {
                "yes"
            } else {
                "NO"
            },
            r.timing.wall_seconds,
            r.timing.coefficients_per_second
        ));
    }
    out
}
