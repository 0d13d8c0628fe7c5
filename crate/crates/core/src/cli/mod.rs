//! Command-line front end: single coefficients, tables, verification runs
//! and route benchmarks.
//!
//! Exit codes are `0` on success, `1` on input errors and `2` when routes
//! disagree or a verification check fails.

pub mod bench;
pub mod format;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::formulas::{validate, CouplingSpec, Validity};
use crate::numerics::{to_decimal, HalfInt, RadicalSum};
use crate::table::{build_full_table, multiplet_states, Route, TABLE_PLACES};
use crate::verify::Check;

pub use format::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DISAGREE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "clebsch", version, about = "Exact Clebsch-Gordan coefficients")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a single coefficient C(j1, j2, m1, m2, J, M)
    Coeff(CoeffArgs),
    /// Emit every nonzero coefficient of j1 ⊗ j2
    Table(TableArgs),
    /// Run the exact cross-route checks
    Verify(VerifyArgs),
    /// Time full-table generation per route
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormulaChoice {
    Alternative,
    Racah,
    Ladder,
    Beta,
    /// Closed form, Racah and ladder side by side
    Both,
}

impl FormulaChoice {
    fn routes(self) -> Vec<Route> {
        match self {
            FormulaChoice::Alternative => vec![Route::ClosedForm],
            FormulaChoice::Racah => vec![Route::Racah],
            FormulaChoice::Ladder => vec![Route::LadderIterative],
            FormulaChoice::Beta => vec![Route::BetaClosedForm],
            FormulaChoice::Both => vec![Route::ClosedForm, Route::Racah, Route::LadderIterative],
        }
    }
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub j1: HalfInt,
    #[arg(long, allow_hyphen_values = true)]
    pub j2: HalfInt,
    #[arg(long, allow_hyphen_values = true)]
    pub m1: HalfInt,
    #[arg(long, allow_hyphen_values = true)]
    pub m2: HalfInt,
    #[arg(long = "J", allow_hyphen_values = true)]
    pub j: HalfInt,
    #[arg(long = "M", allow_hyphen_values = true)]
    pub m: HalfInt,
    #[arg(long, value_enum, default_value = "alternative")]
    pub formula: FormulaChoice,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub j1: HalfInt,
    #[arg(long, allow_hyphen_values = true)]
    pub j2: HalfInt,
    /// Only emit rows with this total J
    #[arg(long = "J", allow_hyphen_values = true)]
    pub j: Option<HalfInt>,
    #[arg(long, value_enum, default_value = "alternative")]
    pub formula: FormulaChoice,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "max-2j", default_value_t = 4)]
    pub max_twice_j: i64,
    /// Comma-separated subset of agreement, unitarity, collapse, threej,
    /// condon-shortley, ladder
    #[arg(long, value_delimiter = ',')]
    pub checks: Vec<Check>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long = "max-2j", default_value_t = 8)]
    pub max_twice_j: i64,
    #[arg(long, default_value_t = 1)]
    pub reps: u32,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
}

/// A single coefficient by one route.
pub fn coefficient_by_route(spec: &CouplingSpec, route: Route) -> Result<RadicalSum> {
    match route {
        Route::ClosedForm => crate::formulas::cg_alternative(spec),
        Route::Racah => crate::formulas::cg_racah(spec),
        Route::LadderIterative | Route::BetaClosedForm => {
            if !crate::formulas::spec::admissible(spec)? {
                return Ok(RadicalSum::zero());
            }
            let states = multiplet_states(spec.j1, spec.j2, spec.j, route)?;
            let s = (spec.j - spec.m).twice() / 2;
            Ok(states[s as usize].component(spec.m1, spec.m2))
        }
    }
}

fn cmd_coeff(args: &CoeffArgs, out: &mut dyn Write) -> Result<i32> {
    let spec = CouplingSpec::new(args.j1, args.j2, args.m1, args.m2, args.j, args.m);
    if let Validity::MalformedArguments(bad) = validate(&spec) {
        return Err(Error::Malformed(bad));
    }
    let routes = args.formula.routes();
    let values = routes
        .iter()
        .map(|&r| coefficient_by_route(&spec, r))
        .collect::<Result<Vec<_>>>()?;
    let line = |v: &RadicalSum| format!("{v} = {}", to_decimal(v, TABLE_PLACES));
    if routes.len() == 1 {
        writeln!(out, "{}", line(&values[0]))?;
        return Ok(EXIT_OK);
    }
    for (route, v) in routes.iter().zip(&values) {
        writeln!(out, "{:<17} {}", format!("{route}:"), line(v))?;
    }
    if values.windows(2).all(|w| w[0] == w[1]) {
        writeln!(out, "AGREE")?;
        Ok(EXIT_OK)
    } else {
        writeln!(out, "DISAGREE")?;
        Ok(EXIT_DISAGREE)
    }
}

fn cmd_table(args: &TableArgs, out: &mut dyn Write) -> Result<i32> {
    let route = match args.formula {
        FormulaChoice::Both => Route::ClosedForm,
        f => f.routes()[0],
    };
    let mut records = build_full_table(args.j1, args.j2, route)?;
    if let Some(j) = args.j {
        records.retain(|r| r.j == j);
    }
    let text = format::render(&records, args.format)?;
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    if args.max_twice_j < 0 {
        return Err(Error::Domain("--max-2j must be non-negative".into()));
    }
    let checks = if args.checks.is_empty() {
        Check::ALL.to_vec()
    } else {
        args.checks.clone()
    };
    let reports: Vec<_> = checks.iter().map(|c| c.run(args.max_twice_j)).collect();
    let all = reports.iter().all(|r| r.passed);
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?,
        _ => {
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            writeln!(out, "{}", if all { "ALL PASS" } else { "FAILED" })?;
        }
    }
    Ok(if all { EXIT_OK } else { EXIT_DISAGREE })
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32> {
    if args.max_twice_j < 0 {
        return Err(Error::Domain("--max-2j must be non-negative".into()));
    }
    let report = bench::run_bench(args.max_twice_j, args.reps)?;
    match args.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
        _ => out.write_all(bench::render_pretty(&report).as_bytes())?,
    }
    Ok(if report.all_identical() {
        EXIT_OK
    } else {
        EXIT_DISAGREE
    })
}

pub fn execute(config: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    match &config.command {
        Command::Coeff(a) => cmd_coeff(a, out),
        Command::Table(a) => cmd_table(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Bench(a) => cmd_bench(a, out),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_INPUT;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(&config, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
