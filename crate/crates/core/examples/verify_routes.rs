//! Runs every exact cross-route check up to a bound, then times the routes.
//!
//! cargo run --release --example verify_routes -- 8

use clebsch::cli::bench;
use clebsch::verify::Check;

fn main() -> clebsch::Result<()> {
    let max: i64 = std::env::args()
        .nth(1)
        .map_or(Ok(6), |s| s.parse())
        .unwrap_or(6);
    let mut ok = true;
    for check in Check::ALL {
        let report = check.run(max);
        ok &= report.passed;
        println!("{report}");
    }
    let report = bench::run_bench(max, 1)?;
    print!("{}", bench::render_pretty(&report));
    if !ok || !report.all_identical() {
        std::process::exit(2);
    }
    Ok(())
}
