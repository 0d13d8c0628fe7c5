//! One coefficient by every route.
//!
//! cargo run --example single_coefficient -- 2 1 0 0 3 0

use clebsch::cli::coefficient_by_route;
use clebsch::table::Route;
use clebsch::{to_decimal, validate, CouplingSpec, HalfInt, Validity};

fn main() -> clebsch::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let values: Vec<HalfInt> = if args.is_empty() {
        ["2", "1", "0", "0", "3", "0"]
            .iter()
            .map(|s| s.parse())
            .collect::<Result<_, _>>()?
    } else {
        args.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
    };
    let [j1, j2, m1, m2, j, m] = values[..] else {
        eprintln!("usage: single_coefficient j1 j2 m1 m2 J M");
        std::process::exit(1);
    };
    let spec = CouplingSpec::new(j1, j2, m1, m2, j, m);
    println!("{spec}: {:?}", validate(&spec));
    if let Validity::MalformedArguments(bad) = validate(&spec) {
        eprintln!("{bad}");
        std::process::exit(1);
    }
    for route in Route::ALL {
        let v = coefficient_by_route(&spec, route)?;
        println!("{:<17} {v} = {}", route.name(), to_decimal(&v, 5));
    }
    Ok(())
}
