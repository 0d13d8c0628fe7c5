//! 3j symbols from Clebsch-Gordan coefficients, and their symmetries.

use clebsch::formulas::cg_to_wigner3j;
use clebsch::{cg_racah, to_decimal, wigner3j, CouplingSpec, ThreeJSpec};

fn main() -> clebsch::Result<()> {
    let spec = CouplingSpec::from_twice([2, 2, 2, 2, 4, 4]);
    let cg = cg_racah(&spec)?;
    let (three_j, value) = cg_to_wigner3j(&spec, &cg);
    println!("{spec} = {cg}");
    println!("3j{three_j} = {value} = {}", to_decimal(&value, 5));

    let base = ThreeJSpec::from_twice([4, 2, 2, 2, -2, 0]);
    let cols = base.columns();
    let cyclic = ThreeJSpec::from_columns([cols[1], cols[2], cols[0]]);
    let swapped = ThreeJSpec::from_columns([cols[1], cols[0], cols[2]]);
    let reflected = ThreeJSpec::from_columns(cols.map(|(j, m)| (j, -m)));
    for s in [base, cyclic, swapped, reflected] {
        println!("3j{s} = {}", wigner3j(&s)?);
    }
    Ok(())
}
