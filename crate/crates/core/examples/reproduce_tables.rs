//! The 2 ⊗ 1 and 1 ⊗ 1 coefficient tables, printed in (J, M, m1) order.

use clebsch::cli::format::render_pretty;
use clebsch::numerics::h;
use clebsch::table::{build_full_table, Route};

fn main() -> clebsch::Result<()> {
    for (tj1, tj2) in [(4, 2), (2, 2)] {
        let table = build_full_table(h(tj1), h(tj2), Route::ClosedForm)?;
        println!(
            "j1 = {}, j2 = {}: {} coefficients",
            h(tj1),
            h(tj2),
            table.len()
        );
        print!("{}", render_pretty(&table));
        println!();
    }
    Ok(())
}
