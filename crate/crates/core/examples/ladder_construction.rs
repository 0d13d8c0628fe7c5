//! Builds every multiplet of 3/2 ⊗ 1 from its highest-weight state and
//! checks the ladder relations exactly.

use clebsch::ladder::{highest_weight_state, lower_normalized, lowering_norm};
use clebsch::numerics::h;
use clebsch::table::total_momenta;
use clebsch::RadicalSum;

fn main() -> clebsch::Result<()> {
    let (j1, j2) = (h(3), h(2));
    for j in total_momenta(j1, j2).collect::<Vec<_>>().into_iter().rev() {
        let mut state = highest_weight_state(j1, j2, j)?;
        println!("|{j}, {j}> = {state}");
        assert!(state.apply_jplus().is_zero());
        for m in j.projections_desc().skip(1) {
            let next = lower_normalized(&state, j)?;
            assert_eq!(
                state.apply_jminus(),
                next.scale(&lowering_norm(j, m + h(2)))
            );
            assert_eq!(next.norm_squared(), RadicalSum::one());
            println!("|{j}, {m}> = {next}");
            state = next;
        }
        println!();
    }
    Ok(())
}
