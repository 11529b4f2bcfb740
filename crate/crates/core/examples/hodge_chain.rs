//! Hodge data through the whole chain: parabolic rigidity for δ, pullback along x ↦ x²,
//! middle convolution, and irregular Hodge numbers by stationary phase.

use rigid_calc::algebra::Symbol;
use rigid_calc::fixtures;
use rigid_calc::hodge::{
    derive_counts, mc_profile, parabolic_rigidity_solve, pullback_profile, stationary_phase_table,
    tables_equal_up_to_shift,
};
use rigid_calc::monodromy::ExponentClass;

fn main() -> rigid_calc::Result<()> {
    let w = fixtures::witness("case.E3.b_gt_a")?;
    let profile = fixtures::profile("profile.P13.b_gt_a")?;
    let counts = derive_counts(profile)?;
    println!(
        "h = {:?}, ω = {:?}, δ = {:?}",
        counts.h,
        counts.omega,
        parabolic_rigidity_solve(&counts.h, &counts.omega)?
    );

    let sq = pullback_profile(profile, 2, &fixtures::preimages("P13"), Some(w))?;
    let sq_counts = derive_counts(&sq)?;
    println!(
        "after [2]^*: δ = {:?}, ω = {:?}",
        sq.delta.as_ref().unwrap(),
        sq_counts.omega
    );

    let mc = mc_profile(&sq, &ExponentClass::symbol(Symbol::Mu))?;
    println!("after MC_mu:\n{mc}");

    let shift = rigid_calc::algebra::sym::mu().evaluate(w)?;
    let table = stationary_phase_table(&mc, &shift, Some(w))?;
    println!("irregular Hodge numbers {table}");
    let printed = fixtures::irregular_table("irregular.E3.b_gt_a")?.evaluate(w)?;
    println!(
        "printed table agrees up to shift {:?}",
        tables_equal_up_to_shift(&table, &printed).map(|s| s.to_string())
    );
    Ok(())
}
