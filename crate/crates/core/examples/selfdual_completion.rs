//! Recovering Hodge numbers from a self-dual local type at ∞ and one known ν entry.

use rigid_calc::fixtures;
use rigid_calc::hodge::{selfdual_completion_solve, SelfDualConstraint};
use rigid_calc::monodromy::ExponentClass;

fn main() -> rigid_calc::Result<()> {
    let local = fixtures::local_type("local.Pprime.E4.inf")?;
    println!("local type at ∞: {local}");
    let (h, nu) = selfdual_completion_solve(
        7,
        3,
        Some(local),
        &[SelfDualConstraint::Nu {
            class: ExponentClass::half(),
            level: 2,
            p: 2,
            count: 1,
        }],
    )?;
    println!("h = {h:?}");
    for (c, l, p, n) in nu.expect("local type given").entries() {
        println!("  ν^{p}[{c}, level {l}] = {n}");
    }

    // without the ν entry there are several candidates
    match selfdual_completion_solve(7, 3, Some(local), &[]) {
        Ok((h, _)) => println!("unconstrained: {h:?}"),
        Err(e) => println!("unconstrained: {e}"),
    }
    Ok(())
}
