//! The embedded fixtures: listing, typed lookup and self-validation.

use rigid_calc::fixtures::{self, all_fixtures, validate_all};

fn main() -> rigid_calc::Result<()> {
    let mut kinds = std::collections::BTreeMap::new();
    for (_, kind, _) in fixtures::list_fixtures() {
        *kinds.entry(kind).or_insert(0) += 1;
    }
    println!("{} fixtures: {kinds:?}", all_fixtures().len());

    let f = fixtures::get_fixture("tuple.P4")?;
    println!("\n{} ({}): {}", f.id, f.kind, f.anchor);
    println!("{}", fixtures::tuple("tuple.P4")?);

    let report = validate_all(all_fixtures());
    println!(
        "validated {} fixtures, {} failures",
        report.checked,
        report.failures.len()
    );
    for (id, msg) in &report.failures {
        println!("  {id}: {msg}");
    }
    Ok(())
}
