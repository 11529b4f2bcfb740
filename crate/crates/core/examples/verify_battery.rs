//! Runs the fixture-replay battery for one case and prints each check.

use rigid_calc::verify::{run, Group};

fn main() {
    let group = std::env::args().nth(1).unwrap_or_else(|| "E2".into());
    let group = Group::parse(&group).expect("group: all, operators, monodromy, hodge, E1..E4");
    for r in run(group) {
        println!(
            "{} {}. {}",
            if r.passed() { "PASS" } else { "FAIL" },
            r.criterion,
            r.title
        );
        for c in &r.checks {
            println!(
                "    [{}] {}: {}",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.detail
            );
        }
    }
}
