//! One PASS/FAIL line per acceptance criterion, failing checks listed beneath.
//! Criteria 1-6 replay the fixtures; 7 runs the seeded invariant suites.

mod common;

use std::process::ExitCode;

use rigid_calc::verify::{self, TITLES};

fn main() -> ExitCode {
    let mut all_ok = true;
    for n in 1..=6u8 {
        let r = verify::criterion(n);
        let ok = r.passed();
        all_ok &= ok;
        println!(
            "{} {n}. {} ({} checks)",
            if ok { "PASS" } else { "FAIL" },
            r.title,
            r.checks.len()
        );
        for c in r.failures() {
            println!("     - {}: {}", c.name, c.detail);
        }
    }
    let suites = common::all_suites();
    let ok = suites.iter().all(|s| s.passed());
    all_ok &= ok;
    let cases: usize = suites.iter().map(|s| s.cases).sum();
    println!(
        "{} 7. {} ({} suites, {cases} cases)",
        if ok { "PASS" } else { "FAIL" },
        TITLES[6],
        suites.len()
    );
    for s in suites.iter().filter(|s| !s.passed()) {
        println!(
            "     - {}: {} of {} failed; first {}",
            s.name,
            s.failures.len(),
            s.cases,
            s.failures[0]
        );
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
