use std::process::Command;

use rigid_calc::cli;
use rigid_calc::verify::{self, Group};

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("rigid-calc").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn ft_quotient_matches_pullback() {
    let (code, out, _) = run(&[
        "op",
        "ft",
        "--fixture",
        "op.Pprime.E1E3",
        "--divide-theta-factorial",
        "6",
        "--match-pullback",
        "op.L.E1E3",
        "--k",
        "2",
    ]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("(c=-2, s=mu - 2)"), "{out}");
}

#[test]
fn ft_match_as_json() {
    let (code, out, _) = run(&[
        "op",
        "ft",
        "--fixture",
        "op.Pprime.E4",
        "--match-pullback",
        "op.L.E4",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["match"]["c"], "-128");
    assert_eq!(v["match"]["s"], "5/2");
}

#[test]
fn stationary_phase_table() {
    let (code, out, _) = run(&[
        "hodge",
        "phase",
        "--fixture",
        "profile.Pprime.E3.b_gt_a",
        "--witness",
        "case.E3.b_gt_a",
    ]);
    assert_eq!(code, 0);
    let rows: Vec<(String, String)> = out
        .lines()
        .skip(2)
        .map(|l| {
            let mut it = l.split_whitespace();
            (
                it.next().unwrap().to_string(),
                it.next().unwrap().to_string(),
            )
        })
        .collect();
    // b = 4/5: jumps 2b, 2(1-b)+1 and 1, each over consecutive Hodge indices
    let want = [
        ("1", "1"),
        ("7/5", "1"),
        ("8/5", "1"),
        ("2", "1"),
        ("12/5", "1"),
        ("13/5", "1"),
        ("3", "1"),
    ];
    assert_eq!(rows, want.map(|(a, b)| (a.to_string(), b.to_string())));
}

#[test]
fn chain_from_the_rank_four_profile() {
    let (code, out, _) = run(&[
        "hodge",
        "compare",
        "--fixture",
        "profile.P13.b_lt_a",
        "--pullback",
        "2",
        "--lambda",
        "mu",
        "--witness",
        "case.E3.b_eq_3_4_lt_a",
        "--against",
        "profile.Pprime.E3.b_eq_3_4_lt_a",
    ]);
    assert_eq!(code, 0, "{out}");
    let (code, _, _) = run(&[
        "hodge",
        "compare",
        "--fixture",
        "profile.P13.b_lt_a",
        "--pullback",
        "2",
        "--lambda",
        "mu",
        "--witness",
        "case.E3.b_eq_3_4_lt_a",
        "--against",
        "profile.Pprime.E3.b_gt_a",
    ]);
    assert_eq!(code, 1);
}

#[test]
fn monodromy_and_delta() {
    let (code, out, _) = run(&[
        "mono",
        "mc",
        "--fixture",
        "tuple.E4.M",
        "--lambda",
        "1/2",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rank"], 4);
    let (code, out, _) = run(&["hodge", "solve-delta", "--fixture", "profile.P2"]);
    assert_eq!(code, 0);
    assert!(out.lines().nth(1).unwrap().ends_with("-1"), "{out}");
    let (_, out, _) = run(&["mono", "rigidity", "--fixture", "tuple.P13"]);
    assert_eq!(out.trim(), "2");
}

#[test]
fn misprinted_scheme_exits_one() {
    let (code, out, _) = run(&["op", "scheme", "--fixture", "scheme.Pprime.E2"]);
    assert_eq!(code, 1);
    assert!(out.contains("at -1: printed [-7/6"), "{out}");
    let (code, _, _) = run(&["op", "scheme", "--fixture", "scheme.Pprime.E4"]);
    assert_eq!(code, 0);
}

#[test]
fn input_errors_exit_two() {
    let (code, _, err) = run(&["op", "parse", "--expr", "T + ?"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 4") || err.contains("4"), "{err}");
    assert_eq!(run(&["op", "parse", "--expr", "T^1/2"]).0, 2);
    assert_eq!(run(&["op", "nope"]).0, 2);
    assert_eq!(
        run(&["mono", "mc", "--fixture", "op.P13", "--lambda", "1/2"]).0,
        2
    );
    assert_eq!(
        run(&["mono", "mc", "--fixture", "tuple.P13", "--lambda", "0"]).0,
        2
    );
    assert_eq!(run(&["fixtures", "list", "--format", "yaml"]).0, 2);
}

#[test]
fn verify_exit_code_reflects_the_battery() {
    for g in ["E4", "monodromy", "hodge"] {
        let (code, out, _) = run(&["verify", g]);
        assert_eq!(code, 0, "{out}");
        assert!(out
            .lines()
            .filter(|l| !l.starts_with(' '))
            .all(|l| l.starts_with("PASS")));
    }
    let (code, out, _) = run(&["verify", "all"]);
    let expected = if verify::run(Group::All).iter().all(|r| r.passed()) {
        0
    } else {
        1
    };
    assert_eq!(code, expected);
    assert_eq!(
        out.lines()
            .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
            .count(),
        6
    );
}

#[test]
fn export_is_deterministic_json() {
    let (c1, a, _) = run(&["fixtures", "export"]);
    let (c2, b, _) = run(&["fixtures", "export", "--format", "json"]);
    assert_eq!((c1, c2), (0, 0));
    let (va, vb): (serde_json::Value, serde_json::Value) = (
        serde_json::from_str(&a).unwrap(),
        serde_json::from_str(&b).unwrap(),
    );
    assert_eq!(va, vb);
    assert!(va
        .as_array()
        .unwrap()
        .iter()
        .all(|f| f["anchor"].is_string()));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_rigid-calc");
    let ok = Command::new(bin)
        .args(["op", "parse", "--expr", "d*x"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "(T + 1)");
    let bad = Command::new(bin).args(["op", "parse"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
