//! Driving the command line from Rust: every subcommand writes to the given sinks and
//! returns its exit code.

use rigid_calc::cli;

fn main() {
    let commands: &[&[&str]] = &[
        &["op", "parse", "--expr", "x^2*(T+1-2*b)"],
        &["op", "match", "--expr", "x*(T+mu)", "--expr", "x*T"],
        &["mono", "rigidity", "--fixture", "tuple.P2"],
        &["hodge", "solve-delta", "--h", "2,2", "--omega", "5,3"],
        &[
            "hodge",
            "phase",
            "--fixture",
            "profile.Pprime.E2",
            "--format",
            "json",
        ],
    ];
    for args in commands {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(
            std::iter::once("rigid-calc").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        println!("$ rigid-calc {}  (exit {code})", args.join(" "));
        print!(
            "{}{}",
            String::from_utf8_lossy(&out),
            String::from_utf8_lossy(&err)
        );
    }
}
