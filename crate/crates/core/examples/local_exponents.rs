//! Indicial polynomials, Riemann schemes under a witness, symbolic certification,
//! minimality certificates and Newton slopes.

use rigid_calc::fixtures;
use rigid_calc::weyl::{
    certify_scheme, indicial_at, minimality_certificate, newton_slopes_at_infinity, riemann_scheme,
    Point,
};

fn main() -> rigid_calc::Result<()> {
    let p = fixtures::operator("op.P13")?;
    let printed = fixtures::scheme("scheme.P13")?;
    let w = fixtures::witness("case.E3.b_lt_a")?;

    println!("indicial at 0: {}", indicial_at(p, &Point::zero(), None)?);
    println!("indicial at ∞: {}", indicial_at(p, &Point::Infinity, None)?);

    let computed = riemann_scheme(p, &printed.points(), w)?;
    println!("\nscheme under {}:", w.id());
    for (pt, es) in computed.evaluate(w)? {
        let es: Vec<String> = es.iter().map(|e| e.to_string()).collect();
        println!("  {pt}: {}", es.join(", "));
    }
    certify_scheme(p, printed)?;
    println!("printed scheme certified symbolically");

    let pp = fixtures::operator("op.Pprime.E4")?;
    let report = minimality_certificate(pp, fixtures::scheme("scheme.Pprime.E4")?)?;
    let roots: Vec<String> = report
        .quotient_roots
        .iter()
        .map(|r| r.to_string())
        .collect();
    println!(
        "\nminimality of P′ (E4): {} (quotient roots {})",
        report.holds(),
        roots.join(", ")
    );

    let slopes: Vec<String> = newton_slopes_at_infinity(fixtures::operator("op.H.E4")?)?
        .iter()
        .map(|s| s.to_string())
        .collect();
    println!("slopes at ∞ of H (E4): {}", slopes.join(" "));
    Ok(())
}
