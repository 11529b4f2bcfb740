//! Parameter polynomials, θ-polynomials, exact rational roots and witnesses.

use rigid_calc::algebra::{ratio, rational_roots, sym, ParameterWitness, Symbol, ThetaPoly};

fn main() -> rigid_calc::Result<()> {
    let p = &(&sym::a() + &sym::q(1, 2)).pow(2) - &sym::b();
    println!("p = {p}");

    let w = ParameterWitness::bare("demo", [(Symbol::A, ratio(2, 3)), (Symbol::B, ratio(1, 4))]);
    println!("p at {w} = {}", p.evaluate(&w)?);

    // ϑ(ϑ − 1/2)(ϑ + 3)² with exact roots recovered
    let q = ThetaPoly::from_roots([sym::c(0), sym::q(1, 2), sym::c(-3), sym::c(-3)]);
    println!("q(ϑ) = {q}");
    let roots: Vec<String> = rational_roots(&q)?.iter().map(|r| r.to_string()).collect();
    println!("roots: {}", roots.join(", "));

    // exact division by a root factor; the remainder must vanish
    let quotient = q.exact_div(&ThetaPoly::root_factor(sym::c(-3)))?;
    println!("q / (ϑ + 3) = {quotient}");
    Ok(())
}
