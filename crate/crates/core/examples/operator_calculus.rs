//! Parsing, products, Fourier transform, Kummer pullback, twists and twist matching.

use rigid_calc::algebra::ThetaPoly;
use rigid_calc::expr::parse_operator;
use rigid_calc::fixtures;
use rigid_calc::weyl::{
    ft_quotient, ft_theta, inversion_normalized, kummer_pullback, left_factor_divide,
    match_up_to_twist, to_delta_form, twist_shift,
};

fn main() -> rigid_calc::Result<()> {
    let a = parse_operator("d*x")?;
    let b = parse_operator("x^2*(T+1-2*b) + T^2")?;
    println!("d*x            = {a}");
    println!("B              = {b}");
    println!("(d*x)·B        = {}", a.op_mul(&b));
    println!("B in δ-form    = {}", to_delta_form(&b));
    println!("FT(B)          = {}", ft_theta(&b));
    println!("[2]^*B         = {}", kummer_pullback(&b, 2)?);
    println!("[1/x]^*B       = {}", inversion_normalized(&b));

    // FT(P′) = [ϑ]_6 · H, and H is a twisted pullback of the rank-three operator
    let p = fixtures::operator("op.Pprime.E1E3")?;
    let (n, h) = ft_quotient(p)?;
    let pulled = kummer_pullback(fixtures::operator("op.L.E1E3")?, 2)?;
    let m = match_up_to_twist(&h, &pulled).expect("quotient is a twisted pullback");
    println!(
        "\nFT(P′) = [ϑ]_{n} · H with H = {} · twist([2]^*L, {})",
        m.scale, m.shift
    );
    assert_eq!(twist_shift(&pulled, &m.shift).scale(&m.scale), h);
    assert_eq!(left_factor_divide(&ft_theta(p), &ThetaPoly::falling(n))?, h);
    Ok(())
}
