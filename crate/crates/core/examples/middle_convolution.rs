//! Katz's algorithm on local monodromy: rank one → MC → tensor → MC gives the rank-four
//! tuple, which is rigid. Middle convolution of its pullback is not.

use rigid_calc::algebra::Symbol;
use rigid_calc::fixtures;
use rigid_calc::monodromy::{
    kummer_pullback_tuple, mc_local, mc_rank, rigidity_index, tensor_rank_one, ExponentClass,
};

fn main() -> rigid_calc::Result<()> {
    let a = ExponentClass::symbol(Symbol::A);
    let b = ExponentClass::symbol(Symbol::B);

    let m = fixtures::tuple("tuple.katz.M")?;
    println!("M:\n{m}");
    let l = mc_local(m, &a.sub(&b))?;
    println!("MC_(a-b)(M):\n{l}");
    let l2 = tensor_rank_one(&l, fixtures::tuple("tuple.katz.M2")?)?;
    let p = mc_local(&l2, &b)?;
    println!("MC_b(MC_(a-b)(M) ⊗ M2):\n{p}");
    println!("rigidity index {}", rigidity_index(&p));
    assert_eq!(&p, fixtures::tuple("tuple.P13")?);

    let pulled = kummer_pullback_tuple(&p, 2, &fixtures::preimages("P13"))?;
    let mu = ExponentClass::symbol(Symbol::Mu);
    println!(
        "\n[2]^* has rank {}, index {}; MC_mu of it has rank {} and index {}",
        pulled.rank(),
        rigidity_index(&pulled),
        mc_rank(&pulled, &mu)?,
        rigidity_index(&mc_local(&pulled, &mu)?)
    );
    Ok(())
}
