//! Congruence generated by one pair, and the quotient it gives.

use greenstone::semigroup::named;
use greenstone::{congruence_closure, quotient_semigroup, GreenStructure, Relation};

fn main() -> greenstone::Result<()> {
    let t3 = named::t3();
    let rho = congruence_closure(&t3, &[(0, 1)])?;
    let (q, _) = quotient_semigroup(&t3, &rho)?;
    println!(
        "T3 has order {}; identifying elements 0 and 1 leaves {} blocks, quotient has {} D-classes",
        t3.order(),
        rho.block_count(),
        GreenStructure::of(&q).class_count(Relation::D)
    );
    Ok(())
}
