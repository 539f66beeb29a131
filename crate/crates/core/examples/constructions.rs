//! The finite constructions: ideal extensions built from a biact, Rees
//! quotients and zero direct unions.

use greenstone::semigroup::named;
use greenstone::symbolic::{construct_usa, construct_usta};
use greenstone::{FiniteBiact, FiniteSemigroup, GreenStructure, Relation};

fn describe(name: &str, s: &FiniteSemigroup) {
    let g = GreenStructure::of(s);
    println!(
        "{name}: order {}, {} J-classes",
        s.order(),
        g.class_count(Relation::J)
    );
}

fn main() -> greenstone::Result<()> {
    let t2 = named::t2();
    let a = FiniteBiact::regular(&t2);
    describe("U(T2,T2;T2)", &construct_usta(&t2, &t2, &a)?.0);
    describe("U(T2;T2)", &construct_usa(&t2, &a)?.0);
    let constants: Vec<usize> = ["00", "11"]
        .iter()
        .filter_map(|l| t2.find_label(l))
        .collect();
    let (q, _) = t2.rees_quotient(&constants)?;
    describe("T2 / constants", &q);
    describe(
        "T2 zero-union C2",
        &FiniteSemigroup::zero_direct_union(&t2, &named::cyclic_group(2)),
    );
    Ok(())
}
