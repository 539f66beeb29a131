//! Infinite descending chains in the bicyclic monoid, and the pairs that
//! are J-related without being L- or R-related.

use greenstone::symbolic::{
    lookup, verify_chain, Bicyclic, Elem, SymbolicObject, SymbolicSemigroup,
};
use greenstone::Preorder;

fn main() -> greenstone::Result<()> {
    let b = Bicyclic;
    let e = Elem::Pair(0, 0);
    for x in [b.mul(&Elem::Pair(0, 1), &e), b.mul(&e, &Elem::Pair(1, 0))] {
        println!(
            "{x:?}: J {}, L {}, R {}",
            b.related(Preorder::J, &x, &e)?,
            b.related(Preorder::L, &x, &e)?,
            b.related(Preorder::R, &x, &e)?
        );
    }
    let chain = (0..).map(|n| Elem::Pair(0, n));
    let check = verify_chain(&b, Preorder::L, chain, 50)?;
    println!(
        "L-chain of length {} descends strictly: {}",
        check.steps, check.ok
    );
    let entry = lookup("bicyclic")?;
    println!("catalog audit problems: {}", entry.audit().len());
    Ok(())
}
