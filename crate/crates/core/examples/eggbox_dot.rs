//! Graphviz text for the egg-box diagram and the J-class poset of the
//! full transformation monoid on three points.

use greenstone::semigroup::named;
use greenstone::{dot, GreenStructure, Preorder};

fn main() -> greenstone::Result<()> {
    let t3 = named::t3();
    let g = GreenStructure::of(&t3);
    print!("{}", dot::eggbox(&g, &|x| t3.label(x))?);
    print!("{}", dot::class_poset(&g, Preorder::J, &|x| t3.label(x)));
    Ok(())
}
