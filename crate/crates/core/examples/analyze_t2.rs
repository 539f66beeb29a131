//! Green's classes and the stability predicates of the full
//! transformation monoid on two points.

use greenstone::props::Analysis;
use greenstone::{FiniteSemigroup, GreenStructure, Relation};

fn main() -> greenstone::Result<()> {
    let t2 = FiniteSemigroup::from_transformations(2, &[vec![1, 0], vec![0, 0]])?;
    let g = GreenStructure::of(&t2);
    for r in Relation::ALL {
        let classes: Vec<String> = g
            .classes(r)
            .iter()
            .map(|c| {
                format!(
                    "{{{}}}",
                    c.iter().map(|&x| t2.label(x)).collect::<Vec<_>>().join(",")
                )
            })
            .collect();
        println!("{}: {}", r.name(), classes.join(" "));
    }
    let an = Analysis::new(&t2);
    println!("stable: {}", an.stable().value);
    println!("stable forms (left): {:?}", an.left_stable_forms());
    Ok(())
}
