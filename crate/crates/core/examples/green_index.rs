//! Green index of the group of units inside the full transformation
//! monoid on two points.

use greenstone::green_index;
use greenstone::semigroup::named;

fn main() -> greenstone::Result<()> {
    let t2 = named::t2();
    let units: Vec<usize> = ["01", "10"]
        .iter()
        .filter_map(|l| t2.find_label(l))
        .collect();
    let r = green_index(&t2, &units)?;
    println!(
        "index {} ({} relative H-classes outside)",
        r.index, r.outside_h_classes
    );
    for c in &r.outside_classes {
        println!("  {:?}", c.iter().map(|&x| t2.label(x)).collect::<Vec<_>>());
    }
    Ok(())
}
