//! Semigroups up to isomorphism by order, and a count of small biacts.

use greenstone::enumerate::{all_semigroups_vec, biacts_up_to, random_biacts};
use greenstone::props::stable;

fn main() -> greenstone::Result<()> {
    for n in 1..=4 {
        println!("order {n}: {} semigroups", all_semigroups_vec(n)?.len());
    }
    let biacts = biacts_up_to(2, 3)?;
    let unstable = biacts.iter().filter(|a| !stable(*a).value).count();
    println!(
        "{} biacts over semigroups of order <= 2, {unstable} unstable",
        biacts.len()
    );
    let sampled = random_biacts(7, 4, 6)
        .take(100)
        .filter(|a| stable(a).value)
        .count();
    println!("{sampled} of 100 random biacts are stable");
    Ok(())
}
