//! Exhaustive small-order enumeration and seeded random samplers.
//!
//! Every random sampler is driven by `ChaCha8Rng::seed_from_u64(seed)`;
//! the generator and the seeding are part of the reproducibility contract.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::biact::FiniteBiact;
use crate::error::{Error, Result};
use crate::iso::{canonical_biact, canonical_table};
use crate::semigroup::{FiniteSemigroup, Provenance};

pub const MAX_EXHAUSTIVE_ORDER: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StreamKind {
    AllSemigroups {
        order: usize,
    },
    AllBiacts {
        left: usize,
        right: usize,
        size: usize,
    },
    RandomTransformation {
        degree: usize,
        generators: usize,
        seed: u64,
    },
    RandomBiact {
        seed: u64,
        max_order: usize,
        max_size: usize,
    },
}

/// A deterministic stream of instances.
pub struct InstanceStream<T> {
    kind: StreamKind,
    inner: Box<dyn Iterator<Item = T> + Send>,
}

impl<T> InstanceStream<T> {
    pub fn kind(&self) -> &StreamKind {
        &self.kind
    }
}

impl<T> Iterator for InstanceStream<T> {
    type Item = T;
    fn next(&mut self) -> Option<T> {
        self.inner.next()
    }
}

const UNSET: usize = usize::MAX;

fn table_consistent(n: usize, t: &[usize]) -> bool {
    for x in 0..n {
        for y in 0..n {
            let xy = t[x * n + y];
            if xy == UNSET {
                continue;
            }
            for z in 0..n {
                let yz = t[y * n + z];
                if yz == UNSET {
                    continue;
                }
                let l = t[xy * n + z];
                let r = t[x * n + yz];
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// Every associative table on `n` labelled elements.
fn labelled_semigroups(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, t: &mut Vec<usize>, cell: usize, out: &mut Vec<Vec<usize>>) {
        if cell == n * n {
            out.push(t.clone());
            return;
        }
        for v in 0..n {
            t[cell] = v;
            if table_consistent(n, t) {
                go(n, t, cell + 1, out);
            }
        }
        t[cell] = UNSET;
    }
    let mut out = Vec::new();
    go(n, &mut vec![UNSET; n * n], 0, &mut out);
    out
}

/// All semigroups of order `n` up to isomorphism (anti-isomorphic pairs
/// are kept apart), each given by its canonical table, in increasing
/// lexicographic order of that table.
pub fn all_semigroups(n: usize) -> Result<InstanceStream<FiniteSemigroup>> {
    let list = all_semigroups_vec(n)?;
    Ok(InstanceStream {
        kind: StreamKind::AllSemigroups { order: n },
        inner: Box::new(list.into_iter()),
    })
}

pub fn all_semigroups_vec(n: usize) -> Result<Vec<FiniteSemigroup>> {
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::CapExceeded(format!(
            "exhaustive enumeration supports orders 1..={MAX_EXHAUSTIVE_ORDER}, got {n}"
        )));
    }
    static CACHE: [OnceLock<Vec<FiniteSemigroup>>; MAX_EXHAUSTIVE_ORDER] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    Ok(CACHE[n - 1]
        .get_or_init(|| {
            let mut canon = BTreeSet::new();
            for t in labelled_semigroups(n) {
                let s = FiniteSemigroup::from_flat_unchecked(n, t).expect("well formed");
                canon.insert(canonical_table(&s));
            }
            canon
                .into_iter()
                .map(|t| FiniteSemigroup::from_flat(n, t).expect("associative by construction"))
                .collect()
        })
        .clone())
}

/// All semigroups of order `1..=max`.
pub fn semigroups_up_to(max: usize) -> Result<Vec<FiniteSemigroup>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(all_semigroups_vec(n)?);
    }
    Ok(out)
}

fn action_consistent(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    m: usize,
    left: &[usize],
    right: &[usize],
) -> bool {
    let (ns, nt) = (s.order(), t.order());
    for x in 0..ns {
        for y in 0..ns {
            let xy = s.mul(x, y);
            for a in 0..m {
                let ya = left[y * m + a];
                if ya == UNSET {
                    continue;
                }
                let l = left[x * m + ya];
                let r = left[xy * m + a];
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    for a in 0..m {
        for x in 0..nt {
            let ax = right[a * nt + x];
            if ax == UNSET {
                continue;
            }
            for y in 0..nt {
                let l = right[ax * nt + y];
                let r = right[a * nt + t.mul(x, y)];
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    for x in 0..ns {
        for a in 0..m {
            for y in 0..nt {
                let xa = left[x * m + a];
                let ay = right[a * nt + y];
                if xa == UNSET || ay == UNSET {
                    continue;
                }
                let l = right[xa * nt + y];
                let r = left[x * m + ay];
                if l != UNSET && r != UNSET && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// All `(S,T)`-biacts on `m` points up to carrier relabeling, in increasing
/// order of their canonical action tables. Limited to `|S|,|T| <= 3` and
/// `m <= 3`.
pub fn all_biacts(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    m: usize,
) -> Result<InstanceStream<FiniteBiact>> {
    let list = all_biacts_vec(s, t, m)?;
    Ok(InstanceStream {
        kind: StreamKind::AllBiacts {
            left: s.order(),
            right: t.order(),
            size: m,
        },
        inner: Box::new(list.into_iter()),
    })
}

pub fn all_biacts_vec(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    m: usize,
) -> Result<Vec<FiniteBiact>> {
    if s.order() > 3 || t.order() > 3 || m == 0 || m > 3 {
        return Err(Error::CapExceeded(format!(
            "exhaustive biacts need |S|,|T| <= 3 and 1 <= m <= 3, got {}, {}, {m}",
            s.order(),
            t.order()
        )));
    }
    let (ns, nt) = (s.order(), t.order());
    let mut left = vec![UNSET; ns * m];
    let mut right = vec![UNSET; m * nt];
    let mut found = BTreeSet::new();

    #[allow(clippy::too_many_arguments)]
    fn go(
        s: &FiniteSemigroup,
        t: &FiniteSemigroup,
        m: usize,
        left: &mut Vec<usize>,
        right: &mut Vec<usize>,
        cell: usize,
        found: &mut BTreeSet<(Vec<usize>, Vec<usize>)>,
    ) {
        let nl = left.len();
        if cell == nl + right.len() {
            let b = FiniteBiact::from_flat_unchecked(
                s.clone(),
                t.clone(),
                m,
                left.clone(),
                right.clone(),
            );
            found.insert(canonical_biact(&b));
            return;
        }
        for v in 0..m {
            if cell < nl {
                left[cell] = v;
            } else {
                right[cell - nl] = v;
            }
            if action_consistent(s, t, m, left, right) {
                go(s, t, m, left, right, cell + 1, found);
            }
        }
        if cell < nl {
            left[cell] = UNSET;
        } else {
            right[cell - nl] = UNSET;
        }
    }

    go(s, t, m, &mut left, &mut right, 0, &mut found);
    Ok(found
        .into_iter()
        .map(|(l, r)| {
            let b = FiniteBiact::from_flat_unchecked(s.clone(), t.clone(), m, l, r);
            b.validate().expect("enumerated biacts satisfy the axioms");
            b
        })
        .collect())
}

/// Every biact with `|S|,|T| <= max_order` and carrier `<= max_size`,
/// over all semigroups of those orders up to isomorphism.
pub fn biacts_up_to(max_order: usize, max_size: usize) -> Result<Vec<FiniteBiact>> {
    let sgs = semigroups_up_to(max_order)?;
    let mut out = Vec::new();
    for s in &sgs {
        for t in &sgs {
            for m in 1..=max_size {
                out.extend(all_biacts_vec(s, t, m)?);
            }
        }
    }
    Ok(out)
}

fn random_map(rng: &mut ChaCha8Rng, degree: usize) -> Vec<usize> {
    (0..degree).map(|_| rng.gen_range(0..degree)).collect()
}

/// A transformation semigroup on `degree <= 8` points with `gen_count`
/// random generators.
pub fn random_transformation_semigroup(
    degree: usize,
    gen_count: usize,
    seed: u64,
) -> Result<FiniteSemigroup> {
    if degree == 0 || degree > 8 {
        return Err(Error::CapExceeded(format!(
            "degree must be in 1..=8, got {degree}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gens: Vec<Vec<usize>> = (0..gen_count)
        .map(|_| random_map(&mut rng, degree))
        .collect();
    FiniteSemigroup::from_transformations(degree, &gens).map_err(|e| match e {
        Error::SizeLimitExceeded { limit } => {
            Error::CapExceeded(format!("closure exceeded {limit} elements"))
        }
        other => other,
    })
}

/// Stream of random transformation semigroups; the `i`-th uses seed
/// `seed + i`.
pub fn random_transformations(
    degree: usize,
    gen_count: usize,
    seed: u64,
) -> InstanceStream<FiniteSemigroup> {
    InstanceStream {
        kind: StreamKind::RandomTransformation {
            degree,
            generators: gen_count,
            seed,
        },
        inner: Box::new((0u64..).filter_map(move |i| {
            random_transformation_semigroup(degree, gen_count, seed.wrapping_add(i)).ok()
        })),
    }
}

/// The subsemigroup generated by a random non-empty set of at most three
/// elements.
pub fn random_subsemigroup(s: &FiniteSemigroup, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = rng.gen_range(1..=s.order().min(3));
    let mut all: Vec<usize> = s.elements().collect();
    all.shuffle(&mut rng);
    s.subsemigroup_closure(&all[..k]).expect("non-empty seeds")
}

/// Random biact with `|S|,|T| <= max_order` (drawn from the exhaustive
/// lists) and `1..=max_size` points. Actions are found by a randomized
/// depth-first search with incremental axiom checks.
pub fn random_biact(
    rng: &mut ChaCha8Rng,
    max_order: usize,
    max_size: usize,
) -> Result<FiniteBiact> {
    let pool = semigroups_up_to(max_order)?;
    loop {
        let s = pool[rng.gen_range(0..pool.len())].clone();
        let t = pool[rng.gen_range(0..pool.len())].clone();
        let m = rng.gen_range(1..=max_size);
        let (ns, nt) = (s.order(), t.order());
        let mut left = vec![UNSET; ns * m];
        let mut right = vec![UNSET; m * nt];
        let mut budget = 20_000u32;
        if random_fill(&s, &t, m, &mut left, &mut right, 0, rng, &mut budget) {
            let b = FiniteBiact::from_flat_unchecked(s, t, m, left, right);
            b.validate()?;
            return Ok(b);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn random_fill(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    m: usize,
    left: &mut Vec<usize>,
    right: &mut Vec<usize>,
    cell: usize,
    rng: &mut ChaCha8Rng,
    budget: &mut u32,
) -> bool {
    let nl = left.len();
    if cell == nl + right.len() {
        return true;
    }
    if *budget == 0 {
        return false;
    }
    *budget -= 1;
    let mut values: Vec<usize> = (0..m).collect();
    values.shuffle(rng);
    for v in values {
        if cell < nl {
            left[cell] = v;
        } else {
            right[cell - nl] = v;
        }
        if action_consistent(s, t, m, left, right)
            && random_fill(s, t, m, left, right, cell + 1, rng, budget)
        {
            return true;
        }
    }
    if cell < nl {
        left[cell] = UNSET;
    } else {
        right[cell - nl] = UNSET;
    }
    false
}

/// Stream of random biacts from one seeded generator.
pub fn random_biacts(seed: u64, max_order: usize, max_size: usize) -> InstanceStream<FiniteBiact> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    InstanceStream {
        kind: StreamKind::RandomBiact {
            seed,
            max_order,
            max_size,
        },
        inner: Box::new(std::iter::from_fn(move || {
            random_biact(&mut rng, max_order, max_size).ok()
        })),
    }
}

/// Labels a generated semigroup as coming from the enumeration.
pub fn tag_enumerated(s: FiniteSemigroup, index: usize) -> FiniteSemigroup {
    s.with_provenance(Provenance::Composite(format!("enumerated #{index}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(all_semigroups(1).unwrap().count(), 1);
        assert_eq!(all_semigroups(2).unwrap().count(), 5);
        assert!(matches!(all_semigroups(5), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn trivial_biacts() {
        let t = crate::semigroup::named::trivial();
        assert_eq!(all_biacts(&t, &t, 1).unwrap().count(), 1);
    }

    #[test]
    fn random_biacts_are_reproducible() {
        let a: Vec<_> = random_biacts(7, 4, 6).take(20).collect();
        let b: Vec<_> = random_biacts(7, 4, 6).take(20).collect();
        assert_eq!(a, b);
        assert!(a.iter().all(|x| x.validate().is_ok()));
    }

    #[test]
    fn random_subsemigroup_is_closed() {
        let t3 = crate::semigroup::named::t3();
        for seed in 0..20 {
            let sub = random_subsemigroup(&t3, seed);
            assert!(t3.is_subset_role(&sub, crate::semigroup::Role::Subsemigroup));
        }
    }
}
