//! Congruences on finite semigroups and biacts, generated by union-find
//! saturation, and the quotients they induce.

use serde::{Deserialize, Serialize};

use crate::actions::Actions;
use crate::biact::FiniteBiact;
use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, Provenance};

#[derive(Clone, Debug)]
struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// An equivalence on `0..n` stored as a block id per element. Blocks are
/// numbered in order of their least member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<usize>,
    count: usize,
}

impl Partition {
    /// Normalizes arbitrary block labels.
    pub fn from_labels<T: PartialEq + Clone>(labels: &[T]) -> Self {
        let mut seen: Vec<T> = Vec::new();
        let mut blocks = Vec::with_capacity(labels.len());
        for l in labels {
            let id = match seen.iter().position(|s| s == l) {
                Some(i) => i,
                None => {
                    seen.push(l.clone());
                    seen.len() - 1
                }
            };
            blocks.push(id);
        }
        Partition {
            blocks,
            count: seen.len(),
        }
    }

    /// Same as `from_labels` for dense integer labels, in linear time.
    pub fn from_ids(labels: &[usize]) -> Self {
        let bound = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut remap = vec![usize::MAX; bound];
        let mut count = 0;
        let blocks = labels
            .iter()
            .map(|&l| {
                if remap[l] == usize::MAX {
                    remap[l] = count;
                    count += 1;
                }
                remap[l]
            })
            .collect();
        Partition { blocks, count }
    }

    pub fn identity(n: usize) -> Self {
        Partition {
            blocks: (0..n).collect(),
            count: n,
        }
    }

    pub fn full(n: usize) -> Self {
        Partition {
            blocks: vec![0; n],
            count: usize::from(n > 0),
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.count
    }

    pub fn block_of(&self, a: usize) -> usize {
        self.blocks[a]
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.blocks[a] == self.blocks[b]
    }

    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (a, &b) in self.blocks.iter().enumerate() {
            out[b].push(a);
        }
        out
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        let mut image = vec![usize::MAX; self.count];
        for (a, &b) in self.blocks.iter().enumerate() {
            let o = other.blocks[a];
            if image[b] == usize::MAX {
                image[b] = o;
            } else if image[b] != o {
                return false;
            }
        }
        true
    }

    /// Intersection of two partitions.
    pub fn meet(&self, other: &Partition) -> Partition {
        let pairs: Vec<(usize, usize)> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(&a, &b)| (a, b))
            .collect();
        let width = other.count.max(1);
        Partition::from_ids(&pairs.iter().map(|(a, b)| a * width + b).collect::<Vec<_>>())
    }

    /// Join of two partitions.
    pub fn join(&self, other: &Partition) -> Partition {
        let n = self.len();
        let mut uf = UnionFind::new(n);
        for (reps, p) in [
            (vec![usize::MAX; self.count], self),
            (vec![usize::MAX; other.count], other),
        ] {
            let mut reps = reps;
            for a in 0..n {
                let b = p.blocks[a];
                if reps[b] == usize::MAX {
                    reps[b] = a;
                } else {
                    uf.union(reps[b], a);
                }
            }
        }
        let roots: Vec<usize> = (0..n).map(|a| uf.find(a)).collect();
        Partition::from_ids(&roots)
    }
}

/// A congruence: a partition compatible with both actions.
pub type Congruence = Partition;

/// The smallest congruence containing `pairs`.
///
/// Each merge of `a` and `b` queues the translated pairs `(sa, sb)` and
/// `(at, bt)` for every actor on the edge sets; the queue drains at the
/// fixpoint.
pub fn congruence_closure<X: Actions + ?Sized>(
    x: &X,
    pairs: &[(usize, usize)],
) -> Result<Congruence> {
    let n = x.size();
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in pairs {
        if a >= n {
            return Err(Error::NotMember(a));
        }
        if b >= n {
            return Err(Error::NotMember(b));
        }
        queue.push((a, b));
    }
    while let Some((a, b)) = queue.pop() {
        if !uf.union(a, b) {
            continue;
        }
        for &s in x.left_edges() {
            queue.push((x.act_left(s, a), x.act_left(s, b)));
        }
        for &t in x.right_edges() {
            queue.push((x.act_right(a, t), x.act_right(b, t)));
        }
    }
    let roots: Vec<usize> = (0..n).map(|a| uf.find(a)).collect();
    Ok(Partition::from_ids(&roots))
}

/// Checks that `p` is compatible with both actions of `x`.
pub fn check_congruence<X: Actions + ?Sized>(x: &X, p: &Partition) -> Result<()> {
    if p.len() != x.size() {
        return Err(Error::IncompatiblePartition(format!(
            "partition covers {} points, carrier has {}",
            p.len(),
            x.size()
        )));
    }
    let n = x.size();
    let mut rep = vec![usize::MAX; p.block_count()];
    for a in 0..n {
        let b = p.block_of(a);
        if rep[b] == usize::MAX {
            rep[b] = a;
            continue;
        }
        let r = rep[b];
        for &s in x.left_edges() {
            if !p.same(x.act_left(s, a), x.act_left(s, r)) {
                return Err(Error::IncompatiblePartition(format!(
                    "{a} ~ {r} but left translates by {s} differ"
                )));
            }
        }
        for &t in x.right_edges() {
            if !p.same(x.act_right(a, t), x.act_right(r, t)) {
                return Err(Error::IncompatiblePartition(format!(
                    "{a} ~ {r} but right translates by {t} differ"
                )));
            }
        }
    }
    Ok(())
}

/// Quotient semigroup `S/ρ` and the projection (element -> block).
pub fn quotient_semigroup(
    s: &FiniteSemigroup,
    rho: &Congruence,
) -> Result<(FiniteSemigroup, Vec<usize>)> {
    check_congruence(s, rho)?;
    let members = rho.members();
    let k = rho.block_count();
    let mut table = Vec::with_capacity(k * k);
    for bi in &members {
        for bj in &members {
            table.push(rho.block_of(s.mul(bi[0], bj[0])));
        }
    }
    let q = FiniteSemigroup::from_flat(k, table)?.with_provenance(Provenance::Quotient);
    Ok((q, rho.blocks().to_vec()))
}

/// Quotient biact `A/ρ` and the projection.
pub fn quotient_biact(a: &FiniteBiact, rho: &Congruence) -> Result<(FiniteBiact, Vec<usize>)> {
    check_congruence(a, rho)?;
    let members = rho.members();
    let left: Vec<Vec<usize>> = (0..a.left().order())
        .map(|s| {
            members
                .iter()
                .map(|b| rho.block_of(a.act_left(s, b[0])))
                .collect()
        })
        .collect();
    let right: Vec<Vec<usize>> = members
        .iter()
        .map(|b| {
            (0..a.right().order())
                .map(|t| rho.block_of(a.act_right(b[0], t)))
                .collect()
        })
        .collect();
    let q = FiniteBiact::new(
        a.left().clone(),
        a.right().clone(),
        rho.block_count(),
        left,
        right,
    )?;
    Ok((q, rho.blocks().to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    #[test]
    fn empty_pairs_give_identity() {
        let z4 = named::cyclic_group(4);
        assert_eq!(
            congruence_closure(&z4, &[]).unwrap(),
            Partition::identity(4)
        );
    }

    #[test]
    fn z4_mod_2() {
        let z4 = named::cyclic_group(4);
        let c = congruence_closure(&z4, &[(0, 2)]).unwrap();
        assert_eq!(c.members(), vec![vec![0, 2], vec![1, 3]]);
        let (q, proj) = quotient_semigroup(&z4, &c).unwrap();
        assert_eq!(q, named::cyclic_group(2));
        assert_eq!(proj, vec![0, 1, 0, 1]);
    }

    #[test]
    fn left_zero_collapses() {
        let lz = named::left_zero(2);
        let c = congruence_closure(&lz, &[(0, 1)]).unwrap();
        assert_eq!(c.block_count(), 1);
        let (q, _) = quotient_semigroup(&lz, &c).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn identity_quotient_is_a_copy() {
        let t2 = named::t2();
        let (q, proj) = quotient_semigroup(&t2, &Partition::identity(4)).unwrap();
        assert_eq!(q.table(), t2.table());
        assert_eq!(proj, vec![0, 1, 2, 3]);
    }

    #[test]
    fn incompatible_partition_rejected() {
        let z4 = named::cyclic_group(4);
        let p = Partition::from_ids(&[0, 0, 1, 1]);
        assert!(matches!(
            quotient_semigroup(&z4, &p),
            Err(Error::IncompatiblePartition(_))
        ));
    }

    #[test]
    fn join_and_meet() {
        let a = Partition::from_ids(&[0, 0, 1, 2]);
        let b = Partition::from_ids(&[0, 1, 1, 2]);
        assert_eq!(a.join(&b).members(), vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(a.meet(&b), Partition::identity(4));
        assert!(a.refines(&a.join(&b)));
        assert!(!a.refines(&b));
    }
}
