//! Finite `(S,T)`-biacts: a carrier acted on by `S` from the left and by
//! `T` from the right, with the two actions commuting.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::actions::Actions;
use crate::error::{Error, Result};
use crate::semigroup::{FiniteSemigroup, Role};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BiactProvenance {
    Tables,
    Regular,
    Ideal {
        members: Vec<usize>,
    },
    /// `S` acted on by the subsemigroup with these members (ids in `S`).
    Relative {
        sub: Vec<usize>,
    },
    ReesQuotient,
    Quotient,
    Product,
    Pullback,
}

#[derive(Clone, Debug)]
pub struct FiniteBiact {
    left: FiniteSemigroup,
    right: FiniteSemigroup,
    size: usize,
    left_action: Vec<usize>,
    right_action: Vec<usize>,
    labels: Option<Vec<String>>,
    provenance: BiactProvenance,
}

impl PartialEq for FiniteBiact {
    fn eq(&self, other: &Self) -> bool {
        self.left == other.left
            && self.right == other.right
            && self.size == other.size
            && self.left_action == other.left_action
            && self.right_action == other.right_action
    }
}

impl Eq for FiniteBiact {}

/// A set of carrier points closed under both actions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subact {
    pub members: Vec<usize>,
}

impl FiniteBiact {
    /// Validates the three biact axioms on every triple.
    pub fn new(
        left: FiniteSemigroup,
        right: FiniteSemigroup,
        size: usize,
        left_action: Vec<Vec<usize>>,
        right_action: Vec<Vec<usize>>,
    ) -> Result<Self> {
        if left_action.len() != left.order() || left_action.iter().any(|r| r.len() != size) {
            return Err(Error::BadShape(format!(
                "left action must be {}x{size}",
                left.order()
            )));
        }
        if right_action.len() != size || right_action.iter().any(|r| r.len() != right.order()) {
            return Err(Error::BadShape(format!(
                "right action must be {size}x{}",
                right.order()
            )));
        }
        let b = FiniteBiact {
            size,
            left_action: left_action.concat(),
            right_action: right_action.concat(),
            left,
            right,
            labels: None,
            provenance: BiactProvenance::Tables,
        };
        b.check_ranges()?;
        b.validate()?;
        Ok(b)
    }

    fn from_parts(
        left: FiniteSemigroup,
        right: FiniteSemigroup,
        size: usize,
        left_action: Vec<usize>,
        right_action: Vec<usize>,
        provenance: BiactProvenance,
    ) -> Self {
        FiniteBiact {
            left,
            right,
            size,
            left_action,
            right_action,
            labels: None,
            provenance,
        }
    }

    fn check_ranges(&self) -> Result<()> {
        let (ns, nt, m) = (self.left.order(), self.right.order(), self.size);
        if let Some(i) = self.left_action.iter().position(|&v| v >= m) {
            return Err(Error::BadEntry {
                row: i / m,
                col: i % m,
                value: self.left_action[i],
                order: m,
            });
        }
        if let Some(i) = self.right_action.iter().position(|&v| v >= m) {
            return Err(Error::BadEntry {
                row: i / nt,
                col: i % nt,
                value: self.right_action[i],
                order: m,
            });
        }
        let _ = ns;
        Ok(())
    }

    /// Re-checks `s(s'a) = (ss')a`, `(at)t' = a(tt')` and `(sa)t = s(at)`.
    pub fn validate(&self) -> Result<()> {
        let (ns, nt, m) = (self.left.order(), self.right.order(), self.size);
        for s in 0..ns {
            for s2 in 0..ns {
                let ss2 = self.left.mul(s, s2);
                for a in 0..m {
                    if self.act_left(s, self.act_left(s2, a)) != self.act_left(ss2, a) {
                        return Err(Error::ActionAxiomViolation {
                            axiom: "s(s'a) = (ss')a",
                            witness: [s, s2, a],
                        });
                    }
                }
            }
        }
        for a in 0..m {
            for t in 0..nt {
                let at = self.act_right(a, t);
                for t2 in 0..nt {
                    if self.act_right(at, t2) != self.act_right(a, self.right.mul(t, t2)) {
                        return Err(Error::ActionAxiomViolation {
                            axiom: "(at)t' = a(tt')",
                            witness: [a, t, t2],
                        });
                    }
                }
            }
        }
        for s in 0..ns {
            for a in 0..m {
                for t in 0..nt {
                    if self.act_right(self.act_left(s, a), t)
                        != self.act_left(s, self.act_right(a, t))
                    {
                        return Err(Error::ActionAxiomViolation {
                            axiom: "(sa)t = s(at)",
                            witness: [s, a, t],
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn left(&self) -> &FiniteSemigroup {
        &self.left
    }

    pub fn right(&self) -> &FiniteSemigroup {
        &self.right
    }

    pub fn provenance(&self) -> &BiactProvenance {
        &self.provenance
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size {
            return Err(Error::BadShape(format!(
                "{} labels for {} points",
                labels.len(),
                self.size
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn left_rows(&self) -> Vec<Vec<usize>> {
        self.left_action
            .chunks(self.size.max(1))
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn right_rows(&self) -> Vec<Vec<usize>> {
        if self.right.order() == 0 {
            return vec![];
        }
        self.right_action
            .chunks(self.right.order())
            .map(<[usize]>::to_vec)
            .collect()
    }

    /// `S` acting on itself by multiplication on both sides.
    pub fn regular(s: &FiniteSemigroup) -> Self {
        let n = s.order();
        let mut b = Self::from_parts(
            s.clone(),
            s.clone(),
            n,
            s.table().to_vec(),
            s.table().to_vec(),
            BiactProvenance::Regular,
        );
        b.labels = s.labels().map(<[String]>::to_vec);
        b
    }

    /// An ideal `I` of `S` as an `S`-biact. Carrier ids follow the sorted
    /// member order.
    pub fn ideal(s: &FiniteSemigroup, ideal: &[usize]) -> Result<Self> {
        let role = s
            .classify_subset(ideal, Role::Ideal)
            .map_err(|e| Error::NotAnIdeal(e.to_string()))?;
        let members = role.members;
        let local = local_index(s.order(), &members);
        let m = members.len();
        let n = s.order();
        let mut left = Vec::with_capacity(n * m);
        for x in 0..n {
            for &a in &members {
                left.push(local[s.mul(x, a)]);
            }
        }
        let mut right = Vec::with_capacity(m * n);
        for &a in &members {
            for x in 0..n {
                right.push(local[s.mul(a, x)]);
            }
        }
        let mut b = Self::from_parts(
            s.clone(),
            s.clone(),
            m,
            left,
            right,
            BiactProvenance::Ideal {
                members: members.clone(),
            },
        );
        if let Some(l) = s.labels() {
            b.labels = Some(members.iter().map(|&i| l[i].clone()).collect());
        }
        Ok(b)
    }

    /// `S` as a `T`-biact for a subsemigroup `T` (given by its members in
    /// `S`). The acting semigroup is `T` with ids renumbered in increasing
    /// member order.
    pub fn relative(s: &FiniteSemigroup, sub: &[usize]) -> Result<Self> {
        let (t, emb) = s.subsemigroup(sub)?;
        let n = s.order();
        let k = t.order();
        let mut left = Vec::with_capacity(k * n);
        for &x in &emb {
            for a in 0..n {
                left.push(s.mul(x, a));
            }
        }
        let mut right = Vec::with_capacity(n * k);
        for a in 0..n {
            for &x in &emb {
                right.push(s.mul(a, x));
            }
        }
        let mut b = Self::from_parts(
            t.clone(),
            t,
            n,
            left,
            right,
            BiactProvenance::Relative { sub: emb },
        );
        b.labels = s.labels().map(<[String]>::to_vec);
        Ok(b)
    }

    pub fn is_subact(&self, members: &[usize]) -> bool {
        self.check_subact(members).is_ok()
    }

    fn check_subact(&self, members: &[usize]) -> Result<Vec<bool>> {
        let mut inside = vec![false; self.size];
        for &m in members {
            if m >= self.size {
                return Err(Error::NotMember(m));
            }
            inside[m] = true;
        }
        for &a in members {
            for s in 0..self.left.order() {
                if !inside[self.act_left(s, a)] {
                    return Err(Error::NotASubact(format!("{s}.{a} leaves the subset")));
                }
            }
            for t in 0..self.right.order() {
                if !inside[self.act_right(a, t)] {
                    return Err(Error::NotASubact(format!("{a}.{t} leaves the subset")));
                }
            }
        }
        Ok(inside)
    }

    /// The smallest subact containing `seeds` (orbit closure).
    pub fn subact_closure(&self, seeds: &[usize]) -> Result<Subact> {
        let mut inside = vec![false; self.size];
        let mut queue = VecDeque::new();
        for &a in seeds {
            if a >= self.size {
                return Err(Error::NotMember(a));
            }
            if !inside[a] {
                inside[a] = true;
                queue.push_back(a);
            }
        }
        while let Some(a) = queue.pop_front() {
            let images = (0..self.left.order())
                .map(|s| self.act_left(s, a))
                .chain((0..self.right.order()).map(|t| self.act_right(a, t)));
            for b in images.collect::<Vec<_>>() {
                if !inside[b] {
                    inside[b] = true;
                    queue.push_back(b);
                }
            }
        }
        Ok(Subact {
            members: (0..self.size).filter(|&i| inside[i]).collect(),
        })
    }

    /// All subacts, the empty one included. Limited to carriers of at most
    /// 16 points.
    pub fn subacts(&self) -> Result<Vec<Subact>> {
        if self.size > 16 {
            return Err(Error::CapExceeded(format!(
                "subact enumeration needs at most 16 points, got {}",
                self.size
            )));
        }
        let mut out = Vec::new();
        for mask in 0u32..(1 << self.size) {
            let members: Vec<usize> = (0..self.size).filter(|i| mask & (1 << i) != 0).collect();
            if self.is_subact(&members) {
                out.push(Subact { members });
            }
        }
        Ok(out)
    }

    /// The subact `B` as a biact in its own right (ids in sorted member
    /// order).
    pub fn restrict(&self, sub: &Subact) -> Result<FiniteBiact> {
        if sub.members.is_empty() {
            return Err(Error::EmptySubset);
        }
        self.check_subact(&sub.members)?;
        let local = local_index(self.size, &sub.members);
        let m = sub.members.len();
        let mut left = Vec::new();
        for s in 0..self.left.order() {
            for &a in &sub.members {
                left.push(local[self.act_left(s, a)]);
            }
        }
        let mut right = Vec::new();
        for &a in &sub.members {
            for t in 0..self.right.order() {
                right.push(local[self.act_right(a, t)]);
            }
        }
        let mut b = Self::from_parts(
            self.left.clone(),
            self.right.clone(),
            m,
            left,
            right,
            self.provenance.clone(),
        );
        if let Some(l) = &self.labels {
            b.labels = Some(sub.members.iter().map(|&i| l[i].clone()).collect());
        }
        Ok(b)
    }

    /// Rees quotient `A/B`: points outside `B` keep their images while those
    /// stay outside, everything else goes to the new point `0` (largest id).
    /// For `B = ∅` the result is `A` with an extra fixed point.
    pub fn rees_quotient(&self, sub: &Subact) -> Result<(FiniteBiact, Vec<usize>)> {
        let inside = self.check_subact(&sub.members)?;
        let outside: Vec<usize> = (0..self.size).filter(|&i| !inside[i]).collect();
        let zero = outside.len();
        let mut proj = vec![zero; self.size];
        for (i, &a) in outside.iter().enumerate() {
            proj[a] = i;
        }
        let m = zero + 1;
        let (ns, nt) = (self.left.order(), self.right.order());
        let mut left = vec![zero; ns * m];
        for s in 0..ns {
            for (i, &a) in outside.iter().enumerate() {
                left[s * m + i] = proj[self.act_left(s, a)];
            }
        }
        let mut right = vec![zero; m * nt];
        for (i, &a) in outside.iter().enumerate() {
            for t in 0..nt {
                right[i * nt + t] = proj[self.act_right(a, t)];
            }
        }
        let mut q = Self::from_parts(
            self.left.clone(),
            self.right.clone(),
            m,
            left,
            right,
            BiactProvenance::ReesQuotient,
        );
        if let Some(l) = &self.labels {
            let mut nl: Vec<String> = outside.iter().map(|&i| l[i].clone()).collect();
            nl.push("0".into());
            q.labels = Some(nl);
        }
        Ok((q, proj))
    }

    /// `S` as a `T`-biact, modulo `T`.
    pub fn relative_rees(s: &FiniteSemigroup, sub: &[usize]) -> Result<(FiniteBiact, Vec<usize>)> {
        let rel = Self::relative(s, sub)?;
        let members = match &rel.provenance {
            BiactProvenance::Relative { sub } => sub.clone(),
            _ => unreachable!(),
        };
        rel.rees_quotient(&Subact { members })
    }

    /// Carrier `S x T` with `s(a,b) = (sa,b)` and `(a,b)t = (a,bt)`. The
    /// point `(a,b)` has id `a * |T| + b`.
    pub fn product(s: &FiniteSemigroup, t: &FiniteSemigroup) -> Self {
        let (ns, nt) = (s.order(), t.order());
        let m = ns * nt;
        let mut left = Vec::with_capacity(ns * m);
        for x in 0..ns {
            for a in 0..ns {
                for b in 0..nt {
                    left.push(s.mul(x, a) * nt + b);
                }
            }
        }
        let mut right = Vec::with_capacity(m * nt);
        for a in 0..ns {
            for b in 0..nt {
                for y in 0..nt {
                    right.push(a * nt + t.mul(b, y));
                }
            }
        }
        let mut p = Self::from_parts(
            s.clone(),
            t.clone(),
            m,
            left,
            right,
            BiactProvenance::Product,
        );
        p.labels = Some(
            (0..ns)
                .flat_map(|a| (0..nt).map(move |b| (a, b)))
                .map(|(a, b)| format!("({},{})", s.label(a), t.label(b)))
                .collect(),
        );
        p
    }

    /// Restriction of scalars along homomorphisms `S' -> S` and `T' -> T`.
    pub fn pullback(
        &self,
        new_left: &FiniteSemigroup,
        h_left: &[usize],
        new_right: &FiniteSemigroup,
        h_right: &[usize],
    ) -> Result<FiniteBiact> {
        FiniteSemigroup::is_homomorphism(new_left, &self.left, h_left)?;
        FiniteSemigroup::is_homomorphism(new_right, &self.right, h_right)?;
        let m = self.size;
        let mut left = Vec::new();
        for &hs in h_left {
            for a in 0..m {
                left.push(self.act_left(hs, a));
            }
        }
        let mut right = Vec::new();
        for a in 0..m {
            for &ht in h_right {
                right.push(self.act_right(a, ht));
            }
        }
        let b = Self::from_parts(
            new_left.clone(),
            new_right.clone(),
            m,
            left,
            right,
            BiactProvenance::Pullback,
        );
        b.validate()?;
        Ok(b)
    }

    /// Relabels carrier points: point `a` becomes `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteBiact {
        let (ns, nt, m) = (self.left.order(), self.right.order(), self.size);
        let mut left = vec![0; ns * m];
        for s in 0..ns {
            for a in 0..m {
                left[s * m + perm[a]] = perm[self.act_left(s, a)];
            }
        }
        let mut right = vec![0; m * nt];
        for a in 0..m {
            for t in 0..nt {
                right[perm[a] * nt + t] = perm[self.act_right(a, t)];
            }
        }
        Self::from_parts(
            self.left.clone(),
            self.right.clone(),
            m,
            left,
            right,
            self.provenance.clone(),
        )
    }

    pub(crate) fn from_flat_unchecked(
        left: FiniteSemigroup,
        right: FiniteSemigroup,
        size: usize,
        left_action: Vec<usize>,
        right_action: Vec<usize>,
    ) -> Self {
        Self::from_parts(
            left,
            right,
            size,
            left_action,
            right_action,
            BiactProvenance::Tables,
        )
    }

    pub fn left_action(&self) -> &[usize] {
        &self.left_action
    }

    pub fn right_action(&self) -> &[usize] {
        &self.right_action
    }
}

fn local_index(n: usize, members: &[usize]) -> Vec<usize> {
    let mut local = vec![usize::MAX; n];
    for (i, &m) in members.iter().enumerate() {
        local[m] = i;
    }
    local
}

impl Actions for FiniteBiact {
    fn size(&self) -> usize {
        self.size
    }
    fn left_order(&self) -> usize {
        self.left.order()
    }
    fn right_order(&self) -> usize {
        self.right.order()
    }
    #[inline]
    fn act_left(&self, s: usize, a: usize) -> usize {
        self.left_action[s * self.size + a]
    }
    #[inline]
    fn act_right(&self, a: usize, t: usize) -> usize {
        self.right_action[a * self.right.order() + t]
    }
    fn left_edges(&self) -> &[usize] {
        self.left.left_edges()
    }
    fn right_edges(&self) -> &[usize] {
        self.right.right_edges()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::green::{GreenStructure, Preorder, Relation};
    use crate::semigroup::named::*;

    fn constants(s: &FiniteSemigroup) -> Vec<usize> {
        let mut c = vec![s.find_label("00").unwrap(), s.find_label("11").unwrap()];
        c.sort_unstable();
        c
    }

    fn group(s: &FiniteSemigroup) -> Vec<usize> {
        let mut g = vec![s.find_label("01").unwrap(), s.find_label("10").unwrap()];
        g.sort_unstable();
        g
    }

    #[test]
    fn validation() {
        let t = trivial();
        assert!(FiniteBiact::new(t.clone(), t.clone(), 1, vec![vec![0]], vec![vec![0]]).is_ok());
        let z2 = cyclic_group(2);
        let translate = vec![vec![0, 1], vec![1, 0]];
        let constant = vec![vec![0, 0], vec![0, 0]];
        assert!(matches!(
            FiniteBiact::new(z2.clone(), z2, 2, translate, constant),
            Err(Error::ActionAxiomViolation { .. })
        ));
    }

    #[test]
    fn regular_biact_matches_semigroup() {
        let s = t2();
        let a = FiniteBiact::regular(&s);
        assert_eq!(a.size(), 4);
        assert_eq!(a.left_action(), s.table());
        assert_eq!(a.right_action(), s.table());
        for s in crate::enumerate::semigroups_up_to(3).unwrap() {
            let (g, ga) = (
                GreenStructure::of(&s),
                GreenStructure::of(&FiniteBiact::regular(&s)),
            );
            assert!(g.same_structure(&ga));
        }
    }

    #[test]
    fn ideal_and_relative_biacts() {
        let s = t2();
        assert_eq!(FiniteBiact::ideal(&s, &constants(&s)).unwrap().size(), 2);
        assert!(matches!(
            FiniteBiact::ideal(&s, &group(&s)),
            Err(Error::NotAnIdeal(_))
        ));
        let z = min_chain(2);
        assert_eq!(FiniteBiact::ideal(&z, &[0]).unwrap().size(), 1);
        let rel = FiniteBiact::relative(&s, &group(&s)).unwrap();
        assert_eq!((rel.size(), rel.left().order()), (4, 2));
        let z2 = cyclic_group(2);
        let rel = FiniteBiact::relative(&z2, &[0]).unwrap();
        assert_eq!(rel.left_action(), &[0, 1]);
        assert_eq!(rel.right_action(), &[0, 1]);
    }

    #[test]
    fn rees_quotients() {
        let s = t2();
        let a = FiniteBiact::regular(&s);
        let all = Subact {
            members: (0..4).collect(),
        };
        assert_eq!(a.rees_quotient(&all).unwrap().0.size(), 1);
        let (q, proj) = FiniteBiact::relative_rees(&s, &group(&s)).unwrap();
        assert_eq!(q.size(), 3);
        let c = constants(&s);
        assert_ne!(proj[c[0]], proj[c[1]]);
        let (e, _) = a.rees_quotient(&Subact { members: vec![] }).unwrap();
        assert_eq!(e.size(), 5);
    }

    #[test]
    fn rees_quotient_matches_collapse_congruence() {
        for a in crate::enumerate::biacts_up_to(2, 3).unwrap() {
            for b in a
                .subacts()
                .unwrap()
                .into_iter()
                .filter(|b| b.members.len() > 1)
            {
                let (q, _) = a.rees_quotient(&b).unwrap();
                let pairs: Vec<(usize, usize)> =
                    b.members.windows(2).map(|w| (w[0], w[1])).collect();
                let rho = crate::congruence::congruence_closure(&a, &pairs).unwrap();
                let (q2, _) = crate::congruence::quotient_biact(&a, &rho).unwrap();
                assert!(crate::iso::find_biact_isomorphism(&q, &q2).is_some());
            }
        }
    }

    #[test]
    fn products() {
        assert_eq!(FiniteBiact::product(&trivial(), &trivial()).size(), 1);
        let s = t2();
        let p = FiniteBiact::product(&s, &s);
        assert_eq!(GreenStructure::of(&p).class_count(Relation::J), 6);
    }

    #[test]
    fn subact_closures() {
        let s = t2();
        let a = FiniteBiact::regular(&s);
        assert!(a.subact_closure(&[]).unwrap().members.is_empty());
        let c0 = s.find_label("00").unwrap();
        assert_eq!(a.subact_closure(&[c0]).unwrap().members, constants(&s));
        assert_eq!(
            a.subact_closure(&[0, 1, 2, 3]).unwrap().members,
            vec![0, 1, 2, 3]
        );
    }

    #[test]
    fn pullbacks() {
        let s = t2();
        let a = FiniteBiact::regular(&s);
        let id: Vec<usize> = s.elements().collect();
        let same = a.pullback(&s, &id, &s, &id).unwrap();
        assert_eq!(same.left_action(), a.left_action());
        // the trivial semigroup mapped onto the idempotent constant-0
        let c0 = s.find_label("00").unwrap();
        let p = a.pullback(&trivial(), &[c0], &s, &id).unwrap();
        let g = GreenStructure::of(&p);
        let (top, swap) = (s.find_label("01").unwrap(), s.find_label("10").unwrap());
        assert!(GreenStructure::of(&a).related(Relation::L, top, swap));
        assert!(!g.related(Relation::L, top, swap));
        assert!(g.le(Preorder::L, c0, top));
        assert_eq!(g.class_count(Relation::L), 4);
        assert!(matches!(
            a.pullback(&cyclic_group(2), &[c0, top], &s, &id),
            Err(Error::NotAHomomorphism(..))
        ));
    }
}
