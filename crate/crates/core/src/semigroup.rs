//! Finite semigroups given by a multiplication table.

use std::collections::HashMap;
use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::actions::Actions;
use crate::error::{Error, Result};

/// Above this order associativity is checked with Light's test.
pub const TRIPLE_SCAN_LIMIT: usize = 64;

/// Default cap on the size of a transformation closure.
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Table,
    Generated {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
    Quotient,
    Adjoined(Adjoin),
    Composite(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Adjoin {
    Identity,
    Zero,
}

/// A finite semigroup on the dense ids `0..order`.
///
/// The product `a * b` is `table[a * order + b]`. Construction always
/// validates associativity, so every value of this type is a semigroup.
#[derive(Clone, Debug)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    labels: Option<Vec<String>>,
    edges: Vec<usize>,
    generated: bool,
    provenance: Provenance,
}

/// Structural equality: same order, same table, same labels.
impl PartialEq for FiniteSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table && self.labels == other.labels
    }
}

impl Eq for FiniteSemigroup {}

/// A semigroup with a freshly adjoined identity or zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monoidization {
    pub semigroup: FiniteSemigroup,
    pub base_order: usize,
    pub adjoined: Adjoin,
    /// Id of the adjoined element (always `base_order`).
    pub new_id: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    Subsemigroup,
    LeftIdeal,
    RightIdeal,
    Ideal,
    BiIdeal,
}

impl Role {
    pub const ALL: [Role; 5] = [
        Role::Subsemigroup,
        Role::LeftIdeal,
        Role::RightIdeal,
        Role::Ideal,
        Role::BiIdeal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Role::Subsemigroup => "subsemigroup",
            Role::LeftIdeal => "left ideal",
            Role::RightIdeal => "right ideal",
            Role::Ideal => "ideal",
            Role::BiIdeal => "bi-ideal",
        }
    }
}

/// A validated subset of a semigroup together with the role it plays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetRole {
    pub members: Vec<usize>,
    pub role: Role,
}

impl FiniteSemigroup {
    /// Builds a semigroup from a square table, checking shape, ranges and
    /// associativity.
    pub fn from_table(order: usize, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != order {
            return Err(Error::BadShape(format!(
                "expected {order} rows, found {}",
                rows.len()
            )));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != order {
                return Err(Error::BadShape(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            table.extend(row);
        }
        Self::from_flat(order, table)
    }

    /// Builds a semigroup from a row-major flat table.
    pub fn from_flat(order: usize, table: Vec<usize>) -> Result<Self> {
        let s = Self::from_flat_unchecked(order, table)?;
        if let Err((a, b, c)) = s.associativity_violation() {
            return Err(Error::NonAssociative(a, b, c));
        }
        Ok(s)
    }

    /// Shape and range checks only. Used by enumeration code that has
    /// already established associativity.
    pub(crate) fn from_flat_unchecked(order: usize, table: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadShape(
                "a semigroup needs at least one element".into(),
            ));
        }
        if table.len() != order * order {
            return Err(Error::BadShape(format!(
                "expected {} entries, found {}",
                order * order,
                table.len()
            )));
        }
        if let Some(i) = table.iter().position(|&v| v >= order) {
            return Err(Error::BadEntry {
                row: i / order,
                col: i % order,
                value: table[i],
                order,
            });
        }
        Ok(FiniteSemigroup {
            order,
            table,
            labels: None,
            edges: (0..order).collect(),
            generated: false,
            provenance: Provenance::Table,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::BadShape(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub(crate) fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Whether the edge set used for Cayley graphs is a generating set
    /// rather than the whole semigroup.
    pub fn is_generated(&self) -> bool {
        self.generated
    }

    /// Same semigroup, Cayley edges over every element.
    pub fn with_all_edges(&self) -> Self {
        let mut s = self.clone();
        s.edges = (0..self.order).collect();
        s.generated = false;
        s
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Direct scan over all triples.
    pub fn triple_scan(&self) -> std::result::Result<(), (usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err((a, b, c));
                    }
                }
            }
        }
        Ok(())
    }

    /// Light's associativity test over a generating set of the magma.
    ///
    /// If `x(gy) = (xg)y` holds for every generator `g`, the set of such
    /// middle factors is closed under products and so is everything.
    pub fn light_test(&self) -> std::result::Result<(), (usize, usize, usize)> {
        let n = self.order;
        for g in self.magma_generators() {
            for x in 0..n {
                let xg = self.mul(x, g);
                for y in 0..n {
                    if self.mul(x, self.mul(g, y)) != self.mul(xg, y) {
                        return Err((x, g, y));
                    }
                }
            }
        }
        Ok(())
    }

    fn associativity_violation(&self) -> std::result::Result<(), (usize, usize, usize)> {
        if self.order <= TRIPLE_SCAN_LIMIT {
            self.triple_scan()
        } else {
            self.light_test()
        }
    }

    /// Greedy generating set: take each element not yet produced by the
    /// generators chosen so far. Closure uses products on both sides, so it
    /// is valid before associativity is known.
    pub fn magma_generators(&self) -> Vec<usize> {
        let n = self.order;
        let mut inside = vec![false; n];
        let mut members: Vec<usize> = Vec::new();
        let mut gens = Vec::new();
        for cand in 0..n {
            if inside[cand] {
                continue;
            }
            gens.push(cand);
            let mut queue = VecDeque::from([cand]);
            inside[cand] = true;
            members.push(cand);
            while let Some(x) = queue.pop_front() {
                let snapshot = members.len();
                for i in 0..snapshot {
                    let y = members[i];
                    for p in [self.mul(x, y), self.mul(y, x)] {
                        if !inside[p] {
                            inside[p] = true;
                            members.push(p);
                            queue.push_back(p);
                        }
                    }
                }
            }
        }
        gens
    }

    /// Closure of a set of transformations of `{0..degree}` under
    /// composition, where `f * g` applies `f` first and then `g`.
    pub fn from_transformations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        Self::from_transformations_capped(degree, generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn from_transformations_capped(
        degree: usize,
        generators: &[Vec<usize>],
        cap: usize,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        for (index, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(Error::DegreeMismatch {
                    index,
                    expected: degree,
                    found: g.len(),
                });
            }
            if let Some(col) = g.iter().position(|&v| v >= degree) {
                return Err(Error::BadEntry {
                    row: index,
                    col,
                    value: g[col],
                    order: degree,
                });
            }
        }

        let compose =
            |f: &[usize], g: &[usize]| -> Vec<usize> { f.iter().map(|&i| g[i]).collect() };

        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut elements: Vec<Vec<usize>> = Vec::new();
        let mut gen_ids = Vec::new();
        for g in generators {
            let id = *index.entry(g.clone()).or_insert_with(|| {
                elements.push(g.clone());
                elements.len() - 1
            });
            if !gen_ids.contains(&id) {
                gen_ids.push(id);
            }
        }
        if elements.len() > cap {
            return Err(Error::SizeLimitExceeded { limit: cap });
        }
        // Breadth-first over the right Cayley graph.
        let mut next = 0;
        while next < elements.len() {
            for &g in &gen_ids {
                let p = compose(&elements[next], &elements[g]);
                if !index.contains_key(&p) {
                    if elements.len() == cap {
                        return Err(Error::SizeLimitExceeded { limit: cap });
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            next += 1;
        }

        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for f in &elements {
            for g in &elements {
                table.push(index[&compose(f, g)]);
            }
        }
        let labels = elements
            .iter()
            .map(|e| {
                if degree <= 10 {
                    e.iter()
                        .map(|d| char::from_digit(*d as u32, 10).unwrap())
                        .collect()
                } else {
                    format!("{e:?}")
                }
            })
            .collect();
        let mut s = Self::from_flat_unchecked(n, table)?;
        s.labels = Some(labels);
        s.edges = gen_ids;
        s.generated = true;
        s.provenance = Provenance::Generated {
            degree,
            generators: generators.to_vec(),
        };
        Ok(s)
    }

    pub fn identity(&self) -> Option<usize> {
        (0..self.order)
            .find(|&e| (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn has_identity(&self) -> bool {
        self.identity().is_some()
    }

    pub fn zero(&self) -> Option<usize> {
        (0..self.order)
            .find(|&z| (0..self.order).all(|x| self.mul(z, x) == z && self.mul(x, z) == z))
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| self.is_idempotent(a)).collect()
    }

    /// `a^n` for `n >= 1`.
    pub fn power(&self, a: usize, n: usize) -> usize {
        assert!(n >= 1, "powers start at 1");
        (1..n).fold(a, |acc, _| self.mul(acc, a))
    }

    /// Adjoins a fresh identity or zero, even when one already exists.
    pub fn adjoin(&self, kind: Adjoin) -> Monoidization {
        let n = self.order;
        let m = n + 1;
        let mut table = vec![0; m * m];
        for a in 0..m {
            for b in 0..m {
                table[a * m + b] = match (a == n, b == n, kind) {
                    (false, false, _) => self.mul(a, b),
                    (true, _, Adjoin::Identity) => b,
                    (_, true, Adjoin::Identity) => a,
                    (_, _, Adjoin::Zero) => n,
                };
            }
        }
        let mut s = Self::from_flat_unchecked(m, table).expect("adjoined table is well formed");
        if let Some(l) = &self.labels {
            let mut l = l.clone();
            l.push(match kind {
                Adjoin::Identity => "1".into(),
                Adjoin::Zero => "0".into(),
            });
            s.labels = Some(l);
        }
        s.provenance = Provenance::Adjoined(kind);
        Monoidization {
            semigroup: s,
            base_order: n,
            adjoined: kind,
            new_id: n,
        }
    }

    fn membership(&self, members: &[usize]) -> Result<Vec<bool>> {
        let mut inside = vec![false; self.order];
        for &m in members {
            if m >= self.order {
                return Err(Error::NotMember(m));
            }
            inside[m] = true;
        }
        Ok(inside)
    }

    /// Checks the closure condition of `role` for `members`.
    pub fn classify_subset(&self, members: &[usize], role: Role) -> Result<SubsetRole> {
        if members.is_empty() {
            return Err(Error::EmptySubset);
        }
        let inside = self.membership(members)?;
        let mut sorted: Vec<usize> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let n = self.order;
        let violation = |detail: String| Error::RoleViolation {
            role: role.name().into(),
            detail,
        };
        let left = matches!(role, Role::LeftIdeal | Role::Ideal);
        let right = matches!(role, Role::RightIdeal | Role::Ideal);
        for &b in &sorted {
            if left {
                if let Some(s) = (0..n).find(|&s| !inside[self.mul(s, b)]) {
                    return Err(violation(format!(
                        "{s}*{b} = {} is outside",
                        self.mul(s, b)
                    )));
                }
            }
            if right {
                if let Some(s) = (0..n).find(|&s| !inside[self.mul(b, s)]) {
                    return Err(violation(format!(
                        "{b}*{s} = {} is outside",
                        self.mul(b, s)
                    )));
                }
            }
            for &c in &sorted {
                if matches!(role, Role::Subsemigroup | Role::BiIdeal) && !inside[self.mul(b, c)] {
                    return Err(violation(format!(
                        "{b}*{c} = {} is outside",
                        self.mul(b, c)
                    )));
                }
                if role == Role::BiIdeal {
                    for s in 0..n {
                        let p = self.mul(self.mul(b, s), c);
                        if !inside[p] {
                            return Err(violation(format!("{b}*{s}*{c} = {p} is outside")));
                        }
                    }
                }
            }
        }
        Ok(SubsetRole {
            members: sorted,
            role,
        })
    }

    pub fn is_subset_role(&self, members: &[usize], role: Role) -> bool {
        self.classify_subset(members, role).is_ok()
    }

    /// Every non-empty subset playing `role`, as sorted member lists.
    /// Limited to order at most 16.
    pub fn subsets_with_role(&self, role: Role) -> Result<Vec<Vec<usize>>> {
        if self.order > 16 {
            return Err(Error::CapExceeded(format!(
                "subset enumeration needs order <= 16, got {}",
                self.order
            )));
        }
        let mut out = Vec::new();
        for mask in 1u32..(1 << self.order) {
            let members: Vec<usize> = (0..self.order).filter(|i| mask & (1 << i) != 0).collect();
            if self.is_subset_role(&members, role) {
                out.push(members);
            }
        }
        Ok(out)
    }

    /// The smallest subsemigroup containing `seeds`.
    pub fn subsemigroup_closure(&self, seeds: &[usize]) -> Result<Vec<usize>> {
        if seeds.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut inside = self.membership(seeds)?;
        let mut members: Vec<usize> = (0..self.order).filter(|&i| inside[i]).collect();
        let mut queue: VecDeque<usize> = members.iter().copied().collect();
        while let Some(x) = queue.pop_front() {
            let snapshot = members.len();
            for i in 0..snapshot {
                let y = members[i];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !inside[p] {
                        inside[p] = true;
                        members.push(p);
                        queue.push_back(p);
                    }
                }
            }
        }
        members.sort_unstable();
        Ok(members)
    }

    /// The principal two-sided ideal `S¹aS¹`.
    pub fn principal_ideal(&self, a: usize) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[a] = true;
        for s in 0..self.order {
            inside[self.mul(s, a)] = true;
            inside[self.mul(a, s)] = true;
            for t in 0..self.order {
                inside[self.mul(self.mul(s, a), t)] = true;
            }
        }
        (0..self.order).filter(|&i| inside[i]).collect()
    }

    /// The subsemigroup on `members` with ids renumbered in increasing
    /// order. Returns the semigroup and the embedding (new id -> old id).
    pub fn subsemigroup(&self, members: &[usize]) -> Result<(FiniteSemigroup, Vec<usize>)> {
        let role = self
            .classify_subset(members, Role::Subsemigroup)
            .map_err(|e| Error::NotASubsemigroup(e.to_string()))?;
        let emb = role.members;
        let mut local = vec![usize::MAX; self.order];
        for (i, &m) in emb.iter().enumerate() {
            local[m] = i;
        }
        let k = emb.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &emb {
            for &b in &emb {
                table.push(local[self.mul(a, b)]);
            }
        }
        let mut s = Self::from_flat_unchecked(k, table)?;
        if let Some(l) = &self.labels {
            s.labels = Some(emb.iter().map(|&i| l[i].clone()).collect());
        }
        s.provenance = Provenance::Composite("subsemigroup".into());
        Ok((s, emb))
    }

    /// Rees quotient by an ideal: `S∖I` keeps its products when they stay
    /// outside `I`, everything else goes to the new zero.
    ///
    /// Returns the quotient and the projection (old id -> new id). The zero
    /// of the quotient has the largest id.
    pub fn rees_quotient(&self, ideal: &[usize]) -> Result<(FiniteSemigroup, Vec<usize>)> {
        let role = self
            .classify_subset(ideal, Role::Ideal)
            .map_err(|e| Error::NotAnIdeal(e.to_string()))?;
        let inside = self.membership(&role.members)?;
        let outside: Vec<usize> = (0..self.order).filter(|&i| !inside[i]).collect();
        let zero = outside.len();
        let mut proj = vec![zero; self.order];
        for (i, &a) in outside.iter().enumerate() {
            proj[a] = i;
        }
        let m = zero + 1;
        let mut table = vec![zero; m * m];
        for (i, &a) in outside.iter().enumerate() {
            for (j, &b) in outside.iter().enumerate() {
                table[i * m + j] = proj[self.mul(a, b)];
            }
        }
        let mut s = Self::from_flat_unchecked(m, table)?;
        if let Some(l) = &self.labels {
            let mut nl: Vec<String> = outside.iter().map(|&i| l[i].clone()).collect();
            nl.push("0".into());
            s.labels = Some(nl);
        }
        s.provenance = Provenance::Quotient;
        Ok((s, proj))
    }

    /// Disjoint union of `s` and `t` with a new zero; all cross products
    /// are zero. Ids: `s` first, then `t` offset by `|s|`, zero last.
    pub fn zero_direct_union(s: &FiniteSemigroup, t: &FiniteSemigroup) -> FiniteSemigroup {
        let (n, k) = (s.order, t.order);
        let m = n + k + 1;
        let zero = n + k;
        let mut table = vec![zero; m * m];
        for a in 0..n {
            for b in 0..n {
                table[a * m + b] = s.mul(a, b);
            }
        }
        for a in 0..k {
            for b in 0..k {
                table[(n + a) * m + n + b] = n + t.mul(a, b);
            }
        }
        let mut u = Self::from_flat_unchecked(m, table).expect("well formed");
        u.provenance = Provenance::Composite("0-direct union".into());
        u
    }

    pub fn is_homomorphism(
        src: &FiniteSemigroup,
        dst: &FiniteSemigroup,
        map: &[usize],
    ) -> Result<()> {
        if map.len() != src.order {
            return Err(Error::BadShape(format!(
                "map has {} entries, source has {} elements",
                map.len(),
                src.order
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= dst.order) {
            return Err(Error::NotMember(v));
        }
        for a in 0..src.order {
            for b in 0..src.order {
                if map[src.mul(a, b)] != dst.mul(map[a], map[b]) {
                    return Err(Error::NotAHomomorphism(a, b));
                }
            }
        }
        Ok(())
    }

    /// Whether every product lands on a single zero element.
    pub fn is_null(&self) -> bool {
        match self.zero() {
            Some(z) => self.table.iter().all(|&p| p == z),
            None => false,
        }
    }

    /// Permutes element ids: element `a` becomes `perm[a]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSemigroup {
        let n = self.order;
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        Self::from_flat_unchecked(n, table).expect("permutation keeps shape")
    }
}

impl Actions for FiniteSemigroup {
    fn size(&self) -> usize {
        self.order
    }
    fn left_order(&self) -> usize {
        self.order
    }
    fn right_order(&self) -> usize {
        self.order
    }
    fn act_left(&self, s: usize, a: usize) -> usize {
        self.mul(s, a)
    }
    fn act_right(&self, a: usize, t: usize) -> usize {
        self.mul(a, t)
    }
    fn left_edges(&self) -> &[usize] {
        &self.edges
    }
    fn right_edges(&self) -> &[usize] {
        &self.edges
    }
}

/// Small named semigroups used throughout tests and examples.
pub mod named {
    use super::*;

    pub fn trivial() -> FiniteSemigroup {
        FiniteSemigroup::from_table(1, vec![vec![0]]).unwrap()
    }

    /// `x * y = x`.
    pub fn left_zero(n: usize) -> FiniteSemigroup {
        let table = (0..n * n).map(|i| i / n).collect();
        FiniteSemigroup::from_flat(n, table).unwrap()
    }

    /// `x * y = y`.
    pub fn right_zero(n: usize) -> FiniteSemigroup {
        let table = (0..n * n).map(|i| i % n).collect();
        FiniteSemigroup::from_flat(n, table).unwrap()
    }

    /// `(Z_n, +)`.
    pub fn cyclic_group(n: usize) -> FiniteSemigroup {
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        FiniteSemigroup::from_flat(n, table).unwrap()
    }

    /// The chain `0 < 1 < ... < n-1` under `min`.
    pub fn min_chain(n: usize) -> FiniteSemigroup {
        let table = (0..n * n).map(|i| (i / n).min(i % n)).collect();
        FiniteSemigroup::from_flat(n, table).unwrap()
    }

    /// Null semigroup on `n` elements with zero `0`.
    pub fn null(n: usize) -> FiniteSemigroup {
        FiniteSemigroup::from_flat(n, vec![0; n * n]).unwrap()
    }

    /// The full transformation monoid on two points, generated by the swap
    /// and the constant map to 0. Labels are image strings: `01` identity,
    /// `10` swap, `00` and `11` the constants.
    pub fn t2() -> FiniteSemigroup {
        FiniteSemigroup::from_transformations(2, &[vec![1, 0], vec![0, 0]]).unwrap()
    }

    /// The full transformation monoid on three points.
    pub fn t3() -> FiniteSemigroup {
        FiniteSemigroup::from_transformations(3, &[vec![1, 2, 0], vec![1, 0, 2], vec![0, 0, 2]])
            .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    fn t2_ids() -> (FiniteSemigroup, [usize; 4]) {
        let s = t2();
        let id = |l| s.find_label(l).unwrap();
        let ids = [id("01"), id("10"), id("00"), id("11")];
        (s, ids)
    }

    #[test]
    fn table_validation() {
        assert_eq!(trivial().order(), 1);
        // rock 0, paper 1, scissors 2: the winner of each pair
        let rps = vec![vec![0, 1, 0], vec![1, 1, 2], vec![0, 2, 2]];
        assert!(matches!(
            FiniteSemigroup::from_table(3, rps),
            Err(Error::NonAssociative(..))
        ));
        assert!(FiniteSemigroup::from_table(2, vec![vec![0, 0], vec![1, 1]]).is_ok());
        assert!(matches!(
            FiniteSemigroup::from_table(2, vec![vec![0, 2], vec![1, 1]]),
            Err(Error::BadEntry { .. })
        ));
    }

    #[test]
    fn transformation_closure() {
        assert_eq!(
            FiniteSemigroup::from_transformations(2, &[vec![0, 1]])
                .unwrap()
                .order(),
            1
        );
        assert_eq!(t2().order(), 4);
        assert_eq!(t3().order(), 27);
        assert!(matches!(
            FiniteSemigroup::from_transformations(2, &[]),
            Err(Error::EmptyGeneratorSet)
        ));
        assert!(matches!(
            FiniteSemigroup::from_transformations(2, &[vec![0, 1, 2]]),
            Err(Error::DegreeMismatch { .. })
        ));
        assert!(matches!(
            FiniteSemigroup::from_transformations_capped(
                3,
                &[vec![1, 2, 0], vec![1, 0, 2], vec![0, 0, 2]],
                10
            ),
            Err(Error::SizeLimitExceeded { limit: 10 })
        ));
    }

    #[test]
    fn composition_applies_left_factor_first() {
        let s = FiniteSemigroup::from_transformations(2, &[vec![1, 0], vec![0, 0]]).unwrap();
        let (swap, c0) = (s.find_label("10").unwrap(), s.find_label("00").unwrap());
        // swap then constant-0 is constant-0; constant-0 then swap is constant-1
        assert_eq!(s.mul(swap, c0), c0);
        assert_eq!(s.label(s.mul(c0, swap)), "11");
    }

    #[test]
    fn adjoin_always_adds_a_fresh_element() {
        let m = trivial().adjoin(Adjoin::Identity).semigroup;
        assert_eq!(m.order(), 2);
        assert_eq!(m.identity(), Some(1));
        let z = left_zero(2).adjoin(Adjoin::Zero).semigroup;
        assert_eq!(z.order(), 3);
        assert_eq!(z.zero(), Some(2));
        let (s, _) = t2_ids();
        let m = s.adjoin(Adjoin::Identity);
        assert_eq!(m.semigroup.order(), 5);
        assert_eq!(m.new_id, 4);
        assert!(s.has_identity());
    }

    #[test]
    fn subset_roles() {
        let (s, [_, _, c0, c1]) = t2_ids();
        let mut constants = vec![c0, c1];
        constants.sort_unstable();
        assert!(s.classify_subset(&constants, Role::Ideal).is_ok());
        let z4 = cyclic_group(4);
        assert!(matches!(
            z4.classify_subset(&[1, 3], Role::Subsemigroup),
            Err(Error::RoleViolation { .. })
        ));
        let all: Vec<usize> = s.elements().collect();
        assert!(s.is_subset_role(&all, Role::BiIdeal));
        for i in s.subsets_with_role(Role::Ideal).unwrap() {
            for r in [
                Role::LeftIdeal,
                Role::RightIdeal,
                Role::BiIdeal,
                Role::Subsemigroup,
            ] {
                assert!(s.is_subset_role(&i, r));
            }
        }
    }

    #[test]
    fn rees_quotients() {
        let (s, [id, swap, c0, c1]) = t2_ids();
        let all: Vec<usize> = s.elements().collect();
        assert_eq!(s.rees_quotient(&all).unwrap().0.order(), 1);
        let mut constants = vec![c0, c1];
        constants.sort_unstable();
        let (q, proj) = s.rees_quotient(&constants).unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(q.mul(proj[swap], proj[swap]), proj[id]);
        assert_eq!(proj[c0], proj[c1]);
        assert_eq!(q.zero(), Some(proj[c0]));
        let (q, _) = min_chain(2).rees_quotient(&[0]).unwrap();
        assert!(crate::iso::find_isomorphism(&q, &min_chain(2)).is_some());
        assert!(matches!(s.rees_quotient(&[id]), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn zero_direct_unions() {
        let u = FiniteSemigroup::zero_direct_union(&trivial(), &trivial());
        assert_eq!(u.order(), 3);
        let u = FiniteSemigroup::zero_direct_union(&left_zero(2), &right_zero(2));
        assert_eq!(u.order(), 5);
        assert!(u.triple_scan().is_ok());
        let j = |x: &FiniteSemigroup| crate::GreenStructure::of(x).class_count(crate::Relation::J);
        let (s, _) = t2_ids();
        assert_eq!(
            j(&FiniteSemigroup::zero_direct_union(&s, &left_zero(2))),
            j(&s) + j(&left_zero(2)) + 1
        );
    }

    #[test]
    fn light_test_agrees_with_triple_scan() {
        for s in crate::enumerate::semigroups_up_to(3).unwrap() {
            assert_eq!(s.light_test().is_ok(), s.triple_scan().is_ok());
        }
        let bad = FiniteSemigroup::from_flat_unchecked(3, vec![0, 1, 0, 1, 1, 2, 0, 2, 2]).unwrap();
        assert!(bad.light_test().is_err() && bad.triple_scan().is_err());
    }
}
