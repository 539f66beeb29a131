//! Green's preorders, equivalences and class posets for finite semigroups
//! and biacts.
//!
//! `a ≤_L b` holds when `a` is reachable from `b` in the digraph whose
//! edges are the left translations `x -> s·x`; dually for `≤_R`, and `≤_J`
//! uses both kinds of edge. Classes are the strongly connected components,
//! numbered by least member, and the class posets are the condensations.

use serde::{Deserialize, Serialize};

use crate::actions::Actions;
use crate::biact::FiniteBiact;
use crate::bitset::BitSet;
use crate::congruence::Partition;
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Preorder {
    L,
    R,
    J,
}

impl Preorder {
    pub const ALL: [Preorder; 3] = [Preorder::L, Preorder::R, Preorder::J];

    pub fn name(self) -> &'static str {
        match self {
            Preorder::L => "L",
            Preorder::R => "R",
            Preorder::J => "J",
        }
    }
}

impl std::str::FromStr for Preorder {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "L" | "l" => Ok(Preorder::L),
            "R" | "r" => Ok(Preorder::R),
            "J" | "j" => Ok(Preorder::J),
            other => Err(format!("unknown preorder {other:?} (expected L, R or J)")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    L,
    R,
    J,
    H,
    D,
}

impl Relation {
    pub const ALL: [Relation; 5] = [
        Relation::L,
        Relation::R,
        Relation::J,
        Relation::H,
        Relation::D,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::L => "L",
            Relation::R => "R",
            Relation::J => "J",
            Relation::H => "H",
            Relation::D => "D",
        }
    }
}

impl From<Preorder> for Relation {
    fn from(p: Preorder) -> Self {
        match p {
            Preorder::L => Relation::L,
            Preorder::R => Relation::R,
            Preorder::J => Relation::J,
        }
    }
}

/// One preorder's classes and the partial order between them.
#[derive(Clone, Debug)]
struct ClassOrder {
    partition: Partition,
    members: Vec<Vec<usize>>,
    /// `below[c]` holds every class `d` with `d ≤ c`, `c` included.
    below: Vec<BitSet>,
    /// Covering pairs `(upper, lower)`, sorted.
    covers: Vec<(usize, usize)>,
}

/// Green structure of a finite semigroup or biact.
#[derive(Clone, Debug)]
pub struct GreenStructure {
    size: usize,
    l: ClassOrder,
    r: ClassOrder,
    j: ClassOrder,
    h: Partition,
    d: Partition,
    d_is_composite: bool,
}

/// Strongly connected components of `adj`, iteratively (Tarjan). Returns
/// the component id of each node; components are numbered in emission
/// order, so every edge goes from a component to one with id <= its own.
fn tarjan(adj: &[Vec<usize>]) -> (Vec<usize>, usize) {
    let n = adj.len();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut comp = vec![UNSEEN; n];
    let mut next_index = 0;
    let mut ncomp = 0;
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        while let Some(top) = call.last_mut() {
            let v = top.0;
            if top.1 < adj[v].len() {
                let w = adj[v][top.1];
                top.1 += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("tarjan stack");
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    (comp, ncomp)
}

impl ClassOrder {
    fn build(adj: &[Vec<usize>]) -> Self {
        let (raw, nraw) = tarjan(adj);
        // reachable-set per raw component, in emission order
        let mut raw_below: Vec<BitSet> = (0..nraw).map(|_| BitSet::new(nraw)).collect();
        let mut raw_members: Vec<Vec<usize>> = vec![Vec::new(); nraw];
        for (v, &c) in raw.iter().enumerate() {
            raw_members[c].push(v);
        }
        for c in 0..nraw {
            raw_below[c].insert(c);
            for &v in &raw_members[c] {
                for &w in &adj[v] {
                    let d = raw[w];
                    if d != c && !raw_below[c].contains(d) {
                        let sub = raw_below[d].clone();
                        raw_below[c].union_with(&sub);
                    }
                }
            }
        }
        let partition = Partition::from_ids(&raw);
        let k = partition.block_count();
        let mut to_new = vec![0; nraw];
        for (v, &c) in raw.iter().enumerate() {
            to_new[c] = partition.block_of(v);
        }
        let mut below: Vec<BitSet> = (0..k).map(|_| BitSet::new(k)).collect();
        for c in 0..nraw {
            for d in raw_below[c].iter() {
                below[to_new[c]].insert(to_new[d]);
            }
        }
        let members = partition.members();
        let mut covers = Vec::new();
        for c in 0..k {
            let mut strict = below[c].clone();
            strict.remove(c);
            let mut cover = strict.clone();
            for e in strict.iter() {
                let mut under = below[e].clone();
                under.remove(e);
                cover.difference_with(&under);
            }
            covers.extend(cover.iter().map(|d| (c, d)));
        }
        covers.sort_unstable();
        ClassOrder {
            partition,
            members,
            below,
            covers,
        }
    }

    fn le_class(&self, c: usize, d: usize) -> bool {
        self.below[d].contains(c)
    }
}

fn adjacency<X: Actions + ?Sized>(x: &X, left: bool, right: bool) -> Vec<Vec<usize>> {
    let n = x.size();
    (0..n)
        .map(|a| {
            let mut out = Vec::new();
            if left {
                out.extend(x.left_edges().iter().map(|&s| x.act_left(s, a)));
            }
            if right {
                out.extend(x.right_edges().iter().map(|&t| x.act_right(a, t)));
            }
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect()
}

impl GreenStructure {
    pub fn of<X: Actions + ?Sized>(x: &X) -> Self {
        let l = ClassOrder::build(&adjacency(x, true, false));
        let r = ClassOrder::build(&adjacency(x, false, true));
        let j = ClassOrder::build(&adjacency(x, true, true));
        let h = l.partition.meet(&r.partition);
        let d = l.partition.join(&r.partition);
        let mut g = GreenStructure {
            size: x.size(),
            l,
            r,
            j,
            h,
            d,
            d_is_composite: false,
        };
        g.d_is_composite = g.check_d_composite();
        g
    }

    pub fn of_semigroup(s: &FiniteSemigroup) -> Self {
        Self::of(s)
    }

    pub fn of_biact(a: &FiniteBiact) -> Self {
        Self::of(a)
    }

    /// Within each block of the join `L ∨ R`, every L-class meets every
    /// R-class; that is `L∘R = R∘L = L ∨ R`.
    fn check_d_composite(&self) -> bool {
        let mut present = std::collections::HashSet::new();
        for a in 0..self.size {
            present.insert((self.l.partition.block_of(a), self.r.partition.block_of(a)));
        }
        let mut ls: Vec<Vec<usize>> = vec![Vec::new(); self.d.block_count()];
        let mut rs: Vec<Vec<usize>> = vec![Vec::new(); self.d.block_count()];
        for a in 0..self.size {
            let db = self.d.block_of(a);
            ls[db].push(self.l.partition.block_of(a));
            rs[db].push(self.r.partition.block_of(a));
        }
        for db in 0..self.d.block_count() {
            ls[db].sort_unstable();
            ls[db].dedup();
            rs[db].sort_unstable();
            rs[db].dedup();
            for &lc in &ls[db] {
                for &rc in &rs[db] {
                    if !present.contains(&(lc, rc)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn order_of(&self, k: Preorder) -> &ClassOrder {
        match k {
            Preorder::L => &self.l,
            Preorder::R => &self.r,
            Preorder::J => &self.j,
        }
    }

    pub fn partition(&self, rel: Relation) -> &Partition {
        match rel {
            Relation::L => &self.l.partition,
            Relation::R => &self.r.partition,
            Relation::J => &self.j.partition,
            Relation::H => &self.h,
            Relation::D => &self.d,
        }
    }

    pub fn class_of(&self, rel: Relation, a: usize) -> usize {
        self.partition(rel).block_of(a)
    }

    pub fn class_count(&self, rel: Relation) -> usize {
        self.partition(rel).block_count()
    }

    pub fn classes(&self, rel: Relation) -> Vec<Vec<usize>> {
        match rel {
            Relation::L => self.l.members.clone(),
            Relation::R => self.r.members.clone(),
            Relation::J => self.j.members.clone(),
            _ => self.partition(rel).members(),
        }
    }

    pub fn related(&self, rel: Relation, a: usize, b: usize) -> bool {
        self.partition(rel).same(a, b)
    }

    /// `a ≤_K b`.
    pub fn le(&self, k: Preorder, a: usize, b: usize) -> bool {
        let o = self.order_of(k);
        o.le_class(o.partition.block_of(a), o.partition.block_of(b))
    }

    /// `a <_K b`.
    pub fn lt(&self, k: Preorder, a: usize, b: usize) -> bool {
        self.le(k, a, b) && !self.le(k, b, a)
    }

    pub fn class_le(&self, k: Preorder, c: usize, d: usize) -> bool {
        self.order_of(k).le_class(c, d)
    }

    /// Covering pairs `(upper, lower)` of the class poset.
    pub fn covers(&self, k: Preorder) -> &[(usize, usize)] {
        &self.order_of(k).covers
    }

    pub fn d_is_composite(&self) -> bool {
        self.d_is_composite
    }

    /// Repeatedly strips minimal classes; succeeds iff every class is
    /// eventually stripped, i.e. every non-empty set of classes has a
    /// minimal member.
    pub fn peel_minimal(&self, k: Preorder) -> bool {
        let o = self.order_of(k);
        let n = o.members.len();
        let mut remaining: Vec<bool> = vec![true; n];
        let mut left = n;
        while left > 0 {
            let minimal: Vec<usize> = (0..n)
                .filter(|&c| remaining[c])
                .filter(|&c| !(0..n).any(|d| d != c && remaining[d] && o.le_class(d, c)))
                .collect();
            if minimal.is_empty() {
                return false;
            }
            for c in minimal {
                remaining[c] = false;
                left -= 1;
            }
        }
        true
    }

    /// Checks the structural invariants; returns a description of each
    /// violation found.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.h != self.l.partition.meet(&self.r.partition) {
            out.push("H differs from L ∩ R".into());
        }
        if !self.d_is_composite {
            out.push("L∘R, R∘L and L ∨ R disagree".into());
        }
        for (name, p) in [
            ("L", &self.l.partition),
            ("R", &self.r.partition),
            ("D", &self.d),
        ] {
            if !p.refines(&self.j.partition) {
                out.push(format!("{name} is not contained in J"));
            }
        }
        for k in Preorder::ALL {
            let o = self.order_of(k);
            let n = o.members.len();
            for c in 0..n {
                for d in 0..n {
                    if c != d && o.le_class(c, d) && o.le_class(d, c) {
                        out.push(format!(
                            "{} poset has a cycle through {c} and {d}",
                            k.name()
                        ));
                    }
                }
            }
            for &(up, low) in &o.covers {
                if up == low || !o.le_class(low, up) {
                    out.push(format!("{} cover ({up},{low}) is not strict", k.name()));
                }
                let between =
                    (0..n).any(|e| e != up && e != low && o.le_class(low, e) && o.le_class(e, up));
                if between {
                    out.push(format!(
                        "{} cover ({up},{low}) is not a covering pair",
                        k.name()
                    ));
                }
            }
            if !self.peel_minimal(k) {
                out.push(format!("{} poset has no minimal-element peeling", k.name()));
            }
        }
        for a in 0..self.size {
            for b in 0..self.size {
                if self.le(Preorder::L, a, b) && !self.le(Preorder::J, a, b) {
                    out.push(format!("{a} ≤L {b} but not ≤J"));
                }
                if self.le(Preorder::R, a, b) && !self.le(Preorder::J, a, b) {
                    out.push(format!("{a} ≤R {b} but not ≤J"));
                }
            }
        }
        out
    }

    /// Egg-box grid of a D-class: rows are its R-classes, columns its
    /// L-classes, cells the H-classes where they meet.
    pub fn eggbox(&self, d_class: usize) -> Result<EggBox> {
        if d_class >= self.d.block_count() {
            return Err(Error::UnknownClass {
                relation: "D".into(),
                id: d_class,
            });
        }
        let members: Vec<usize> = (0..self.size)
            .filter(|&a| self.d.block_of(a) == d_class)
            .collect();
        let grid = self.grid(&members);
        for (i, row) in grid.cells.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if cell.is_none() {
                    return Err(Error::EmptyEggBoxCell {
                        d_class,
                        row: i,
                        col: j,
                    });
                }
            }
        }
        Ok(EggBox {
            class: d_class,
            ..grid
        })
    }

    /// Egg-box style grid of a J-class. Cells may be empty.
    pub fn j_grid(&self, j_class: usize) -> Result<EggBox> {
        if j_class >= self.j.partition.block_count() {
            return Err(Error::UnknownClass {
                relation: "J".into(),
                id: j_class,
            });
        }
        let members: Vec<usize> = (0..self.size)
            .filter(|&a| self.j.partition.block_of(a) == j_class)
            .collect();
        Ok(EggBox {
            class: j_class,
            ..self.grid(&members)
        })
    }

    fn grid(&self, members: &[usize]) -> EggBox {
        let mut rows: Vec<usize> = members
            .iter()
            .map(|&a| self.r.partition.block_of(a))
            .collect();
        rows.sort_unstable();
        rows.dedup();
        let mut cols: Vec<usize> = members
            .iter()
            .map(|&a| self.l.partition.block_of(a))
            .collect();
        cols.sort_unstable();
        cols.dedup();
        let mut cells = vec![vec![None; cols.len()]; rows.len()];
        let mut elements = vec![vec![Vec::new(); cols.len()]; rows.len()];
        for &a in members {
            let i = rows.binary_search(&self.r.partition.block_of(a)).unwrap();
            let j = cols.binary_search(&self.l.partition.block_of(a)).unwrap();
            cells[i][j] = Some(self.h.block_of(a));
            elements[i][j].push(a);
        }
        EggBox {
            class: 0,
            rows,
            cols,
            cells,
            elements,
        }
    }

    pub fn dump(&self) -> GreenDump {
        let cls = |r: Relation| self.partition(r).blocks().to_vec();
        GreenDump {
            size: self.size,
            l: cls(Relation::L),
            r: cls(Relation::R),
            j: cls(Relation::J),
            h: cls(Relation::H),
            d: cls(Relation::D),
            l_covers: self.l.covers.clone(),
            r_covers: self.r.covers.clone(),
            j_covers: self.j.covers.clone(),
        }
    }

    /// Componentwise equality of class data and class orders.
    pub fn same_structure(&self, other: &GreenStructure) -> bool {
        self.size == other.size
            && Relation::ALL
                .iter()
                .all(|&r| self.partition(r) == other.partition(r))
            && Preorder::ALL
                .iter()
                .all(|&k| self.covers(k) == other.covers(k))
    }
}

/// JSON form of a Green structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreenDump {
    pub size: usize,
    pub l: Vec<usize>,
    pub r: Vec<usize>,
    pub j: Vec<usize>,
    pub h: Vec<usize>,
    pub d: Vec<usize>,
    pub l_covers: Vec<(usize, usize)>,
    pub r_covers: Vec<(usize, usize)>,
    pub j_covers: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EggBox {
    /// The D-class (or J-class) this grid draws.
    pub class: usize,
    /// R-class ids, one per row.
    pub rows: Vec<usize>,
    /// L-class ids, one per column.
    pub cols: Vec<usize>,
    /// H-class id of each cell, `None` when the row and column do not meet.
    pub cells: Vec<Vec<Option<usize>>>,
    pub elements: Vec<Vec<Vec<usize>>>,
}

/// Relative Green data of a subsemigroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreenIndexResult {
    /// Relative H-classes outside the subsemigroup.
    pub outside_h_classes: usize,
    pub index: usize,
    pub inside_classes: Vec<Vec<usize>>,
    pub outside_classes: Vec<Vec<usize>>,
    /// Whether each relative L-, R-, J- and H-class lies wholly inside or
    /// wholly outside the subsemigroup.
    pub classes_separated: bool,
    pub quotient_l_classes: usize,
    pub quotient_r_classes: usize,
    pub quotient_h_classes: usize,
}

/// Green index of the subsemigroup `sub` of `s`: one plus the number of
/// H-classes of `S` as a `T`-biact that avoid `T`.
pub fn green_index(s: &FiniteSemigroup, sub: &[usize]) -> Result<GreenIndexResult> {
    let rel = FiniteBiact::relative(s, sub)?;
    let g = GreenStructure::of(&rel);
    let mut inside = vec![false; s.order()];
    for &m in sub {
        inside[m] = true;
    }
    let mut separated = true;
    for r in Relation::ALL {
        for class in g.classes(r) {
            let first = inside[class[0]];
            if class.iter().any(|&a| inside[a] != first) {
                separated = false;
            }
        }
    }
    let (inside_classes, outside_classes): (Vec<_>, Vec<_>) = g
        .classes(Relation::H)
        .into_iter()
        .partition(|c| inside[c[0]]);
    let (q, _) = FiniteBiact::relative_rees(s, sub)?;
    let gq = GreenStructure::of(&q);
    Ok(GreenIndexResult {
        outside_h_classes: outside_classes.len(),
        index: outside_classes.len() + 1,
        inside_classes,
        outside_classes,
        classes_separated: separated,
        quotient_l_classes: gq.class_count(Relation::L),
        quotient_r_classes: gq.class_count(Relation::R),
        quotient_h_classes: gq.class_count(Relation::H),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named::*;

    fn counts(g: &GreenStructure) -> [usize; 5] {
        Relation::ALL.map(|r| g.class_count(r))
    }

    #[test]
    fn class_counts() {
        assert_eq!(counts(&GreenStructure::of(&trivial())), [1; 5]);
        assert_eq!(counts(&GreenStructure::of(&t2())), [3, 2, 2, 3, 2]);
        let lz = GreenStructure::of(&left_zero(2));
        assert_eq!(lz.class_count(Relation::L), 1);
        assert_eq!(lz.class_count(Relation::R), 2);
        assert_eq!(lz.class_count(Relation::J), 1);
    }

    #[test]
    fn preorder_examples() {
        let s = t2();
        let g = GreenStructure::of(&s);
        let (id, c0) = (s.find_label("01").unwrap(), s.find_label("00").unwrap());
        for k in Preorder::ALL {
            assert!(g.le(k, id, id));
        }
        assert!(g.le(Preorder::J, c0, id));
        assert!(!g.le(Preorder::J, id, c0));
    }

    #[test]
    fn generator_edges_agree_with_all_edges() {
        for s in [t2(), t3()] {
            assert!(s.is_generated());
            let g = GreenStructure::of(&s);
            assert!(g.same_structure(&GreenStructure::of(&s.with_all_edges())));
        }
    }

    #[test]
    fn eggboxes() {
        let s = t2();
        let g = GreenStructure::of(&s);
        let id = s.find_label("01").unwrap();
        let top = g.eggbox(g.class_of(Relation::D, id)).unwrap();
        assert_eq!((top.rows.len(), top.cols.len()), (1, 1));
        let mut units = top.elements[0][0].clone();
        units.sort_unstable();
        let mut want = vec![id, s.find_label("10").unwrap()];
        want.sort_unstable();
        assert_eq!(units, want);
        let c0 = s.find_label("00").unwrap();
        let bottom = g.eggbox(g.class_of(Relation::D, c0)).unwrap();
        assert_eq!((bottom.rows.len(), bottom.cols.len()), (1, 2));
        let one = GreenStructure::of(&trivial()).eggbox(0).unwrap();
        assert_eq!(one.cells, vec![vec![Some(0)]]);
        assert!(matches!(g.eggbox(7), Err(Error::UnknownClass { .. })));
    }

    #[test]
    fn green_indices() {
        let s = t2();
        let all: Vec<usize> = s.elements().collect();
        assert_eq!(green_index(&s, &all).unwrap().index, 1);
        assert_eq!(green_index(&cyclic_group(2), &[0]).unwrap().index, 2);
        let mut g = vec![s.find_label("01").unwrap(), s.find_label("10").unwrap()];
        g.sort_unstable();
        let r = green_index(&s, &g).unwrap();
        assert_eq!(r.index, 3);
        assert_eq!(r.outside_h_classes, 2);
        assert!(matches!(
            green_index(&cyclic_group(4), &[1]),
            Err(Error::NotASubsemigroup(_))
        ));
    }

    #[test]
    fn numbering_is_by_minimal_member() {
        let g = GreenStructure::of(&t3());
        for r in Relation::ALL {
            let firsts: Vec<usize> = g.classes(r).iter().map(|c| c[0]).collect();
            assert!(firsts.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
