//! Stability, periodicity, minimal conditions and subsemigroup predicates
//! on finite semigroups and biacts.
//!
//! Every predicate returns a [`PredicateResult`]. A negative result carries
//! a [`Witness`] whose relation facts can be replayed against a
//! [`GreenStructure`] with [`Witness::replay`].

use serde::Serialize;

use crate::actions::Actions;
use crate::error::{Error, Result};
use crate::green::{GreenStructure, Preorder, Relation};
use crate::semigroup::{FiniteSemigroup, Role};

/// Which side of a biact a one-sided predicate looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// The one-sided preorder belonging to this side.
    pub fn preorder(self) -> Preorder {
        match self {
            Side::Left => Preorder::L,
            Side::Right => Preorder::R,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Host {
    /// The object the predicate was evaluated on.
    Object,
    /// A subsemigroup considered on its own.
    Sub,
    /// The ambient semigroup of a subsemigroup.
    Ambient,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Rel {
    Le(Preorder),
    Eq(Relation),
}

/// A single claim `a rel b == value` about one Green structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub host: Host,
    pub rel: Rel,
    pub a: usize,
    pub b: usize,
    pub value: bool,
}

impl Fact {
    fn new(host: Host, rel: Rel, a: usize, b: usize, value: bool) -> Self {
        Fact {
            host,
            rel,
            a,
            b,
            value,
        }
    }

    pub fn holds_in(&self, g: &GreenStructure) -> bool {
        let v = match self.rel {
            Rel::Le(k) => g.le(k, self.a, self.b),
            Rel::Eq(r) => g.related(r, self.a, self.b),
        };
        v == self.value
    }
}

/// Counterexample payload: named elements plus the relation facts that
/// make the violation visible.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub elements: Vec<(String, usize)>,
    pub facts: Vec<Fact>,
    pub note: String,
}

impl Witness {
    /// Checks every fact; `lookup` supplies the structure for each host.
    pub fn replay<'a>(&self, lookup: impl Fn(Host) -> Option<&'a GreenStructure>) -> bool {
        self.facts
            .iter()
            .all(|f| lookup(f.host).is_some_and(|g| f.holds_in(g)))
    }

    /// Replay when every fact concerns a single structure.
    pub fn replay_on(&self, g: &GreenStructure) -> bool {
        self.replay(|h| (h == Host::Object).then_some(g))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    /// Minimal elements peeled from the class poset until none remain.
    PosetPeeling,
    /// Direct scan of the defining condition.
    Definitional,
    /// `D = J` together with the two H-identities.
    DEqualsJ,
    /// Orbit search with exponent bound `|A| + 1`.
    BoundedPowers,
    /// Some power shares an H-class with an idempotent.
    IdempotentPower,
    /// Preorder inside the subsemigroup compared with the ambient one.
    PreorderComparison,
    /// Backtracking over candidate homomorphisms.
    RetractSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredicateResult {
    pub value: bool,
    pub witness: Option<Witness>,
    pub method: Method,
}

impl PredicateResult {
    fn yes(method: Method) -> Self {
        PredicateResult {
            value: true,
            witness: None,
            method,
        }
    }

    fn no(method: Method, witness: Witness) -> Self {
        PredicateResult {
            value: false,
            witness: Some(witness),
            method,
        }
    }
}

/// A finite object together with its Green structure, so several
/// predicates can share one computation.
pub struct Analysis<'a, X: Actions + ?Sized> {
    pub object: &'a X,
    pub green: GreenStructure,
}

impl<'a, X: Actions + ?Sized> Analysis<'a, X> {
    pub fn new(object: &'a X) -> Self {
        Analysis {
            object,
            green: GreenStructure::of(object),
        }
    }

    pub fn with_green(object: &'a X, green: GreenStructure) -> Self {
        Analysis { object, green }
    }

    /// `M_K`: the class poset has no infinite descending chain. For a
    /// finite poset this amounts to every non-empty set of classes having a
    /// minimal member, which [`GreenStructure::peel_minimal`] checks.
    pub fn minimal_condition(&self, k: Preorder) -> PredicateResult {
        if self.green.peel_minimal(k) {
            PredicateResult::yes(Method::PosetPeeling)
        } else {
            PredicateResult::no(
                Method::PosetPeeling,
                Witness {
                    note: format!("{} class poset has a set without minimal member", k.name()),
                    ..Witness::default()
                },
            )
        }
    }

    fn act(&self, side: Side, s: usize, a: usize) -> usize {
        match side {
            Side::Left => self.object.act_left(s, a),
            Side::Right => self.object.act_right(a, s),
        }
    }

    fn actors(&self, side: Side) -> usize {
        match side {
            Side::Left => self.object.left_order(),
            Side::Right => self.object.right_order(),
        }
    }

    /// One-sided stability straight from the definition: `sa J a` implies
    /// `sa L a` (dually `at J a` implies `at R a`).
    pub fn stable_side(&self, side: Side) -> PredicateResult {
        let k: Relation = side.preorder().into();
        let g = &self.green;
        for s in 0..self.actors(side) {
            for a in 0..self.object.size() {
                let sa = self.act(side, s, a);
                if g.related(Relation::J, sa, a) && !g.related(k, sa, a) {
                    return PredicateResult::no(
                        Method::Definitional,
                        Witness {
                            elements: vec![
                                ("actor".into(), s),
                                ("point".into(), a),
                                ("image".into(), sa),
                            ],
                            facts: vec![
                                Fact::new(Host::Object, Rel::Eq(Relation::J), sa, a, true),
                                Fact::new(Host::Object, Rel::Eq(k), sa, a, false),
                            ],
                            note: String::new(),
                        },
                    );
                }
            }
        }
        PredicateResult::yes(Method::Definitional)
    }

    pub fn left_stable(&self) -> PredicateResult {
        self.stable_side(Side::Left)
    }

    pub fn right_stable(&self) -> PredicateResult {
        self.stable_side(Side::Right)
    }

    pub fn stable(&self) -> PredicateResult {
        let l = self.left_stable();
        if !l.value {
            return l;
        }
        self.right_stable()
    }

    /// The eight equivalent forms of one-sided stability, each evaluated
    /// independently. Index `i` holds form `i + 1`:
    /// 1. the definition;
    /// 2. `≤_K ∩ J = K`;
    /// 3. `≤_K ∩ J ⊆ K`;
    /// 4. `≤_K ∩ ≥_J = K`;
    /// 5. `≤_K ∩ ≥_J ⊆ K`;
    /// 6. inside each J-class every K-class is minimal;
    /// 7. inside each J-class the K-classes satisfy the minimal condition;
    /// 8. inside each J-class some K-class is minimal.
    pub fn stable_forms(&self, side: Side) -> [bool; 8] {
        let g = &self.green;
        let k = side.preorder();
        let kr: Relation = k.into();
        let n = self.object.size();
        let pairs = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));

        let f1 = self.stable_side(side).value;
        let f2 = pairs()
            .all(|(a, b)| (g.le(k, a, b) && g.related(Relation::J, a, b)) == g.related(kr, a, b));
        let f3 = pairs()
            .all(|(a, b)| !(g.le(k, a, b) && g.related(Relation::J, a, b)) || g.related(kr, a, b));
        let f4 =
            pairs().all(|(a, b)| (g.le(k, a, b) && g.le(Preorder::J, b, a)) == g.related(kr, a, b));
        let f5 = pairs()
            .all(|(a, b)| !(g.le(k, a, b) && g.le(Preorder::J, b, a)) || g.related(kr, a, b));

        // K-classes grouped by the J-class containing them.
        let kclasses = g.classes(kr);
        let mut by_j: Vec<Vec<usize>> = vec![Vec::new(); g.class_count(Relation::J)];
        for (c, members) in kclasses.iter().enumerate() {
            by_j[g.class_of(Relation::J, members[0])].push(c);
        }
        let below = |c: usize, d: usize| c != d && g.class_le(k, c, d);
        let f6 = by_j
            .iter()
            .all(|cs| cs.iter().all(|&c| !cs.iter().any(|&d| below(d, c))));
        let f7 = by_j.iter().all(|cs| {
            let mut remaining = cs.clone();
            while !remaining.is_empty() {
                let minimal: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&c| !remaining.iter().any(|&d| below(d, c)))
                    .collect();
                if minimal.is_empty() {
                    return false;
                }
                remaining.retain(|c| !minimal.contains(c));
            }
            true
        });
        let f8 = by_j
            .iter()
            .all(|cs| cs.iter().any(|&c| !cs.iter().any(|&d| below(d, c))));
        [f1, f2, f3, f4, f5, f6, f7, f8]
    }

    pub fn left_stable_forms(&self) -> [bool; 8] {
        self.stable_forms(Side::Left)
    }

    pub fn right_stable_forms(&self) -> [bool; 8] {
        self.stable_forms(Side::Right)
    }

    /// `D = J`, `≤_L ∩ R = H` and `L ∩ ≤_R = H`, which together say the
    /// object is stable.
    pub fn stable_char(&self) -> PredicateResult {
        let g = &self.green;
        let n = self.object.size();
        if g.partition(Relation::D) != g.partition(Relation::J) {
            let (a, b) = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .find(|&(a, b)| g.related(Relation::J, a, b) && !g.related(Relation::D, a, b))
                .expect("D refines J, so a differing pair is J- but not D-related");
            return PredicateResult::no(
                Method::DEqualsJ,
                Witness {
                    elements: vec![("a".into(), a), ("b".into(), b)],
                    facts: vec![
                        Fact::new(Host::Object, Rel::Eq(Relation::J), a, b, true),
                        Fact::new(Host::Object, Rel::Eq(Relation::D), a, b, false),
                    ],
                    note: "D differs from J".into(),
                },
            );
        }
        for a in 0..n {
            for b in 0..n {
                let h = g.related(Relation::H, a, b);
                if g.le(Preorder::L, a, b) && g.related(Relation::R, a, b) && !h {
                    return PredicateResult::no(
                        Method::DEqualsJ,
                        Witness {
                            elements: vec![("a".into(), a), ("b".into(), b)],
                            facts: vec![
                                Fact::new(Host::Object, Rel::Le(Preorder::L), a, b, true),
                                Fact::new(Host::Object, Rel::Eq(Relation::R), a, b, true),
                                Fact::new(Host::Object, Rel::Eq(Relation::H), a, b, false),
                            ],
                            note: "≤L ∩ R differs from H".into(),
                        },
                    );
                }
                if g.related(Relation::L, a, b) && g.le(Preorder::R, a, b) && !h {
                    return PredicateResult::no(
                        Method::DEqualsJ,
                        Witness {
                            elements: vec![("a".into(), a), ("b".into(), b)],
                            facts: vec![
                                Fact::new(Host::Object, Rel::Eq(Relation::L), a, b, true),
                                Fact::new(Host::Object, Rel::Le(Preorder::R), a, b, true),
                                Fact::new(Host::Object, Rel::Eq(Relation::H), a, b, false),
                            ],
                            note: "L ∩ ≤R differs from H".into(),
                        },
                    );
                }
            }
        }
        PredicateResult::yes(Method::DEqualsJ)
    }

    /// K-periodicity: for every actor `s` and point `a` some `n >= 1` has
    /// `sⁿa K sⁿ⁺¹a`. The orbit `sa, s²a, …` has at most `|A|` distinct
    /// points, so `n <= |A| + 1` suffices.
    pub fn periodic(&self, side: Side) -> PredicateResult {
        let k: Relation = side.preorder().into();
        let bound = self.object.size() + 1;
        for s in 0..self.actors(side) {
            for a in 0..self.object.size() {
                let mut cur = self.act(side, s, a);
                let mut found = false;
                for _ in 1..=bound {
                    let next = self.act(side, s, cur);
                    if self.green.related(k, cur, next) {
                        found = true;
                        break;
                    }
                    cur = next;
                }
                if !found {
                    return PredicateResult::no(
                        Method::BoundedPowers,
                        Witness {
                            elements: vec![("actor".into(), s), ("point".into(), a)],
                            facts: Vec::new(),
                            note: format!("no exponent up to {bound}"),
                        },
                    );
                }
            }
        }
        PredicateResult::yes(Method::BoundedPowers)
    }

    pub fn l_periodic(&self) -> PredicateResult {
        self.periodic(Side::Left)
    }

    pub fn r_periodic(&self) -> PredicateResult {
        self.periodic(Side::Right)
    }
}

pub fn minimal_condition<X: Actions + ?Sized>(x: &X, k: Preorder) -> PredicateResult {
    Analysis::new(x).minimal_condition(k)
}

pub fn left_stable<X: Actions + ?Sized>(x: &X) -> PredicateResult {
    Analysis::new(x).left_stable()
}

pub fn right_stable<X: Actions + ?Sized>(x: &X) -> PredicateResult {
    Analysis::new(x).right_stable()
}

pub fn stable<X: Actions + ?Sized>(x: &X) -> PredicateResult {
    Analysis::new(x).stable()
}

pub fn left_stable_forms<X: Actions + ?Sized>(x: &X) -> [bool; 8] {
    Analysis::new(x).left_stable_forms()
}

pub fn stable_char<X: Actions + ?Sized>(x: &X) -> PredicateResult {
    Analysis::new(x).stable_char()
}

pub fn l_periodic<X: Actions + ?Sized>(x: &X) -> PredicateResult {
    Analysis::new(x).l_periodic()
}

pub fn r_periodic<X: Actions + ?Sized>(x: &X) -> PredicateResult {
    Analysis::new(x).r_periodic()
}

/// Every element has a power lying in a subgroup, i.e. H-related to an
/// idempotent. Powers are searched up to `|S|`, which always reaches the
/// cyclic part of a finite monogenic subsemigroup.
pub fn group_bound(s: &FiniteSemigroup) -> PredicateResult {
    group_bound_with(s, &GreenStructure::of(s))
}

pub fn group_bound_with(s: &FiniteSemigroup, g: &GreenStructure) -> PredicateResult {
    let idem_h: std::collections::HashSet<usize> = s
        .idempotents()
        .into_iter()
        .map(|e| g.class_of(Relation::H, e))
        .collect();
    for a in s.elements() {
        let mut p = a;
        let mut found = false;
        for _ in 1..=s.order() {
            if idem_h.contains(&g.class_of(Relation::H, p)) {
                found = true;
                break;
            }
            p = s.mul(p, a);
        }
        if !found {
            return PredicateResult::no(
                Method::IdempotentPower,
                Witness {
                    elements: vec![("element".into(), a)],
                    facts: Vec::new(),
                    note: "no power shares an H-class with an idempotent".into(),
                },
            );
        }
    }
    PredicateResult::yes(Method::IdempotentPower)
}

fn require_subsemigroup(s: &FiniteSemigroup, sub: &[usize]) -> Result<()> {
    s.classify_subset(sub, Role::Subsemigroup)
        .map(|_| ())
        .map_err(|e| match e {
            Error::RoleViolation { detail, .. } => Error::NotASubsemigroup(detail),
            other => other,
        })
}

/// Whether the K-preorder of the subsemigroup `sub` agrees with the
/// ambient one restricted to `sub`. Witness facts refer to `Host::Sub`
/// (ids are positions in the sorted `sub`) and `Host::Ambient`.
pub fn k_preserving(s: &FiniteSemigroup, sub: &[usize], k: Preorder) -> Result<PredicateResult> {
    require_subsemigroup(s, sub)?;
    let (t, emb) = s.subsemigroup(sub)?;
    let gs = GreenStructure::of(s);
    let gt = GreenStructure::of(&t);
    Ok(k_preserving_with(&gs, &gt, &emb, k))
}

pub fn k_preserving_with(
    gs: &GreenStructure,
    gt: &GreenStructure,
    emb: &[usize],
    k: Preorder,
) -> PredicateResult {
    for i in 0..emb.len() {
        for j in 0..emb.len() {
            let inner = gt.le(k, i, j);
            let outer = gs.le(k, emb[i], emb[j]);
            if inner != outer {
                return PredicateResult::no(
                    Method::PreorderComparison,
                    Witness {
                        elements: vec![("a".into(), emb[i]), ("b".into(), emb[j])],
                        facts: vec![
                            Fact::new(Host::Sub, Rel::Le(k), i, j, inner),
                            Fact::new(Host::Ambient, Rel::Le(k), emb[i], emb[j], outer),
                        ],
                        note: String::new(),
                    },
                );
            }
        }
    }
    PredicateResult::yes(Method::PreorderComparison)
}

/// `a ∈ aTa` for every `a` in `sub`.
pub fn regular_subsemigroup(s: &FiniteSemigroup, sub: &[usize]) -> Result<PredicateResult> {
    require_subsemigroup(s, sub)?;
    for &a in sub {
        if !sub.iter().any(|&x| s.mul(s.mul(a, x), a) == a) {
            return Ok(PredicateResult::no(
                Method::Definitional,
                Witness {
                    elements: vec![("element".into(), a)],
                    facts: Vec::new(),
                    note: "no inner inverse inside the subsemigroup".into(),
                },
            ));
        }
    }
    Ok(PredicateResult::yes(Method::Definitional))
}

pub const DEFAULT_RETRACT_CAP: u64 = 1_000_000;

/// Searches for a homomorphism `S -> sub` fixing `sub` pointwise. A search
/// that hits `cap` nodes returns `Err(SearchCapExceeded)`, which callers
/// must treat as inconclusive. On success the map is in the witness
/// elements as `(image-of, id)` pairs.
pub fn retract(s: &FiniteSemigroup, sub: &[usize], cap: u64) -> Result<PredicateResult> {
    require_subsemigroup(s, sub)?;
    let n = s.order();
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; n];
    for &t in sub {
        map[t] = t;
    }
    let free: Vec<usize> = (0..n).filter(|&x| map[x] == UNSET).collect();

    fn consistent(s: &FiniteSemigroup, map: &[usize]) -> bool {
        let n = s.order();
        for x in 0..n {
            if map[x] == UNSET {
                continue;
            }
            for y in 0..n {
                if map[y] == UNSET {
                    continue;
                }
                let img = map[s.mul(x, y)];
                if img != UNSET && img != s.mul(map[x], map[y]) {
                    return false;
                }
            }
        }
        true
    }

    fn go(
        s: &FiniteSemigroup,
        sub: &[usize],
        free: &[usize],
        map: &mut Vec<usize>,
        explored: &mut u64,
        cap: u64,
    ) -> Result<bool> {
        let Some((&x, rest)) = free.split_first() else {
            return Ok(true);
        };
        for &t in sub {
            *explored += 1;
            if *explored > cap {
                return Err(Error::SearchCapExceeded {
                    explored: *explored,
                });
            }
            map[x] = t;
            if consistent(s, map) && go(s, sub, rest, map, explored, cap)? {
                return Ok(true);
            }
        }
        map[x] = UNSET;
        Ok(false)
    }

    if !consistent(s, &map) {
        return Ok(PredicateResult::no(
            Method::RetractSearch,
            Witness::default(),
        ));
    }
    let mut explored = 0;
    if go(s, sub, &free, &mut map, &mut explored, cap)? {
        Ok(PredicateResult {
            value: true,
            witness: Some(Witness {
                elements: map
                    .iter()
                    .enumerate()
                    .map(|(x, &t)| (format!("θ({x})"), t))
                    .collect(),
                facts: Vec::new(),
                note: "retraction".into(),
            }),
            method: Method::RetractSearch,
        })
    } else {
        Ok(PredicateResult::no(
            Method::RetractSearch,
            Witness {
                note: format!(
                    "no retraction among {} maps",
                    (sub.len() as u64).saturating_pow(free.len() as u32)
                ),
                ..Witness::default()
            },
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biact::FiniteBiact;
    use crate::semigroup::named;

    #[test]
    fn t2_is_stable_every_way() {
        let t2 = named::t2();
        let an = Analysis::new(&t2);
        assert!(an.stable().value);
        assert_eq!(an.left_stable_forms(), [true; 8]);
        assert_eq!(an.right_stable_forms(), [true; 8]);
        assert!(an.stable_char().value);
        assert!(an.l_periodic().value && an.r_periodic().value);
        for k in Preorder::ALL {
            assert!(an.minimal_condition(k).value);
        }
        assert!(group_bound(&t2).value);
    }

    #[test]
    fn left_zero_regular_biact_forms() {
        let b = FiniteBiact::regular(&named::left_zero(2));
        assert_eq!(left_stable_forms(&b), [true; 8]);
    }

    #[test]
    fn z2_group_bound() {
        assert!(group_bound(&named::cyclic_group(2)).value);
    }

    #[test]
    fn t2_group_of_units() {
        let t2 = named::t2();
        let g: Vec<usize> = ["10", "01"]
            .iter()
            .map(|l| t2.find_label(l).unwrap())
            .collect();
        let mut g = g;
        g.sort_unstable();
        assert!(regular_subsemigroup(&t2, &g).unwrap().value);
        assert!(k_preserving(&t2, &g, Preorder::L).unwrap().value);
        assert!(!retract(&t2, &g, DEFAULT_RETRACT_CAP).unwrap().value);
        let all: Vec<usize> = t2.elements().collect();
        assert!(retract(&t2, &all, DEFAULT_RETRACT_CAP).unwrap().value);
    }

    #[test]
    fn preservation_witnesses_replay() {
        let t2 = named::t2();
        for mask in 1u32..16 {
            let sub: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).collect();
            if !t2.is_subset_role(&sub, Role::Subsemigroup) {
                continue;
            }
            let (t, emb) = t2.subsemigroup(&sub).unwrap();
            let gs = GreenStructure::of(&t2);
            let gt = GreenStructure::of(&t);
            for k in Preorder::ALL {
                let r = k_preserving_with(&gs, &gt, &emb, k);
                if let Some(w) = &r.witness {
                    assert!(w.replay(|h| match h {
                        Host::Sub => Some(&gt),
                        Host::Ambient => Some(&gs),
                        Host::Object => None,
                    }));
                }
            }
        }
    }

    #[test]
    fn retract_cap_is_inconclusive() {
        let t3 = named::t3();
        let id = t3.identity().unwrap();
        assert!(matches!(
            retract(&t3, &[id], 0),
            Err(Error::SearchCapExceeded { .. })
        ));
    }
}
