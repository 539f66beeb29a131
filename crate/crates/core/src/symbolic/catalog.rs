//! Named infinite semigroups and the lookup table behind `catalog`.

use std::sync::Arc;

use rand::{Rng, RngCore};

use super::{
    construct::BicyclicRegular, ideal_without_mj, integers, unstable_extension, verify_chain, Elem,
    Evidence, Object, Property, PropertySheet, SymFact, SymbolicObject, SymbolicSemigroup,
    DEFAULT_DEPTH, DEFAULT_SAMPLES,
};
use crate::error::{Error, Result};
use crate::green::Preorder;
use crate::props::Side;

fn known(reason: &str) -> Evidence {
    Evidence::Known {
        reason: reason.into(),
    }
}

fn structural(reason: &str) -> Evidence {
    Evidence::Structural {
        reason: reason.into(),
    }
}

fn chain(k: Preorder) -> Evidence {
    Evidence::ChainWitness { k }
}

fn semigroup_act<S: SymbolicSemigroup + ?Sized>(
    s: &S,
    actor: &Elem,
    point: &Elem,
    side: Side,
) -> Option<Elem> {
    if !s.contains(actor) || !s.contains(point) {
        return None;
    }
    Some(match side {
        Side::Left => s.mul(actor, point),
        Side::Right => s.mul(point, actor),
    })
}

fn sample_range(rng: &mut dyn RngCore, lo: i64, hi: i64) -> i64 {
    rng.gen_range(lo..=hi)
}

/// The bicyclic monoid on normal forms `(m, n) = bᵐaⁿ` with
/// `(m,n)(k,l) = (m + t − n, l + t − k)`, `t = max(n, k)`.
/// `a = (0,1)`, `b = (1,0)` and `ab = (0,0)` is the identity.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bicyclic;

impl Bicyclic {
    pub fn pair(x: &Elem) -> (u64, u64) {
        match x {
            Elem::Pair(m, n) => (*m, *n),
            other => panic!("not a bicyclic element: {other}"),
        }
    }

    pub fn mul_pairs((m, n): (u64, u64), (k, l): (u64, u64)) -> (u64, u64) {
        let t = n.max(k);
        (m + t - n, l + t - k)
    }

    /// `x ≤_L y` iff the second coordinate of `x` is at least that of `y`;
    /// `≤_R` compares first coordinates; `≤_J` is total.
    pub fn le_pairs(k: Preorder, (m, n): (u64, u64), (p, q): (u64, u64)) -> bool {
        match k {
            Preorder::L => n >= q,
            Preorder::R => m >= p,
            Preorder::J => true,
        }
    }
}

impl SymbolicObject for Bicyclic {
    fn name(&self) -> String {
        "bicyclic".into()
    }

    fn contains(&self, x: &Elem) -> bool {
        matches!(x, Elem::Pair(..))
    }

    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Ok(Self::le_pairs(k, Self::pair(x), Self::pair(y)))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Pair(rng.gen_range(0..20), rng.gen_range(0..20))
    }

    fn chain(&self, k: Preorder, i: usize) -> Option<Elem> {
        match k {
            Preorder::L => Some(Elem::Pair(0, i as u64)),
            Preorder::R => Some(Elem::Pair(i as u64, 0)),
            Preorder::J => None,
        }
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        let (one, a, b) = (Elem::Pair(0, 0), Elem::Pair(0, 1), Elem::Pair(1, 0));
        PropertySheet::default()
            .with(Property::ML, false, chain(Preorder::L))
            .with(Property::MR, false, chain(Preorder::R))
            .with(
                Property::MJ,
                true,
                structural("J is total, so there is a single J-class"),
            )
            .with(
                Property::LeftStable,
                false,
                Evidence::ActionWitness {
                    side: Side::Left,
                    actor: a.clone(),
                    point: one.clone(),
                    image: a.clone(),
                    facts: vec![
                        SymFact::eq(Preorder::J, a.clone(), one.clone(), true),
                        SymFact::eq(Preorder::L, a.clone(), one.clone(), false),
                    ],
                },
            )
            .with(
                Property::RightStable,
                false,
                Evidence::ActionWitness {
                    side: Side::Right,
                    actor: b.clone(),
                    point: one.clone(),
                    image: b.clone(),
                    facts: vec![
                        SymFact::eq(Preorder::J, b.clone(), one.clone(), true),
                        SymFact::eq(Preorder::R, b.clone(), one.clone(), false),
                    ],
                },
            )
            .with(
                Property::LPeriodic,
                false,
                structural("aⁿ·1 = (0,n) are pairwise not L-related"),
            )
            .with(
                Property::RPeriodic,
                false,
                structural("1·bⁿ = (n,0) are pairwise not R-related"),
            )
            .with(
                Property::GroupBound,
                false,
                structural("H is trivial and (0,1) has no idempotent power"),
            )
            .with(Property::Simple, true, Evidence::SampledDecision)
            .with(
                Property::Bisimple,
                true,
                structural("(m,n) R (m,l) L (k,l) joins any two elements"),
            )
            .with(
                Property::JTrivial,
                false,
                Evidence::PairWitness {
                    facts: vec![SymFact::eq(
                        Preorder::J,
                        one.clone(),
                        Elem::Pair(1, 1),
                        true,
                    )],
                },
            )
    }
}

impl SymbolicSemigroup for Bicyclic {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let (m, n) = Self::mul_pairs(Self::pair(x), Self::pair(y));
        Elem::Pair(m, n)
    }
}

fn int(x: &Elem) -> i64 {
    match x {
        Elem::Int(n) => *n,
        other => panic!("not an integer element: {other}"),
    }
}

/// Sheet shared by the commutative J-trivial chains `(ℕ,+)` and
/// `(ℕ,max)`, which differ only in periodicity and group-boundedness.
fn descending_naturals_sheet(idempotent: bool) -> PropertySheet {
    let mut sheet = PropertySheet::default()
        .with(Property::ML, false, chain(Preorder::L))
        .with(Property::MR, false, chain(Preorder::R))
        .with(Property::MJ, false, chain(Preorder::J))
        .with(Property::LeftStable, true, structural("J-trivial"))
        .with(Property::RightStable, true, structural("J-trivial"))
        .with(
            Property::Simple,
            false,
            Evidence::PairWitness {
                facts: vec![SymFact::le(Preorder::J, Elem::Int(1), Elem::Int(2), false)],
            },
        )
        .with(Property::Bisimple, false, structural("not simple"))
        .with(
            Property::JTrivial,
            true,
            structural("x ≤_J y iff x ≥ y, an antisymmetric order"),
        );
    if idempotent {
        sheet = sheet
            .with(Property::LPeriodic, true, structural("s·a = s²·a"))
            .with(Property::RPeriodic, true, structural("a·s = a·s²"))
            .with(
                Property::GroupBound,
                true,
                structural("every element is idempotent"),
            );
    } else {
        sheet = sheet
            .with(
                Property::LPeriodic,
                false,
                structural("n·1 + a are pairwise distinct and J-trivial"),
            )
            .with(
                Property::RPeriodic,
                false,
                structural("a + n·1 are pairwise distinct and J-trivial"),
            )
            .with(Property::GroupBound, false, structural("no idempotents"));
    }
    sheet
}

/// `(ℕ, +)` with `ℕ = {1, 2, …}`, so there is no idempotent.
/// `m ≤_K n` iff `m ≥ n` for every K.
#[derive(Clone, Copy, Debug, Default)]
pub struct NatPlus;

impl SymbolicObject for NatPlus {
    fn name(&self) -> String {
        "nat-plus".into()
    }

    fn contains(&self, x: &Elem) -> bool {
        matches!(x, Elem::Int(n) if *n >= 1)
    }

    fn le(&self, _k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Ok(int(x) >= int(y))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(sample_range(rng, 1, 1000))
    }

    fn chain(&self, _k: Preorder, i: usize) -> Option<Elem> {
        Some(Elem::Int(i as i64 + 1))
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        descending_naturals_sheet(false)
    }
}

impl SymbolicSemigroup for NatPlus {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        Elem::Int(int(x) + int(y))
    }
}

/// `(ℤ, +)`: a group, so every preorder is total.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntPlus;

impl SymbolicObject for IntPlus {
    fn name(&self) -> String {
        "int-plus".into()
    }

    fn contains(&self, x: &Elem) -> bool {
        matches!(x, Elem::Int(_))
    }

    fn le(&self, _k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        int(x);
        int(y);
        Ok(true)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(sample_range(rng, -1000, 1000))
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        let single = "a group has one class for each relation";
        PropertySheet::default()
            .with(Property::ML, true, structural(single))
            .with(Property::MR, true, structural(single))
            .with(Property::MJ, true, structural(single))
            .with(Property::LeftStable, true, structural(single))
            .with(Property::RightStable, true, structural(single))
            .with(Property::LPeriodic, true, structural(single))
            .with(Property::RPeriodic, true, structural(single))
            .with(Property::GroupBound, true, known("groups are group-bound"))
            .with(Property::Simple, true, Evidence::SampledDecision)
            .with(Property::Bisimple, true, structural(single))
            .with(
                Property::JTrivial,
                false,
                Evidence::PairWitness {
                    facts: vec![SymFact::eq(Preorder::J, Elem::Int(5), Elem::Int(-7), true)],
                },
            )
    }
}

impl SymbolicSemigroup for IntPlus {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        Elem::Int(int(x) + int(y))
    }
}

/// The free semigroup on `k` letters: `≤_L` is "has as suffix", `≤_R`
/// "has as prefix", `≤_J` "has as factor".
#[derive(Clone, Copy, Debug)]
pub struct FreeSemigroup {
    pub letters: u8,
}

impl FreeSemigroup {
    pub fn new(letters: u8) -> Self {
        assert!(
            (1..=26).contains(&letters),
            "free semigroup needs 1 to 26 letters"
        );
        FreeSemigroup { letters }
    }

    fn word(x: &Elem) -> &[u8] {
        match x {
            Elem::Word(w) => w,
            other => panic!("not a word: {other}"),
        }
    }
}

impl SymbolicObject for FreeSemigroup {
    fn name(&self) -> String {
        format!("free{}", self.letters)
    }

    fn contains(&self, x: &Elem) -> bool {
        matches!(x, Elem::Word(w) if !w.is_empty() && w.iter().all(|&c| c < self.letters))
    }

    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        let (u, v) = (Self::word(x), Self::word(y));
        Ok(match k {
            Preorder::L => u.ends_with(v),
            Preorder::R => u.starts_with(v),
            Preorder::J => v.len() <= u.len() && u.windows(v.len()).any(|f| f == v),
        })
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        let len = rng.gen_range(1..=8);
        Elem::Word((0..len).map(|_| rng.gen_range(0..self.letters)).collect())
    }

    fn chain(&self, _k: Preorder, i: usize) -> Option<Elem> {
        Some(Elem::Word(vec![0; i + 1]))
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        PropertySheet::default()
            .with(Property::ML, false, chain(Preorder::L))
            .with(Property::MR, false, chain(Preorder::R))
            .with(Property::MJ, false, chain(Preorder::J))
            .with(Property::LeftStable, true, structural("J-trivial"))
            .with(Property::RightStable, true, structural("J-trivial"))
            .with(
                Property::LPeriodic,
                false,
                structural("the words sⁿa have distinct lengths"),
            )
            .with(
                Property::RPeriodic,
                false,
                structural("the words asⁿ have distinct lengths"),
            )
            .with(Property::GroupBound, false, structural("no idempotents"))
            .with(
                Property::Simple,
                false,
                Evidence::PairWitness {
                    facts: vec![SymFact::le(
                        Preorder::J,
                        Elem::word("a"),
                        Elem::word("aa"),
                        false,
                    )],
                },
            )
            .with(Property::Bisimple, false, structural("not simple"))
            .with(
                Property::JTrivial,
                true,
                structural("mutual factors have equal length, hence are equal"),
            )
    }
}

impl SymbolicSemigroup for FreeSemigroup {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        let mut w = Self::word(x).to_vec();
        w.extend_from_slice(Self::word(y));
        Elem::Word(w)
    }
}

/// `(ℕ, max)`: a semilattice in which `1 > 2 > 3 > …` for every preorder.
#[derive(Clone, Copy, Debug, Default)]
pub struct NatMax;

impl SymbolicObject for NatMax {
    fn name(&self) -> String {
        "nat-max".into()
    }

    fn contains(&self, x: &Elem) -> bool {
        matches!(x, Elem::Int(n) if *n >= 1)
    }

    fn le(&self, _k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Ok(int(x) >= int(y))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(sample_range(rng, 1, 1000))
    }

    fn chain(&self, _k: Preorder, i: usize) -> Option<Elem> {
        Some(Elem::Int(i as i64 + 1))
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        descending_naturals_sheet(true)
    }
}

impl SymbolicSemigroup for NatMax {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        Elem::Int(int(x).max(int(y)))
    }
}

/// The null semigroup on `{0, …, n−1}`: every product is `0`.
#[derive(Clone, Copy, Debug)]
pub struct Null {
    pub size: i64,
}

impl SymbolicObject for Null {
    fn name(&self) -> String {
        format!("null{}", self.size)
    }

    fn contains(&self, x: &Elem) -> bool {
        matches!(x, Elem::Int(n) if (0..self.size).contains(n))
    }

    fn le(&self, _k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Ok(x == y || int(x) == 0)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(rng.gen_range(0..self.size))
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        let finite = "finitely many classes";
        let mut sheet = PropertySheet::default()
            .with(Property::ML, true, structural(finite))
            .with(Property::MR, true, structural(finite))
            .with(Property::MJ, true, structural(finite))
            .with(Property::LeftStable, true, structural("J-trivial"))
            .with(Property::RightStable, true, structural("J-trivial"))
            .with(Property::LPeriodic, true, structural("s·a = 0 = s²·a"))
            .with(Property::RPeriodic, true, structural("a·s = 0 = a·s²"))
            .with(
                Property::GroupBound,
                true,
                structural("every square is the idempotent 0"),
            )
            .with(
                Property::JTrivial,
                true,
                structural("x ≤_J y iff x = y or x = 0"),
            );
        if self.size == 1 {
            sheet = sheet
                .with(Property::Simple, true, Evidence::SampledDecision)
                .with(Property::Bisimple, true, structural("one element"));
        } else {
            sheet = sheet
                .with(
                    Property::Simple,
                    false,
                    Evidence::PairWitness {
                        facts: vec![SymFact::le(Preorder::J, Elem::Int(1), Elem::Int(0), false)],
                    },
                )
                .with(Property::Bisimple, false, structural("not simple"));
        }
        sheet
    }
}

impl SymbolicSemigroup for Null {
    fn mul(&self, _x: &Elem, _y: &Elem) -> Elem {
        Elem::Int(0)
    }
}

/// Catalog names accepted by [`lookup`]; `free{k}` and `null{n}` take a
/// size suffix.
pub const CATALOG_NAMES: [&str; 9] = [
    "bicyclic", "nat-plus", "int-plus", "free2", "nat-max", "null2", "ex4.8", "cor4.19", "cor5.12",
];

/// A catalog entry: one or more named parts. The first part is the
/// subject of `catalog show`.
#[derive(Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub parts: Vec<(String, Object)>,
}

impl CatalogEntry {
    fn single(obj: Object) -> Self {
        CatalogEntry {
            name: obj.name(),
            parts: vec![("self".into(), obj)],
        }
    }

    pub fn part(&self, name: &str) -> Option<&Object> {
        self.parts.iter().find(|(n, _)| n == name).map(|(_, o)| o)
    }

    /// The first part offering a chain for `k`.
    pub fn chain_part(&self, k: Preorder) -> Option<&(String, Object)> {
        self.parts.iter().find(|(_, o)| o.chain(k, 0).is_some())
    }

    /// Audits every part's sheet.
    pub fn audit(&self) -> Vec<String> {
        self.parts
            .iter()
            .flat_map(|(_, o)| o.sheet().audit(o.as_ref(), DEFAULT_DEPTH, DEFAULT_SAMPLES))
            .collect()
    }
}

fn parse_suffix(name: &str, prefix: &str) -> Option<u64> {
    name.strip_prefix(prefix)?.parse().ok()
}

/// Builds the named entry without auditing it.
pub fn lookup(name: &str) -> Result<CatalogEntry> {
    let entry = match name {
        "bicyclic" => CatalogEntry::single(Arc::new(Bicyclic)),
        "nat-plus" => CatalogEntry::single(Arc::new(NatPlus)),
        "int-plus" => CatalogEntry::single(Arc::new(IntPlus)),
        "nat-max" => CatalogEntry::single(Arc::new(NatMax)),
        "bicyclic-regular" => CatalogEntry::single(Arc::new(BicyclicRegular)),
        "ex4.8" => CatalogEntry {
            name: name.into(),
            parts: vec![
                (
                    "biact".into(),
                    Arc::new(integers::IntegersOverNaturals) as Object,
                ),
                (
                    "quotient".into(),
                    Arc::new(integers::IntegersOverNaturalsQuotient),
                ),
                ("integers".into(), Arc::new(IntPlus)),
                ("naturals".into(), Arc::new(NatPlus)),
            ],
        },
        "cor4.19" => {
            let x = ideal_without_mj();
            CatalogEntry {
                name: name.into(),
                parts: vec![
                    ("I".into(), x.i.clone() as Object),
                    ("U".into(), x.u.clone()),
                    ("N".into(), x.n.clone()),
                    ("I/N".into(), x.i_over_n.clone()),
                    ("A".into(), x.a.clone()),
                ],
            }
        }
        "cor5.12" => {
            let x = unstable_extension();
            CatalogEntry {
                name: name.into(),
                parts: vec![
                    ("U".into(), x.u.clone() as Object),
                    ("I".into(), x.i.clone()),
                    ("U/I".into(), x.quotient.clone()),
                    ("S".into(), x.s.clone()),
                    ("A".into(), x.a.clone()),
                ],
            }
        }
        other => {
            if let Some(k) = parse_suffix(other, "free").filter(|k| (1..=26).contains(k)) {
                CatalogEntry::single(Arc::new(FreeSemigroup::new(k as u8)))
            } else if let Some(n) =
                parse_suffix(other, "null").filter(|&n| n >= 1 && n <= i64::MAX as u64)
            {
                CatalogEntry::single(Arc::new(Null { size: n as i64 }))
            } else {
                return Err(Error::UnknownEntry(other.into()));
            }
        }
    };
    Ok(entry)
}

/// Every standard entry, each audited; an inconsistent sheet is an error.
pub fn catalog() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for name in CATALOG_NAMES {
        let entry = lookup(name)?;
        let problems = entry.audit();
        if !problems.is_empty() {
            return Err(Error::InconsistentSheet {
                object: name.into(),
                detail: problems.join("; "),
            });
        }
        out.push(entry);
    }
    Ok(out)
}

/// Chain dump used by `catalog show --chain`.
pub fn chain_dump(
    entry: &CatalogEntry,
    k: Preorder,
    depth: usize,
) -> Result<(String, super::ChainCheck)> {
    let (part, obj) = entry
        .chain_part(k)
        .ok_or_else(|| Error::DecisionUnavailable {
            object: entry.name.clone(),
            relation: format!("{} chain", k.name()),
        })?;
    let check = verify_chain(obj.as_ref(), k, super::chain_iter(obj.as_ref(), k), depth)?;
    Ok((part.clone(), check))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{chain_iter, SymbolicSemigroup};

    #[test]
    fn bicyclic_relation() {
        let b = Bicyclic;
        assert_eq!(
            b.mul(&Elem::Pair(0, 1), &Elem::Pair(1, 0)),
            Elem::Pair(0, 0)
        );
        assert_eq!(
            b.mul(&Elem::Pair(1, 0), &Elem::Pair(0, 1)),
            Elem::Pair(1, 1)
        );
    }

    #[test]
    fn catalog_audits_clean() {
        let entries = catalog().unwrap();
        assert_eq!(entries.len(), CATALOG_NAMES.len());
    }

    #[test]
    fn chain_dump_bicyclic() {
        let e = lookup("bicyclic").unwrap();
        let (_, c) = chain_dump(&e, Preorder::L, 4).unwrap();
        assert!(c.ok);
        let s: Vec<String> = c.elements.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["(0,0)", "(0,1)", "(0,2)", "(0,3)", "(0,4)"]);
    }

    #[test]
    fn nat_plus_chain_hundred_steps() {
        let n = NatPlus;
        assert!(
            verify_chain(&n, Preorder::L, chain_iter(&n, Preorder::L), 100)
                .unwrap()
                .ok
        );
    }

    #[test]
    fn bicyclic_j_chain_refused() {
        let b = Bicyclic;
        let attempt = (0..).map(|i| Elem::Pair(0, i));
        let c = verify_chain(&b, Preorder::J, attempt, 10).unwrap();
        assert!(!c.ok);
    }

    #[test]
    fn unknown_entry() {
        assert!(matches!(lookup("nope"), Err(Error::UnknownEntry(_))));
    }
}
