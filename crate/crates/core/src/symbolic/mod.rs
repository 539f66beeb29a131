//! Infinite semigroups and biacts given by decision procedures.
//!
//! An object here is a carrier of [`Elem`] values with closed-form
//! deciders for `≤_L`, `≤_R`, `≤_J`, a sampler, and optionally a chain
//! generator `i ↦ x_i` meant to descend strictly. Each object carries a
//! [`PropertySheet`]; [`PropertySheet::audit`] replays the sheet's evidence
//! through the public deciders and checks it against the implications
//! between the properties.

use std::fmt;
use std::sync::Arc;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::green::Preorder;

pub mod catalog;
pub mod construct;
pub mod instances;
pub mod integers;
pub mod oracles;

pub use catalog::{
    catalog, lookup, Bicyclic, CatalogEntry, FreeSemigroup, IntPlus, NatMax, NatPlus, Null,
    CATALOG_NAMES,
};
pub use construct::{
    construct_usa, construct_usta, BicyclicRegular, FiniteBiactView, FiniteView, NullPart,
    PullbackBiact, UnionLayout, Usa, Usta, UstaIdeal, WithZero,
};
pub use instances::{ideal_without_mj, unstable_extension, IdealWithoutMj, UnstableExtension};
pub use integers::{IntegersOverNaturals, IntegersOverNaturalsQuotient};

/// Seed used when a sheet audit samples pairs.
pub const AUDIT_SEED: u64 = 0x5EED;
pub const DEFAULT_DEPTH: usize = 100;
pub const DEFAULT_SAMPLES: usize = 200;

/// An element of a symbolic object.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Int(i64),
    /// Bicyclic normal form `(m, n)`, standing for `bᵐaⁿ`.
    Pair(u64, u64),
    /// Non-empty word; letter `i` prints as the `i`-th lowercase letter.
    Word(Vec<u8>),
    Zero,
    /// Tagged parts of a construction.
    Left(Box<Elem>),
    Right(Box<Elem>),
    Point(Box<Elem>),
}

impl Elem {
    pub fn left(x: Elem) -> Elem {
        Elem::Left(Box::new(x))
    }

    pub fn right(x: Elem) -> Elem {
        Elem::Right(Box::new(x))
    }

    pub fn point(x: Elem) -> Elem {
        Elem::Point(Box::new(x))
    }

    pub fn word(s: &str) -> Elem {
        Elem::Word(s.bytes().map(|c| c - b'a').collect())
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Int(n) => write!(f, "{n}"),
            Elem::Pair(m, n) => write!(f, "({m},{n})"),
            Elem::Word(w) => {
                for &c in w {
                    write!(f, "{}", (b'a' + c) as char)?;
                }
                Ok(())
            }
            Elem::Zero => write!(f, "0"),
            Elem::Left(x) => write!(f, "s:{x}"),
            Elem::Right(x) => write!(f, "t:{x}"),
            Elem::Point(x) => write!(f, "x_{x}"),
        }
    }
}

/// Integers as numbers, pairs as `[m, n]`, words as strings, zero as
/// `"0"`, tagged parts as one-key objects `{"s": …}`, `{"t": …}`,
/// `{"x": …}`.
impl Serialize for Elem {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Elem::Int(n) => ser.serialize_i64(*n),
            Elem::Pair(m, n) => {
                let mut seq = ser.serialize_seq(Some(2))?;
                seq.serialize_element(m)?;
                seq.serialize_element(n)?;
                seq.end()
            }
            Elem::Word(_) => ser.serialize_str(&self.to_string()),
            Elem::Zero => ser.serialize_str("0"),
            Elem::Left(x) | Elem::Right(x) | Elem::Point(x) => {
                let key = match self {
                    Elem::Left(_) => "s",
                    Elem::Right(_) => "t",
                    _ => "x",
                };
                let mut map = ser.serialize_map(Some(1))?;
                map.serialize_entry(key, x)?;
                map.end()
            }
        }
    }
}

/// Behaviour shared by symbolic semigroups and biacts.
pub trait SymbolicObject: Send + Sync {
    fn name(&self) -> String;
    fn contains(&self, x: &Elem) -> bool;
    /// `x ≤_K y`.
    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool>;
    fn sample(&self, rng: &mut dyn RngCore) -> Elem;
    /// The `i`-th member of a chain meant to descend strictly in `≤_K`,
    /// or `None` when the object offers no such chain.
    fn chain(&self, _k: Preorder, _i: usize) -> Option<Elem> {
        None
    }
    fn sheet(&self) -> PropertySheet {
        PropertySheet::default()
    }
    /// The product `x·y` or action image, used to check action witnesses.
    fn act(&self, _actor: &Elem, _point: &Elem, _side: crate::props::Side) -> Option<Elem> {
        None
    }

    fn related(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Ok(self.le(k, x, y)? && self.le(k, y, x)?)
    }
}

pub trait SymbolicSemigroup: SymbolicObject {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem;
}

/// A biact with symbolic left semigroup `S` and right semigroup `T`.
///
/// The membership hooks answer questions the constructions need about
/// images of the actions; objects that cannot decide them keep the
/// defaults, which return [`Error::DecisionUnavailable`].
pub trait SymbolicBiact: SymbolicObject {
    fn sample_left(&self, rng: &mut dyn RngCore) -> Elem;
    fn sample_right(&self, rng: &mut dyn RngCore) -> Elem;
    fn act_left(&self, s: &Elem, a: &Elem) -> Elem;
    fn act_right(&self, a: &Elem, t: &Elem) -> Elem;

    /// `a ∈ sA`.
    fn in_left_image(&self, _s: &Elem, _a: &Elem) -> Result<bool> {
        Err(self.unavailable("sA membership"))
    }
    /// `a ∈ S¹sA`.
    fn in_left_ideal_image(&self, _s: &Elem, _a: &Elem) -> Result<bool> {
        Err(self.unavailable("S¹sA membership"))
    }
    /// `a ∈ At`.
    fn in_right_image(&self, _t: &Elem, _a: &Elem) -> Result<bool> {
        Err(self.unavailable("At membership"))
    }
    /// `a ∈ AtT¹`.
    fn in_right_ideal_image(&self, _t: &Elem, _a: &Elem) -> Result<bool> {
        Err(self.unavailable("AtT¹ membership"))
    }

    fn unavailable(&self, relation: &str) -> Error {
        Error::DecisionUnavailable {
            object: self.name(),
            relation: relation.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Property {
    ML,
    MR,
    MJ,
    LeftStable,
    RightStable,
    LPeriodic,
    RPeriodic,
    GroupBound,
    Simple,
    Bisimple,
    JTrivial,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::ML,
        Property::MR,
        Property::MJ,
        Property::LeftStable,
        Property::RightStable,
        Property::LPeriodic,
        Property::RPeriodic,
        Property::GroupBound,
        Property::Simple,
        Property::Bisimple,
        Property::JTrivial,
    ];

    fn minimal(k: Preorder) -> Property {
        match k {
            Preorder::L => Property::ML,
            Preorder::R => Property::MR,
            Preorder::J => Property::MJ,
        }
    }
}

/// One relation fact about a symbolic object, replayable through `le`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymFact {
    pub k: Preorder,
    /// `true`: mutual `≤_K` (the equivalence); `false`: `x ≤_K y` only.
    pub both_ways: bool,
    pub x: Elem,
    pub y: Elem,
    pub value: bool,
}

impl SymFact {
    pub fn le(k: Preorder, x: Elem, y: Elem, value: bool) -> Self {
        SymFact {
            k,
            both_ways: false,
            x,
            y,
            value,
        }
    }

    pub fn eq(k: Preorder, x: Elem, y: Elem, value: bool) -> Self {
        SymFact {
            k,
            both_ways: true,
            x,
            y,
            value,
        }
    }

    pub fn holds(&self, obj: &dyn SymbolicObject) -> Result<bool> {
        let v = if self.both_ways {
            obj.related(self.k, &self.x, &self.y)?
        } else {
            obj.le(self.k, &self.x, &self.y)?
        };
        Ok(v == self.value)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Evidence {
    /// A standard fact about the object, with a short reason.
    Known { reason: String },
    /// Follows from the closed form of the deciders.
    Structural { reason: String },
    /// The object's own chain for this preorder descends strictly.
    ChainWitness { k: Preorder },
    /// `actor · point = image` plus relation facts showing a violation.
    ActionWitness {
        side: crate::props::Side,
        actor: Elem,
        point: Elem,
        image: Elem,
        facts: Vec<SymFact>,
    },
    /// Relation facts about two elements.
    PairWitness { facts: Vec<SymFact> },
    /// Mutual `≤_J` on sampled pairs.
    SampledDecision,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SheetEntry {
    pub property: Property,
    pub value: bool,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertySheet {
    pub entries: Vec<SheetEntry>,
}

impl PropertySheet {
    pub fn with(mut self, property: Property, value: bool, evidence: Evidence) -> Self {
        self.entries.push(SheetEntry {
            property,
            value,
            evidence,
        });
        self
    }

    pub fn get(&self, p: Property) -> Option<bool> {
        self.entries
            .iter()
            .find(|e| e.property == p)
            .map(|e| e.value)
    }

    /// Checks the implications between properties, then replays every
    /// piece of evidence. Returns a description of each problem.
    pub fn audit(&self, obj: &dyn SymbolicObject, depth: usize, samples: usize) -> Vec<String> {
        use Property::*;
        let mut out = Vec::new();
        let g = |p| self.get(p);
        let name = obj.name();
        let mut rule = |bad: bool, msg: &str| {
            if bad {
                out.push(format!("{name}: {msg}"));
            }
        };
        rule(
            g(ML) == Some(true) && g(LPeriodic) == Some(false),
            "M_L without L-periodicity",
        );
        rule(
            g(MR) == Some(true) && g(RPeriodic) == Some(false),
            "M_R without R-periodicity",
        );
        rule(
            g(LPeriodic) == Some(true) && g(LeftStable) == Some(false),
            "L-periodic but not left stable",
        );
        rule(
            g(RPeriodic) == Some(true) && g(RightStable) == Some(false),
            "R-periodic but not right stable",
        );
        rule(
            g(Simple) == Some(true) && g(MJ) == Some(false),
            "simple without M_J",
        );
        rule(
            g(Bisimple) == Some(true) && g(Simple) == Some(false),
            "bisimple but not simple",
        );
        if let (Some(ml), Some(mr), Some(ls), Some(rs), Some(mj)) =
            (g(ML), g(MR), g(LeftStable), g(RightStable), g(MJ))
        {
            rule(
                (ml && mr) != (ls && rs && mj),
                "M_L ∧ M_R disagrees with stable ∧ M_J",
            );
        }

        let mut rng = ChaCha8Rng::seed_from_u64(AUDIT_SEED);
        for e in &self.entries {
            let tag = format!("{name}: {:?}={}", e.property, e.value);
            let minimal_k = Preorder::ALL
                .into_iter()
                .find(|&k| Property::minimal(k) == e.property);
            if let (Some(k), false) = (minimal_k, e.value) {
                if e.evidence != (Evidence::ChainWitness { k }) {
                    out.push(format!("{tag} lacks a chain witness"));
                }
            }
            if matches!(e.property, LeftStable | RightStable)
                && !e.value
                && !matches!(e.evidence, Evidence::ActionWitness { .. })
            {
                out.push(format!("{tag} lacks an action witness"));
            }
            if e.property == Simple && e.value && e.evidence != Evidence::SampledDecision {
                out.push(format!("{tag} is not sample-tested"));
            }
            match &e.evidence {
                Evidence::ChainWitness { k } => {
                    match verify_chain(obj, *k, chain_iter(obj, *k), depth) {
                        Ok(c) if c.ok => {}
                        Ok(c) => out.push(format!("{tag}: chain fails at step {:?}", c.failed_at)),
                        Err(err) => out.push(format!("{tag}: {err}")),
                    }
                }
                Evidence::ActionWitness {
                    side,
                    actor,
                    point,
                    image,
                    facts,
                } => {
                    if obj.act(actor, point, *side).as_ref() != Some(image) {
                        out.push(format!("{tag}: action image does not replay"));
                    }
                    if !replay_facts(obj, facts) {
                        out.push(format!("{tag}: facts do not replay"));
                    }
                }
                Evidence::PairWitness { facts } => {
                    if !replay_facts(obj, facts) {
                        out.push(format!("{tag}: facts do not replay"));
                    }
                }
                Evidence::SampledDecision => match sampled_j_total(obj, &mut rng, samples) {
                    Ok(None) => {}
                    Ok(Some((x, y))) => out.push(format!("{tag}: {x} and {y} are not J-related")),
                    Err(err) => out.push(format!("{tag}: {err}")),
                },
                Evidence::Known { .. } | Evidence::Structural { .. } => {}
            }
        }
        out
    }
}

fn replay_facts(obj: &dyn SymbolicObject, facts: &[SymFact]) -> bool {
    facts.iter().all(|f| f.holds(obj).unwrap_or(false))
}

/// First sampled pair that is not mutually `≤_J`, if any.
pub fn sampled_j_total(
    obj: &dyn SymbolicObject,
    rng: &mut dyn RngCore,
    samples: usize,
) -> Result<Option<(Elem, Elem)>> {
    for _ in 0..samples {
        let x = obj.sample(rng);
        let y = obj.sample(rng);
        if !obj.related(Preorder::J, &x, &y)? {
            return Ok(Some((x, y)));
        }
    }
    Ok(None)
}

/// Outcome of [`verify_chain`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainCheck {
    pub ok: bool,
    /// Strict steps confirmed.
    pub steps: usize,
    /// Number (from 1) of the first step `x_{i-1} → x_i` that is not strict.
    pub failed_at: Option<usize>,
    pub elements: Vec<Elem>,
}

pub fn chain_iter(obj: &dyn SymbolicObject, k: Preorder) -> impl Iterator<Item = Elem> + '_ {
    (0..).map_while(move |i| obj.chain(k, i))
}

/// Confirms `x_{i+1} <_K x_i` for the first `depth` steps of `chain`.
/// Fails with [`Error::DecisionUnavailable`] if the object cannot decide
/// `≤_K`, and reports a chain that runs out early as not ok.
pub fn verify_chain(
    obj: &dyn SymbolicObject,
    k: Preorder,
    chain: impl IntoIterator<Item = Elem>,
    depth: usize,
) -> Result<ChainCheck> {
    let elements: Vec<Elem> = chain.into_iter().take(depth + 1).collect();
    for (i, w) in elements.windows(2).enumerate() {
        let down = obj.le(k, &w[1], &w[0])?;
        let up = obj.le(k, &w[0], &w[1])?;
        if !down || up {
            return Ok(ChainCheck {
                ok: false,
                steps: i,
                failed_at: Some(i + 1),
                elements,
            });
        }
    }
    let steps = elements.len().saturating_sub(1);
    Ok(ChainCheck {
        ok: steps == depth,
        steps,
        failed_at: None,
        elements,
    })
}

/// Shared handle for catalog objects.
pub type Object = Arc<dyn SymbolicObject>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elem_json() {
        let v = serde_json::to_string(&vec![
            Elem::Pair(0, 3),
            Elem::Int(-2),
            Elem::word("ab"),
            Elem::point(Elem::Zero),
        ])
        .unwrap();
        assert_eq!(v, r#"[[0,3],-2,"ab",{"x":"0"}]"#);
    }

    #[test]
    fn constant_chain_fails_first_step() {
        let n = NatPlus;
        let c = verify_chain(&n, Preorder::L, std::iter::repeat(Elem::Int(3)), 10).unwrap();
        assert!(!c.ok);
        assert_eq!(c.failed_at, Some(1));
    }
}
