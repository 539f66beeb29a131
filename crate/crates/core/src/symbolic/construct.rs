//! Semigroups built from a biact by adjoining one element `x_a` per point.
//!
//! `Usta` glues semigroups `S`, `T` and an `(S,T)`-biact `A` into
//! `S ⊔ T ⊔ {x_a} ⊔ {0}` with `s·x_a = x_{sa}`, `x_a·t = x_{at}` and every
//! other mixed product `0`. `Usa` does the same for a single `S` acting on
//! both sides, with `x_a·s = x_{as}`. Both exist symbolically (deciders by
//! case analysis over the parts) and as finite tables.

use std::ops::Range;
use std::sync::Arc;

use rand::{Rng, RngCore};

use super::{
    Bicyclic, Elem, Evidence, Property, PropertySheet, SymbolicBiact, SymbolicObject,
    SymbolicSemigroup,
};
use crate::actions::Actions;
use crate::biact::FiniteBiact;
use crate::error::{Error, Result};
use crate::green::{GreenStructure, Preorder};
use crate::props::Side;
use crate::semigroup::{FiniteSemigroup, Provenance};

fn semigroup_act(
    s: &dyn SymbolicSemigroup,
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

/// The bicyclic monoid acting on itself by multiplication on both sides.
#[derive(Clone, Copy, Debug, Default)]
pub struct BicyclicRegular;

impl SymbolicObject for BicyclicRegular {
    fn name(&self) -> String {
        "bicyclic-regular".into()
    }

    fn contains(&self, x: &Elem) -> bool {
        Bicyclic.contains(x)
    }

    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Bicyclic.le(k, x, y)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        Bicyclic.sample(rng)
    }

    fn chain(&self, k: Preorder, i: usize) -> Option<Elem> {
        Bicyclic.chain(k, i)
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        Bicyclic.act(actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        PropertySheet {
            entries: Bicyclic
                .sheet()
                .entries
                .into_iter()
                .filter(|e| !matches!(e.property, Property::GroupBound | Property::Bisimple))
                .collect(),
        }
    }
}

impl SymbolicBiact for BicyclicRegular {
    fn sample_left(&self, rng: &mut dyn RngCore) -> Elem {
        Bicyclic.sample(rng)
    }

    fn sample_right(&self, rng: &mut dyn RngCore) -> Elem {
        Bicyclic.sample(rng)
    }

    fn act_left(&self, s: &Elem, a: &Elem) -> Elem {
        Bicyclic.mul(s, a)
    }

    fn act_right(&self, a: &Elem, t: &Elem) -> Elem {
        Bicyclic.mul(a, t)
    }

    fn in_left_image(&self, s: &Elem, a: &Elem) -> Result<bool> {
        Bicyclic.le(Preorder::R, a, s)
    }

    fn in_left_ideal_image(&self, _s: &Elem, _a: &Elem) -> Result<bool> {
        Ok(true)
    }

    fn in_right_image(&self, t: &Elem, a: &Elem) -> Result<bool> {
        Bicyclic.le(Preorder::L, a, t)
    }

    fn in_right_ideal_image(&self, _t: &Elem, _a: &Elem) -> Result<bool> {
        Ok(true)
    }
}

pub type HomFn = Arc<dyn Fn(&Elem) -> Elem + Send + Sync>;

/// A biact restricted along homomorphisms `h_left: S' → S` and
/// `h_right: T' → T`: `s'·a = h_left(s')·a`, `a·t' = a·h_right(t')`.
///
/// The deciders delegate to the base biact, which is exact when both
/// homomorphisms are onto; the membership hooks for `s'A` and `At'` are
/// exact in any case.
#[derive(Clone)]
pub struct PullbackBiact {
    pub base: Arc<dyn SymbolicBiact>,
    pub left: Arc<dyn SymbolicSemigroup>,
    pub right: Arc<dyn SymbolicSemigroup>,
    pub h_left: HomFn,
    pub h_right: HomFn,
    pub sheet: PropertySheet,
}

impl SymbolicObject for PullbackBiact {
    fn name(&self) -> String {
        format!(
            "{} pulled back to {} and {}",
            self.base.name(),
            self.left.name(),
            self.right.name()
        )
    }

    fn contains(&self, x: &Elem) -> bool {
        self.base.contains(x)
    }

    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        self.base.le(k, x, y)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        self.base.sample(rng)
    }

    fn chain(&self, k: Preorder, i: usize) -> Option<Elem> {
        self.base.chain(k, i)
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        Some(match side {
            Side::Left => self.act_left(actor, point),
            Side::Right => self.act_right(point, actor),
        })
    }

    fn sheet(&self) -> PropertySheet {
        self.sheet.clone()
    }
}

impl SymbolicBiact for PullbackBiact {
    fn sample_left(&self, rng: &mut dyn RngCore) -> Elem {
        self.left.sample(rng)
    }

    fn sample_right(&self, rng: &mut dyn RngCore) -> Elem {
        self.right.sample(rng)
    }

    fn act_left(&self, s: &Elem, a: &Elem) -> Elem {
        self.base.act_left(&(self.h_left)(s), a)
    }

    fn act_right(&self, a: &Elem, t: &Elem) -> Elem {
        self.base.act_right(a, &(self.h_right)(t))
    }

    fn in_left_image(&self, s: &Elem, a: &Elem) -> Result<bool> {
        self.base.in_left_image(&(self.h_left)(s), a)
    }

    fn in_left_ideal_image(&self, s: &Elem, a: &Elem) -> Result<bool> {
        self.base.in_left_ideal_image(&(self.h_left)(s), a)
    }

    fn in_right_image(&self, t: &Elem, a: &Elem) -> Result<bool> {
        self.base.in_right_image(&(self.h_right)(t), a)
    }

    fn in_right_ideal_image(&self, t: &Elem, a: &Elem) -> Result<bool> {
        self.base.in_right_ideal_image(&(self.h_right)(t), a)
    }
}

/// `S ⊔ T ⊔ {x_a : a ∈ A} ⊔ {0}` for an `(S,T)`-biact `A`. Elements are
/// `Left(s)`, `Right(t)`, `Point(a)` and `Zero`.
#[derive(Clone)]
pub struct Usta {
    pub s: Arc<dyn SymbolicSemigroup>,
    pub t: Arc<dyn SymbolicSemigroup>,
    pub a: Arc<dyn SymbolicBiact>,
    pub sheet: PropertySheet,
}

impl Usta {
    pub fn new(
        s: Arc<dyn SymbolicSemigroup>,
        t: Arc<dyn SymbolicSemigroup>,
        a: Arc<dyn SymbolicBiact>,
    ) -> Self {
        Usta {
            s,
            t,
            a,
            sheet: PropertySheet::default(),
        }
    }

    /// The ideal `S ∪ {x_a} ∪ {0}` as a semigroup in its own right.
    pub fn ideal_i(&self) -> UstaIdeal {
        UstaIdeal {
            s: self.s.clone(),
            a: self.a.clone(),
            sheet: PropertySheet::default(),
        }
    }

    /// The null ideal `{x_a} ∪ {0}`.
    pub fn ideal_n(&self) -> NullPart {
        NullPart {
            a: self.a.clone(),
            sheet: NullPart::default_sheet(),
        }
    }

    pub fn sample_point(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::point(self.a.sample(rng))
    }
}

impl SymbolicObject for Usta {
    fn name(&self) -> String {
        format!(
            "usta({}, {}; {})",
            self.s.name(),
            self.t.name(),
            self.a.name()
        )
    }

    fn contains(&self, x: &Elem) -> bool {
        match x {
            Elem::Zero => true,
            Elem::Left(v) => self.s.contains(v),
            Elem::Right(v) => self.t.contains(v),
            Elem::Point(v) => self.a.contains(v),
            _ => false,
        }
    }

    /// Case analysis over the parts. Within `S`, `T` and the points the
    /// preorder is that of the part; a point lies below `s` exactly when
    /// `a ∈ sA` (for `≤_R`) or `a ∈ S¹sA` (for `≤_J`), and below `t`
    /// when `a ∈ At` (`≤_L`) or `a ∈ AtT¹` (`≤_J`); `0` is the bottom and
    /// nothing else compares across parts.
    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        use Elem::*;
        Ok(match (x, y) {
            (Zero, _) => true,
            (_, Zero) => false,
            (Left(u), Left(v)) => self.s.le(k, u, v)?,
            (Right(u), Right(v)) => self.t.le(k, u, v)?,
            (Point(a), Point(b)) => self.a.le(k, a, b)?,
            (Point(a), Left(s)) => match k {
                Preorder::L => false,
                Preorder::R => self.a.in_left_image(s, a)?,
                Preorder::J => self.a.in_left_ideal_image(s, a)?,
            },
            (Point(a), Right(t)) => match k {
                Preorder::L => self.a.in_right_image(t, a)?,
                Preorder::R => false,
                Preorder::J => self.a.in_right_ideal_image(t, a)?,
            },
            _ => false,
        })
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        match rng.gen_range(0..10) {
            0..=2 => Elem::left(self.s.sample(rng)),
            3..=5 => Elem::right(self.t.sample(rng)),
            6..=8 => self.sample_point(rng),
            _ => Elem::Zero,
        }
    }

    fn chain(&self, k: Preorder, i: usize) -> Option<Elem> {
        self.a.chain(k, i).map(Elem::point)
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        self.sheet.clone()
    }
}

impl SymbolicSemigroup for Usta {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        use Elem::*;
        match (x, y) {
            (Left(u), Left(v)) => Elem::left(self.s.mul(u, v)),
            (Right(u), Right(v)) => Elem::right(self.t.mul(u, v)),
            (Left(s), Point(a)) => Elem::point(self.a.act_left(s, a)),
            (Point(a), Right(t)) => Elem::point(self.a.act_right(a, t)),
            _ => Zero,
        }
    }
}

/// The ideal `S ∪ {x_a} ∪ {0}` of a [`Usta`], with its own preorders:
/// without `T` acting, `x_a ≤_J x_b` reduces to `a ≤_L b` and `x_a ≤_R x_b`
/// to `a = b`.
#[derive(Clone)]
pub struct UstaIdeal {
    pub s: Arc<dyn SymbolicSemigroup>,
    pub a: Arc<dyn SymbolicBiact>,
    pub sheet: PropertySheet,
}

impl SymbolicObject for UstaIdeal {
    fn name(&self) -> String {
        format!("ideal {} ∪ points of {}", self.s.name(), self.a.name())
    }

    fn contains(&self, x: &Elem) -> bool {
        match x {
            Elem::Zero => true,
            Elem::Left(v) => self.s.contains(v),
            Elem::Point(v) => self.a.contains(v),
            _ => false,
        }
    }

    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        use Elem::*;
        Ok(match (x, y) {
            (Zero, _) => true,
            (_, Zero) => false,
            (Left(u), Left(v)) => self.s.le(k, u, v)?,
            (Point(a), Point(b)) => match k {
                Preorder::L | Preorder::J => self.a.le(Preorder::L, a, b)?,
                Preorder::R => a == b,
            },
            (Point(a), Left(s)) => match k {
                Preorder::L => false,
                Preorder::R => self.a.in_left_image(s, a)?,
                Preorder::J => self.a.in_left_ideal_image(s, a)?,
            },
            _ => false,
        })
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        match rng.gen_range(0..10) {
            0..=4 => Elem::left(self.s.sample(rng)),
            5..=8 => Elem::point(self.a.sample(rng)),
            _ => Elem::Zero,
        }
    }

    fn chain(&self, k: Preorder, i: usize) -> Option<Elem> {
        match k {
            Preorder::L | Preorder::J => self.a.chain(Preorder::L, i).map(Elem::point),
            Preorder::R => None,
        }
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        self.sheet.clone()
    }
}

impl SymbolicSemigroup for UstaIdeal {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        use Elem::*;
        match (x, y) {
            (Left(u), Left(v)) => Elem::left(self.s.mul(u, v)),
            (Left(s), Point(a)) => Elem::point(self.a.act_left(s, a)),
            _ => Zero,
        }
    }
}

/// The null semigroup `{x_a : a ∈ A} ∪ {0}`.
#[derive(Clone)]
pub struct NullPart {
    pub a: Arc<dyn SymbolicBiact>,
    pub sheet: PropertySheet,
}

impl NullPart {
    pub fn default_sheet() -> PropertySheet {
        let s = |r: &str| Evidence::Structural { reason: r.into() };
        let short = "every strict chain has the form x > 0";
        PropertySheet::default()
            .with(Property::ML, true, s(short))
            .with(Property::MR, true, s(short))
            .with(Property::MJ, true, s(short))
            .with(Property::LeftStable, true, s("J-trivial"))
            .with(Property::RightStable, true, s("J-trivial"))
            .with(Property::LPeriodic, true, s("s·a = 0 = s²·a"))
            .with(Property::RPeriodic, true, s("a·s = 0 = a·s²"))
            .with(
                Property::GroupBound,
                true,
                s("every square is the idempotent 0"),
            )
            .with(Property::JTrivial, true, s("x ≤_J y iff x = y or x = 0"))
    }
}

impl SymbolicObject for NullPart {
    fn name(&self) -> String {
        format!("null points of {}", self.a.name())
    }

    fn contains(&self, x: &Elem) -> bool {
        match x {
            Elem::Zero => true,
            Elem::Point(v) => self.a.contains(v),
            _ => false,
        }
    }

    fn le(&self, _k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Ok(x == y || *x == Elem::Zero)
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        if rng.gen_range(0..10) == 0 {
            Elem::Zero
        } else {
            Elem::point(self.a.sample(rng))
        }
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        self.sheet.clone()
    }
}

impl SymbolicSemigroup for NullPart {
    fn mul(&self, _x: &Elem, _y: &Elem) -> Elem {
        Elem::Zero
    }
}

/// `S⁰`: a semigroup with a fresh zero adjoined.
#[derive(Clone)]
pub struct WithZero {
    pub s: Arc<dyn SymbolicSemigroup>,
    pub sheet: PropertySheet,
}

impl SymbolicObject for WithZero {
    fn name(&self) -> String {
        format!("{} with zero", self.s.name())
    }

    fn contains(&self, x: &Elem) -> bool {
        *x == Elem::Zero || self.s.contains(x)
    }

    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        match (x, y) {
            (Elem::Zero, _) => Ok(true),
            (_, Elem::Zero) => Ok(false),
            _ => self.s.le(k, x, y),
        }
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        if rng.gen_range(0..10) == 0 {
            Elem::Zero
        } else {
            self.s.sample(rng)
        }
    }

    fn chain(&self, k: Preorder, i: usize) -> Option<Elem> {
        self.s.chain(k, i)
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        self.sheet.clone()
    }
}

impl SymbolicSemigroup for WithZero {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        if *x == Elem::Zero || *y == Elem::Zero {
            Elem::Zero
        } else {
            self.s.mul(x, y)
        }
    }
}

/// `S ⊔ {x_a : a ∈ A} ⊔ {0}` for an `S`-biact `A`, with
/// `s·x_a = x_{sa}`, `x_a·s = x_{as}` and all other mixed products `0`.
#[derive(Clone)]
pub struct Usa {
    pub s: Arc<dyn SymbolicSemigroup>,
    pub a: Arc<dyn SymbolicBiact>,
    pub sheet: PropertySheet,
}

impl Usa {
    pub fn new(s: Arc<dyn SymbolicSemigroup>, a: Arc<dyn SymbolicBiact>) -> Self {
        Usa {
            s,
            a,
            sheet: PropertySheet::default(),
        }
    }

    /// The null ideal `{x_a} ∪ {0}`.
    pub fn ideal(&self) -> NullPart {
        NullPart {
            a: self.a.clone(),
            sheet: NullPart::default_sheet(),
        }
    }
}

impl SymbolicObject for Usa {
    fn name(&self) -> String {
        format!("usa({}; {})", self.s.name(), self.a.name())
    }

    fn contains(&self, x: &Elem) -> bool {
        match x {
            Elem::Zero => true,
            Elem::Left(v) => self.s.contains(v),
            Elem::Point(v) => self.a.contains(v),
            _ => false,
        }
    }

    /// Points compare as in `A`; a point lies `≤_L`-below `s` when
    /// `a ∈ As`, `≤_R`-below when `a ∈ sA`, and `≤_J`-below when
    /// `a ∈ S¹sA ∪ AsS¹`.
    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        use Elem::*;
        Ok(match (x, y) {
            (Zero, _) => true,
            (_, Zero) => false,
            (Left(u), Left(v)) => self.s.le(k, u, v)?,
            (Point(a), Point(b)) => self.a.le(k, a, b)?,
            (Point(a), Left(s)) => match k {
                Preorder::L => self.a.in_right_image(s, a)?,
                Preorder::R => self.a.in_left_image(s, a)?,
                Preorder::J => {
                    self.a.in_left_ideal_image(s, a)? || self.a.in_right_ideal_image(s, a)?
                }
            },
            _ => false,
        })
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        match rng.gen_range(0..10) {
            0..=4 => Elem::left(self.s.sample(rng)),
            5..=8 => Elem::point(self.a.sample(rng)),
            _ => Elem::Zero,
        }
    }

    fn chain(&self, k: Preorder, i: usize) -> Option<Elem> {
        self.a.chain(k, i).map(Elem::point)
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }

    fn sheet(&self) -> PropertySheet {
        self.sheet.clone()
    }
}

impl SymbolicSemigroup for Usa {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        use Elem::*;
        match (x, y) {
            (Left(u), Left(v)) => Elem::left(self.s.mul(u, v)),
            (Left(s), Point(a)) => Elem::point(self.a.act_left(s, a)),
            (Point(a), Left(s)) => Elem::point(self.a.act_right(a, s)),
            _ => Zero,
        }
    }
}

/// A finite semigroup seen as a symbolic one; elements are `Int(id)`.
#[derive(Clone)]
pub struct FiniteView {
    pub s: FiniteSemigroup,
    pub green: GreenStructure,
}

impl FiniteView {
    pub fn new(s: &FiniteSemigroup) -> Self {
        FiniteView {
            s: s.clone(),
            green: GreenStructure::of(s),
        }
    }
}

fn id(x: &Elem) -> usize {
    match x {
        Elem::Int(n) if *n >= 0 => *n as usize,
        other => panic!("not a finite element id: {other}"),
    }
}

impl SymbolicObject for FiniteView {
    fn name(&self) -> String {
        format!("finite semigroup of order {}", self.s.order())
    }

    fn contains(&self, x: &Elem) -> bool {
        matches!(x, Elem::Int(n) if *n >= 0 && (*n as usize) < self.s.order())
    }

    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Ok(self.green.le(k, id(x), id(y)))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(rng.gen_range(0..self.s.order()) as i64)
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        semigroup_act(self, actor, point, side)
    }
}

impl SymbolicSemigroup for FiniteView {
    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        Elem::Int(self.s.mul(id(x), id(y)) as i64)
    }
}

/// A finite biact seen as a symbolic one; the membership hooks are
/// answered by scanning the action tables.
#[derive(Clone)]
pub struct FiniteBiactView {
    pub a: FiniteBiact,
    pub green: GreenStructure,
}

impl FiniteBiactView {
    pub fn new(a: &FiniteBiact) -> Self {
        FiniteBiactView {
            a: a.clone(),
            green: GreenStructure::of(a),
        }
    }

    fn points(&self) -> Range<usize> {
        0..self.a.size()
    }
}

impl SymbolicObject for FiniteBiactView {
    fn name(&self) -> String {
        format!("finite biact of size {}", self.a.size())
    }

    fn contains(&self, x: &Elem) -> bool {
        matches!(x, Elem::Int(n) if *n >= 0 && (*n as usize) < self.a.size())
    }

    fn le(&self, k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Ok(self.green.le(k, id(x), id(y)))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(rng.gen_range(0..self.a.size()) as i64)
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        Some(match side {
            Side::Left => self.act_left(actor, point),
            Side::Right => self.act_right(point, actor),
        })
    }
}

impl SymbolicBiact for FiniteBiactView {
    fn sample_left(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(rng.gen_range(0..self.a.left().order()) as i64)
    }

    fn sample_right(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(rng.gen_range(0..self.a.right().order()) as i64)
    }

    fn act_left(&self, s: &Elem, a: &Elem) -> Elem {
        Elem::Int(self.a.act_left(id(s), id(a)) as i64)
    }

    fn act_right(&self, a: &Elem, t: &Elem) -> Elem {
        Elem::Int(self.a.act_right(id(a), id(t)) as i64)
    }

    fn in_left_image(&self, s: &Elem, a: &Elem) -> Result<bool> {
        Ok(self.points().any(|b| self.a.act_left(id(s), b) == id(a)))
    }

    fn in_left_ideal_image(&self, s: &Elem, a: &Elem) -> Result<bool> {
        Ok(self
            .points()
            .any(|b| self.green.le(Preorder::L, id(a), self.a.act_left(id(s), b))))
    }

    fn in_right_image(&self, t: &Elem, a: &Elem) -> Result<bool> {
        Ok(self.points().any(|b| self.a.act_right(b, id(t)) == id(a)))
    }

    fn in_right_ideal_image(&self, t: &Elem, a: &Elem) -> Result<bool> {
        Ok(self.points().any(|b| {
            self.green
                .le(Preorder::R, id(a), self.a.act_right(b, id(t)))
        }))
    }
}

/// Where each part of a finite construction sits among the ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnionLayout {
    pub s: Range<usize>,
    pub t: Range<usize>,
    pub x: Range<usize>,
    pub zero: usize,
}

impl UnionLayout {
    pub fn order(&self) -> usize {
        self.zero + 1
    }

    /// The symbolic element matching a finite id, in the encoding used by
    /// [`Usta`] and [`Usa`] over [`FiniteView`] parts.
    pub fn elem(&self, u: usize) -> Elem {
        if self.s.contains(&u) {
            Elem::left(Elem::Int((u - self.s.start) as i64))
        } else if self.t.contains(&u) {
            Elem::right(Elem::Int((u - self.t.start) as i64))
        } else if self.x.contains(&u) {
            Elem::point(Elem::Int((u - self.x.start) as i64))
        } else {
            assert_eq!(u, self.zero, "id {u} outside the layout");
            Elem::Zero
        }
    }

    /// `S ∪ {x_a} ∪ {0}`.
    pub fn ideal_i(&self) -> Vec<usize> {
        self.s
            .clone()
            .chain(self.x.clone())
            .chain([self.zero])
            .collect()
    }

    /// `{x_a} ∪ {0}`.
    pub fn ideal_n(&self) -> Vec<usize> {
        self.x.clone().chain([self.zero]).collect()
    }
}

fn same_semigroup(a: &FiniteSemigroup, b: &FiniteSemigroup) -> bool {
    a.order() == b.order() && a.table() == b.table()
}

fn labelled<'a>(prefix: &str, s: &'a FiniteSemigroup) -> impl Iterator<Item = String> + 'a {
    let prefix = prefix.to_string();
    s.elements().map(move |i| format!("{prefix}{}", s.label(i)))
}

/// Finite table of the `(S,T;A)` construction. Ids: `S` first, then `T`,
/// then one `x_a` per point, then `0`.
pub fn construct_usta(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    a: &FiniteBiact,
) -> Result<(FiniteSemigroup, UnionLayout)> {
    if !same_semigroup(a.left(), s) || !same_semigroup(a.right(), t) {
        return Err(Error::ActionMismatch(
            "the biact is not over the given semigroups".into(),
        ));
    }
    let (ns, nt, m) = (s.order(), t.order(), a.size());
    let layout = UnionLayout {
        s: 0..ns,
        t: ns..ns + nt,
        x: ns + nt..ns + nt + m,
        zero: ns + nt + m,
    };
    let n = layout.order();
    let mut table = vec![layout.zero; n * n];
    for i in 0..ns {
        for j in 0..ns {
            table[i * n + j] = s.mul(i, j);
        }
        for p in 0..m {
            table[i * n + layout.x.start + p] = layout.x.start + a.act_left(i, p);
        }
    }
    for i in 0..nt {
        for j in 0..nt {
            table[(layout.t.start + i) * n + layout.t.start + j] = layout.t.start + t.mul(i, j);
        }
    }
    for p in 0..m {
        for j in 0..nt {
            table[(layout.x.start + p) * n + layout.t.start + j] =
                layout.x.start + a.act_right(p, j);
        }
    }
    let labels: Vec<String> = labelled("s:", s)
        .chain(labelled("t:", t))
        .chain((0..m).map(|p| format!("x_{}", a.label(p))))
        .chain(["0".to_string()])
        .collect();
    let u = FiniteSemigroup::from_flat(n, table)?
        .with_labels(labels)?
        .with_provenance(Provenance::Composite("usta".into()));
    Ok((u, layout))
}

/// Finite table of the `(S;A)` construction. Ids: `S`, then one `x_a` per
/// point, then `0`; the layout's `t` range is empty.
pub fn construct_usa(
    s: &FiniteSemigroup,
    a: &FiniteBiact,
) -> Result<(FiniteSemigroup, UnionLayout)> {
    if !same_semigroup(a.left(), s) || !same_semigroup(a.right(), s) {
        return Err(Error::ActionMismatch(
            "the biact is not over the given semigroup on both sides".into(),
        ));
    }
    let (ns, m) = (s.order(), a.size());
    let layout = UnionLayout {
        s: 0..ns,
        t: ns..ns,
        x: ns..ns + m,
        zero: ns + m,
    };
    let n = layout.order();
    let mut table = vec![layout.zero; n * n];
    for i in 0..ns {
        for j in 0..ns {
            table[i * n + j] = s.mul(i, j);
        }
        for p in 0..m {
            table[i * n + layout.x.start + p] = layout.x.start + a.act_left(i, p);
            table[(layout.x.start + p) * n + i] = layout.x.start + a.act_right(p, i);
        }
    }
    let labels: Vec<String> = labelled("s:", s)
        .chain((0..m).map(|p| format!("x_{}", a.label(p))))
        .chain(["0".to_string()])
        .collect();
    let u = FiniteSemigroup::from_flat(n, table)?
        .with_labels(labels)?
        .with_provenance(Provenance::Composite("usa".into()));
    Ok((u, layout))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::named;

    #[test]
    fn trivial_parts_give_order_four() {
        let t = named::trivial();
        let a = FiniteBiact::regular(&t);
        let (u, layout) = construct_usta(&t, &t, &a).unwrap();
        assert_eq!(u.order(), 4);
        assert!(u.triple_scan().is_ok());
        assert!(u.is_subset_role(&layout.ideal_i(), crate::semigroup::Role::Ideal));
        assert!(u.is_subset_role(&layout.ideal_n(), crate::semigroup::Role::Ideal));
    }

    #[test]
    fn usa_trivial_order_three() {
        let t = named::trivial();
        let (u, _) = construct_usa(&t, &FiniteBiact::regular(&t)).unwrap();
        assert_eq!(u.order(), 3);
    }

    #[test]
    fn mismatched_biact_rejected() {
        let a = FiniteBiact::regular(&named::t2());
        let t = named::trivial();
        assert!(matches!(
            construct_usta(&t, &t, &a),
            Err(Error::ActionMismatch(_))
        ));
    }

    #[test]
    fn symbolic_usta_matches_table_on_t2() {
        let s = named::t2();
        let a = FiniteBiact::regular(&s);
        let (u, layout) = construct_usta(&s, &s, &a).unwrap();
        let g = GreenStructure::of(&u);
        let sym = Usta::new(
            Arc::new(FiniteView::new(&s)),
            Arc::new(FiniteView::new(&s)),
            Arc::new(FiniteBiactView::new(&a)),
        );
        for x in u.elements() {
            for y in u.elements() {
                assert_eq!(
                    sym.mul(&layout.elem(x), &layout.elem(y)),
                    layout.elem(u.mul(x, y))
                );
                for k in Preorder::ALL {
                    assert_eq!(
                        sym.le(k, &layout.elem(x), &layout.elem(y)).unwrap(),
                        g.le(k, x, y),
                        "{k:?} {x} {y}"
                    );
                }
            }
        }
    }
}
