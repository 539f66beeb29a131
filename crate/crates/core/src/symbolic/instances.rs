//! Two worked constructions over the bicyclic monoid.
//!
//! [`IdealWithoutMj`]: `U` built from `S = T = B` acting on itself has
//! finitely many J-classes, yet its ideal `I = B ∪ {x_a} ∪ {0}` has the
//! infinite descent `x_{(0,0)} >_J x_{(0,1)} >_J …`. Factoring out the null
//! ideal `N` of points leaves `B⁰`, which again satisfies M_J.
//!
//! [`UnstableExtension`]: the free semigroup on `a, b` acting on `B` through
//! `a ↦ (0,1)`, `b ↦ (1,0)`. The ideal of points is null and the quotient is
//! the free semigroup with a zero, both J-trivial and so stable, while the
//! whole semigroup is not left stable.

use std::sync::Arc;

use rand::RngCore;

use super::{
    Bicyclic, BicyclicRegular, Elem, Evidence, FreeSemigroup, NullPart, Property, PropertySheet,
    PullbackBiact, SymFact, SymbolicObject, SymbolicSemigroup, Usa, Usta, UstaIdeal, WithZero,
};
use crate::error::Result;
use crate::green::Preorder;
use crate::props::Side;

fn structural(reason: &str) -> Evidence {
    Evidence::Structural {
        reason: reason.into(),
    }
}

/// Sampled check that each part is a single J-class and that different
/// parts are never J-related.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartCount {
    pub parts: usize,
    /// First pair inside one part found not J-related.
    pub split: Option<(Elem, Elem)>,
    /// First pair from two parts found J-related.
    pub merged: Option<(Elem, Elem)>,
}

impl PartCount {
    /// The number of J-classes, when the samples support the partition.
    pub fn classes(&self) -> Option<usize> {
        (self.split.is_none() && self.merged.is_none()).then_some(self.parts)
    }
}

type Sampler<'a> = Box<dyn Fn(&mut dyn RngCore) -> Elem + 'a>;

pub fn count_j_parts(
    obj: &dyn SymbolicObject,
    parts: &[Sampler<'_>],
    rng: &mut dyn RngCore,
    samples: usize,
) -> Result<PartCount> {
    let mut out = PartCount {
        parts: parts.len(),
        split: None,
        merged: None,
    };
    for _ in 0..samples {
        for (i, p) in parts.iter().enumerate() {
            let x = p(rng);
            let y = p(rng);
            if out.split.is_none() && !obj.related(Preorder::J, &x, &y)? {
                out.split = Some((x.clone(), y));
            }
            for q in &parts[i + 1..] {
                let z = q(rng);
                if out.merged.is_none() && obj.related(Preorder::J, &x, &z)? {
                    out.merged = Some((x.clone(), z));
                }
            }
        }
    }
    Ok(out)
}

pub struct IdealWithoutMj {
    pub u: Arc<Usta>,
    pub i: Arc<UstaIdeal>,
    pub n: Arc<NullPart>,
    pub i_over_n: Arc<WithZero>,
    pub a: Arc<BicyclicRegular>,
}

pub fn ideal_without_mj() -> IdealWithoutMj {
    let b: Arc<dyn SymbolicSemigroup> = Arc::new(Bicyclic);
    let a = Arc::new(BicyclicRegular);
    let mut u = Usta::new(b.clone(), b.clone(), a.clone());
    u.sheet = PropertySheet::default().with(
        Property::MJ,
        true,
        structural("four J-classes: B on the left, B on the right, the points, and 0"),
    );
    let mut i = u.ideal_i();
    i.sheet = PropertySheet::default()
        .with(
            Property::MJ,
            false,
            Evidence::ChainWitness { k: Preorder::J },
        )
        .with(
            Property::ML,
            false,
            Evidence::ChainWitness { k: Preorder::L },
        );
    let n = u.ideal_n();
    let i_over_n = WithZero {
        s: b,
        sheet: PropertySheet::default()
            .with(Property::MJ, true, structural("two J-classes: B and 0"))
            .with(
                Property::Simple,
                false,
                Evidence::PairWitness {
                    facts: vec![SymFact::le(
                        Preorder::J,
                        Elem::Pair(0, 0),
                        Elem::Zero,
                        false,
                    )],
                },
            ),
    };
    IdealWithoutMj {
        u: Arc::new(u),
        i: Arc::new(i),
        n: Arc::new(n),
        i_over_n: Arc::new(i_over_n),
        a,
    }
}

impl IdealWithoutMj {
    /// `x_{(0,0)}, x_{(0,1)}, x_{(0,2)}, …`
    pub fn i_chain(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..).map(|n| Elem::point(Elem::Pair(0, n)))
    }

    pub fn u_parts(&self, rng: &mut dyn RngCore, samples: usize) -> Result<PartCount> {
        let parts: Vec<Sampler<'_>> = vec![
            Box::new(|r| Elem::left(Bicyclic.sample(r))),
            Box::new(|r| Elem::right(Bicyclic.sample(r))),
            Box::new(|r| Elem::point(Bicyclic.sample(r))),
            Box::new(|_| Elem::Zero),
        ];
        count_j_parts(self.u.as_ref(), &parts, rng, samples)
    }

    pub fn quotient_parts(&self, rng: &mut dyn RngCore, samples: usize) -> Result<PartCount> {
        let parts: Vec<Sampler<'_>> =
            vec![Box::new(|r| Bicyclic.sample(r)), Box::new(|_| Elem::Zero)];
        count_j_parts(self.i_over_n.as_ref(), &parts, rng, samples)
    }

    /// First sampled pair of points whose product in `U` is not `0`.
    pub fn n_null_violation(&self, rng: &mut dyn RngCore, samples: usize) -> Option<(Elem, Elem)> {
        (0..samples)
            .map(|_| (self.u.sample_point(rng), self.u.sample_point(rng)))
            .find(|(x, y)| self.u.mul(x, y) != Elem::Zero)
    }
}

/// `a ↦ (0,1)`, `b ↦ (1,0)`, extended multiplicatively.
pub fn bicyclic_image(x: &Elem) -> Elem {
    let Elem::Word(w) = x else {
        panic!("not a word: {x}")
    };
    w.iter().fold(Elem::Pair(0, 0), |acc, &c| {
        let g = if c == 0 {
            Elem::Pair(0, 1)
        } else {
            Elem::Pair(1, 0)
        };
        Bicyclic.mul(&acc, &g)
    })
}

pub struct UnstableExtension {
    pub u: Arc<Usa>,
    pub i: Arc<NullPart>,
    pub quotient: Arc<WithZero>,
    pub s: Arc<FreeSemigroup>,
    pub a: Arc<PullbackBiact>,
}

/// The violation of left stability: `s = a`, `x = x_{(0,0)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityWitness {
    pub actor: Elem,
    pub point: Elem,
    pub image: Elem,
}

fn witness() -> StabilityWitness {
    StabilityWitness {
        actor: Elem::left(Elem::word("a")),
        point: Elem::point(Elem::Pair(0, 0)),
        image: Elem::point(Elem::Pair(0, 1)),
    }
}

fn witness_evidence(w: &StabilityWitness) -> Evidence {
    Evidence::ActionWitness {
        side: Side::Left,
        actor: w.actor.clone(),
        point: w.point.clone(),
        image: w.image.clone(),
        facts: vec![
            SymFact::eq(Preorder::J, w.image.clone(), w.point.clone(), true),
            SymFact::eq(Preorder::L, w.image.clone(), w.point.clone(), false),
        ],
    }
}

fn unwrap_points(w: &StabilityWitness) -> StabilityWitness {
    let inner = |x: &Elem| match x {
        Elem::Left(v) | Elem::Point(v) => (**v).clone(),
        other => other.clone(),
    };
    StabilityWitness {
        actor: inner(&w.actor),
        point: inner(&w.point),
        image: inner(&w.image),
    }
}

pub fn unstable_extension() -> UnstableExtension {
    let s = Arc::new(FreeSemigroup::new(2));
    let w = witness();
    let h: super::construct::HomFn = Arc::new(bicyclic_image);
    let a = PullbackBiact {
        base: Arc::new(BicyclicRegular),
        left: s.clone(),
        right: s.clone(),
        h_left: h.clone(),
        h_right: h,
        sheet: PropertySheet::default()
            .with(
                Property::MJ,
                true,
                structural("J is total on the bicyclic monoid"),
            )
            .with(
                Property::LeftStable,
                false,
                witness_evidence(&unwrap_points(&w)),
            ),
    };
    let a = Arc::new(a);
    let mut u = Usa::new(s.clone(), a.clone());
    u.sheet = PropertySheet::default().with(Property::LeftStable, false, witness_evidence(&w));
    let i = u.ideal();
    let quotient = WithZero {
        s: s.clone(),
        sheet: PropertySheet::default()
            .with(Property::LeftStable, true, structural("J-trivial"))
            .with(Property::RightStable, true, structural("J-trivial"))
            .with(
                Property::JTrivial,
                true,
                structural("u ≤_J v iff v is a factor of u or u = 0"),
            ),
    };
    UnstableExtension {
        u: Arc::new(u),
        i: Arc::new(i),
        quotient: Arc::new(quotient),
        s,
        a,
    }
}

impl UnstableExtension {
    pub fn witness(&self) -> StabilityWitness {
        witness()
    }

    /// Recomputes the product and the relations behind the witness:
    /// `s·x J x` but not `s·x L x`.
    pub fn replay_witness(&self) -> Result<bool> {
        let w = self.witness();
        let image = self.u.mul(&w.actor, &w.point);
        Ok(image == w.image
            && self.u.related(Preorder::J, &image, &w.point)?
            && !self.u.related(Preorder::L, &image, &w.point)?)
    }

    /// First sampled pair of points whose product is not `0`.
    pub fn i_null_violation(&self, rng: &mut dyn RngCore, samples: usize) -> Option<(Elem, Elem)> {
        (0..samples)
            .map(|_| {
                (
                    Elem::point(self.a.sample(rng)),
                    Elem::point(self.a.sample(rng)),
                )
            })
            .find(|(x, y)| self.u.mul(x, y) != Elem::Zero)
    }

    /// First sampled pair of distinct J-related elements of the quotient.
    pub fn quotient_j_violation(
        &self,
        rng: &mut dyn RngCore,
        samples: usize,
    ) -> Result<Option<(Elem, Elem)>> {
        for _ in 0..samples {
            let x = self.quotient.sample(rng);
            let y = self.quotient.sample(rng);
            if x != y && self.quotient.related(Preorder::J, &x, &y)? {
                return Ok(Some((x, y)));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::{verify_chain, AUDIT_SEED};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ideal_chain_descends_but_u_has_four_classes() {
        let x = ideal_without_mj();
        assert!(
            verify_chain(x.i.as_ref(), Preorder::J, x.i_chain(), 100)
                .unwrap()
                .ok
        );
        let mut rng = ChaCha8Rng::seed_from_u64(AUDIT_SEED);
        assert_eq!(x.u_parts(&mut rng, 300).unwrap().classes(), Some(4));
        assert_eq!(x.quotient_parts(&mut rng, 300).unwrap().classes(), Some(2));
        assert_eq!(x.n_null_violation(&mut rng, 300), None);
    }

    #[test]
    fn the_same_chain_is_flat_in_u() {
        let x = ideal_without_mj();
        let c = verify_chain(x.u.as_ref(), Preorder::J, x.i_chain(), 100).unwrap();
        assert!(!c.ok);
        assert_eq!(c.failed_at, Some(1));
    }

    #[test]
    fn unstable_witness_replays() {
        let x = unstable_extension();
        assert!(x.replay_witness().unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(AUDIT_SEED);
        assert_eq!(x.i_null_violation(&mut rng, 300), None);
        assert_eq!(x.quotient_j_violation(&mut rng, 300).unwrap(), None);
    }

    #[test]
    fn image_is_onto_generators() {
        assert_eq!(bicyclic_image(&Elem::word("ab")), Elem::Pair(0, 0));
        assert_eq!(bicyclic_image(&Elem::word("ba")), Elem::Pair(1, 1));
        assert_eq!(bicyclic_image(&Elem::word("bba")), Elem::Pair(2, 1));
    }
}
