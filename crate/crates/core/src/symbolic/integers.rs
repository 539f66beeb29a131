//! The integers as a biact over the positive naturals, acting by addition
//! on both sides, and its Rees quotient by the naturals.
//!
//! In the biact, `x ≤_K y` iff `x ≥ y` for every K, so
//! `0 > 1 > 2 > …` never stabilises even though `(ℤ,+)` has a single
//! class. In the quotient the carrier is `{…, −2, −1, 0}` plus a zero, and
//! the down-set of `−k` is `{−k, …, 0, zero}`, which is finite.

use rand::{Rng, RngCore};

use super::{Elem, Evidence, Property, PropertySheet, SymFact, SymbolicBiact, SymbolicObject};
use crate::error::Result;
use crate::green::Preorder;
use crate::props::Side;

fn int(x: &Elem) -> i64 {
    match x {
        Elem::Int(n) => *n,
        other => panic!("not an integer element: {other}"),
    }
}

fn natural(x: &Elem) -> i64 {
    let n = int(x);
    assert!(n >= 1, "actor {n} is not a positive natural");
    n
}

fn structural(reason: &str) -> Evidence {
    Evidence::Structural {
        reason: reason.into(),
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct IntegersOverNaturals;

impl SymbolicObject for IntegersOverNaturals {
    fn name(&self) -> String {
        "naturals acting on integers".into()
    }

    fn contains(&self, x: &Elem) -> bool {
        matches!(x, Elem::Int(_))
    }

    fn le(&self, _k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Ok(int(x) >= int(y))
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(rng.gen_range(-1000..=1000))
    }

    fn chain(&self, _k: Preorder, i: usize) -> Option<Elem> {
        Some(Elem::Int(i as i64))
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        Some(match side {
            Side::Left => self.act_left(actor, point),
            Side::Right => self.act_right(point, actor),
        })
    }

    fn sheet(&self) -> PropertySheet {
        let never_j = "n + x is never J-related to x, so stability holds vacuously";
        PropertySheet::default()
            .with(
                Property::ML,
                false,
                Evidence::ChainWitness { k: Preorder::L },
            )
            .with(
                Property::MR,
                false,
                Evidence::ChainWitness { k: Preorder::R },
            )
            .with(
                Property::MJ,
                false,
                Evidence::ChainWitness { k: Preorder::J },
            )
            .with(Property::LeftStable, true, structural(never_j))
            .with(Property::RightStable, true, structural(never_j))
            .with(
                Property::LPeriodic,
                false,
                structural("1ⁿ·x = x + n are pairwise not L-related"),
            )
            .with(
                Property::RPeriodic,
                false,
                structural("x·1ⁿ = x + n are pairwise not R-related"),
            )
            .with(
                Property::Simple,
                false,
                Evidence::PairWitness {
                    facts: vec![SymFact::le(Preorder::J, Elem::Int(-1), Elem::Int(0), false)],
                },
            )
            .with(Property::JTrivial, true, structural("x ≤_J y iff x ≥ y"))
    }
}

impl SymbolicBiact for IntegersOverNaturals {
    fn sample_left(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(rng.gen_range(1..=1000))
    }

    fn sample_right(&self, rng: &mut dyn RngCore) -> Elem {
        self.sample_left(rng)
    }

    fn act_left(&self, s: &Elem, a: &Elem) -> Elem {
        Elem::Int(natural(s) + int(a))
    }

    fn act_right(&self, a: &Elem, t: &Elem) -> Elem {
        Elem::Int(int(a) + natural(t))
    }

    fn in_left_image(&self, s: &Elem, a: &Elem) -> Result<bool> {
        natural(s);
        int(a);
        Ok(true)
    }

    fn in_left_ideal_image(&self, s: &Elem, a: &Elem) -> Result<bool> {
        self.in_left_image(s, a)
    }

    fn in_right_image(&self, t: &Elem, a: &Elem) -> Result<bool> {
        self.in_left_image(t, a)
    }

    fn in_right_ideal_image(&self, t: &Elem, a: &Elem) -> Result<bool> {
        self.in_left_image(t, a)
    }
}

/// The Rees quotient of the integers by the naturals: points `x ≤ 0` and
/// a zero that absorbs every image landing in the naturals.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntegersOverNaturalsQuotient;

impl IntegersOverNaturalsQuotient {
    fn shift(x: &Elem, n: i64) -> Elem {
        match x {
            Elem::Zero => Elem::Zero,
            Elem::Int(v) if v + n <= 0 => Elem::Int(v + n),
            Elem::Int(_) => Elem::Zero,
            other => panic!("not a quotient element: {other}"),
        }
    }

    /// Points strictly below `x`, found by applying every action that
    /// does not immediately reach the zero plus one that does.
    pub fn strict_successors(&self, x: &Elem) -> Vec<Elem> {
        let mut out = Vec::new();
        match x {
            Elem::Zero => {}
            Elem::Int(v) => {
                for n in 1..=(1 - v) {
                    out.push(self.act_left(&Elem::Int(n), x));
                    out.push(self.act_right(x, &Elem::Int(n)));
                }
            }
            other => panic!("not a quotient element: {other}"),
        }
        out.sort();
        out.dedup();
        out.retain(|y| y != x);
        out
    }

    /// Length of the longest strictly descending chain starting at `x`,
    /// by exhaustive stepping through the action orbit. Every step is
    /// confirmed strict through the public decider.
    pub fn longest_descent(&self, x: &Elem) -> Result<usize> {
        let mut memo = std::collections::HashMap::new();
        self.longest_from(x, &mut memo)
    }

    fn longest_from(
        &self,
        x: &Elem,
        memo: &mut std::collections::HashMap<Elem, usize>,
    ) -> Result<usize> {
        if let Some(&v) = memo.get(x) {
            return Ok(v);
        }
        let mut best = 0;
        for y in self.strict_successors(x) {
            let strict = self.le(Preorder::J, &y, x)? && !self.le(Preorder::J, x, &y)?;
            if strict {
                best = best.max(1 + self.longest_from(&y, memo)?);
            }
        }
        memo.insert(x.clone(), best);
        Ok(best)
    }
}

impl SymbolicObject for IntegersOverNaturalsQuotient {
    fn name(&self) -> String {
        "naturals acting on integers modulo the naturals".into()
    }

    fn contains(&self, x: &Elem) -> bool {
        matches!(x, Elem::Zero) || matches!(x, Elem::Int(v) if *v <= 0)
    }

    fn le(&self, _k: Preorder, x: &Elem, y: &Elem) -> Result<bool> {
        Ok(match (x, y) {
            (Elem::Zero, _) => true,
            (_, Elem::Zero) => false,
            _ => int(x) >= int(y),
        })
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Elem {
        if rng.gen_range(0..10) == 0 {
            Elem::Zero
        } else {
            Elem::Int(-rng.gen_range(0..=1000))
        }
    }

    fn act(&self, actor: &Elem, point: &Elem, side: Side) -> Option<Elem> {
        Some(match side {
            Side::Left => self.act_left(actor, point),
            Side::Right => self.act_right(point, actor),
        })
    }

    fn sheet(&self) -> PropertySheet {
        let finite = "the down-set of -k is {-k, …, 0, zero}, which is finite";
        let never_j = "distinct points are never J-related";
        PropertySheet::default()
            .with(Property::ML, true, structural(finite))
            .with(Property::MR, true, structural(finite))
            .with(Property::MJ, true, structural(finite))
            .with(Property::LeftStable, true, structural(never_j))
            .with(Property::RightStable, true, structural(never_j))
            .with(
                Property::LPeriodic,
                true,
                structural("1ⁿ·x reaches the zero"),
            )
            .with(
                Property::RPeriodic,
                true,
                structural("x·1ⁿ reaches the zero"),
            )
            .with(Property::JTrivial, true, structural(never_j))
    }
}

impl SymbolicBiact for IntegersOverNaturalsQuotient {
    fn sample_left(&self, rng: &mut dyn RngCore) -> Elem {
        Elem::Int(rng.gen_range(1..=1000))
    }

    fn sample_right(&self, rng: &mut dyn RngCore) -> Elem {
        self.sample_left(rng)
    }

    fn act_left(&self, s: &Elem, a: &Elem) -> Elem {
        Self::shift(a, natural(s))
    }

    fn act_right(&self, a: &Elem, t: &Elem) -> Elem {
        Self::shift(a, natural(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::verify_chain;

    #[test]
    fn descent_from_minus_k() {
        let q = IntegersOverNaturalsQuotient;
        for k in [0, 1, 5, 30] {
            assert_eq!(q.longest_descent(&Elem::Int(-k)).unwrap(), k as usize + 1);
        }
    }

    #[test]
    fn minus_hundred_to_zero_descends() {
        let b = IntegersOverNaturals;
        let chain = (-100..=0).map(Elem::Int);
        for k in Preorder::ALL {
            assert!(verify_chain(&b, k, chain.clone(), 100).unwrap().ok);
        }
    }
}
