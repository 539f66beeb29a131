//! One checker per registered statement.
//!
//! Finite checkers quantify over the shared corpora and over every
//! auxiliary substructure (subacts, ideals, bi-ideals, subsemigroups,
//! single-pair congruences). Where the statement itself is vacuous on
//! finite objects, the checker also tests the structural facts its
//! argument depends on and marks the outcome vacuous.

use std::sync::Arc;

use rayon::prelude::*;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::corpus::{over, Context};
use super::{Claim, Expectation, Outcome, Scope};
use crate::biact::{FiniteBiact, Subact};
use crate::congruence::{congruence_closure, quotient_biact, quotient_semigroup};
use crate::enumerate::{all_biacts_vec, semigroups_up_to};
use crate::error::Result;
use crate::green::{green_index, GreenStructure, Preorder};
use crate::iso::find_isomorphism;
use crate::props::{self, k_preserving_with, regular_subsemigroup, retract, Analysis, Side};
use crate::semigroup::{Adjoin, FiniteSemigroup, Role};
use crate::symbolic::oracles::{bicyclic_agreement, free_j_agreement, words};
use crate::symbolic::{
    construct_usa, construct_usta, ideal_without_mj, instances::bicyclic_image, lookup,
    sampled_j_total, unstable_extension, verify_chain, Bicyclic, BicyclicRegular, Elem,
    FiniteBiactView, FiniteView, FreeSemigroup, IntPlus, IntegersOverNaturals,
    IntegersOverNaturalsQuotient, NatPlus, Property, SymbolicObject, SymbolicSemigroup, Usa, Usta,
    CATALOG_NAMES,
};
use crate::Actions;

use Expectation::*;
use Scope::*;

macro_rules! claim {
    ($id:literal, $scope:expr, $expected:expr, $check:path, $summary:literal) => {
        Claim {
            id: $id,
            summary: $summary,
            scope: $scope,
            expected: $expected,
            check: $check,
        }
    };
}

pub static REGISTRY: &[Claim] = &[
    claim!("L3.3", FiniteExhaustive, MustHold, l3_3, "the minimal condition on K-classes is equivalent to stabilisation of descending chains"),
    claim!("P3.4", FiniteExhaustive, MustHold, p3_4, "S satisfies M_L iff every (S,T)-biact does"),
    claim!("P3.5", FiniteExhaustive, MustHold, p3_5, "the eight formulations of left stability agree, and dually on the right"),
    claim!("P3.6", FiniteExhaustive, MustHold, p3_6, "stable iff D = J and the one-sided preorders meet the opposite relations in H"),
    claim!("L3.7", FiniteExhaustive, MustHold, l3_7, "M_L implies L-periodic, which implies left stable"),
    claim!("C3.8", FiniteExhaustive, MustHold, c3_8, "every finite biact is stable"),
    claim!("C3.9", FiniteExhaustive, MustHold, c3_9, "an L-periodic left semigroup makes every biact left stable"),
    claim!("L3.10", FiniteExhaustive, MustHold, l3_10, "under M_J, M_L is equivalent to left stability"),
    claim!("P3.11", FiniteExhaustive, MustHold, p3_11, "M_L and M_R iff M_J with both periodicities iff stable with M_J"),
    claim!("C3.12", FiniteExhaustive, MustHold, c3_12, "M_L on S and M_R on T give M_L and M_R on every (S,T)-biact"),
    claim!("C3.13", FiniteExhaustive, MustHold, c3_13, "for semigroups: M_L and M_R iff group-bound with M_J iff stable with M_J"),
    claim!("R3.14(2)", SymbolicWitness, CounterexampleExpected, r3_14_2, "the bicyclic monoid is bisimple but fails M_L and M_R"),
    claim!("R3.14(3)", FiniteExhaustive, MustHold, r3_14_3, "in the product biact (a,b) <=_J (c,d) iff a <=_L c and b <=_R d"),
    claim!("P4.1", FiniteExhaustive, MustHold, p4_1, "M_K passes from a biact to its quotients"),
    claim!("L4.2", FiniteExhaustive, MustHold, l4_2, "preorders of S/rho agree with those of the biact quotient of S"),
    claim!("C4.3", FiniteExhaustive, MustHold, c4_3, "M_K passes from a semigroup to its quotients"),
    claim!("P4.4", FiniteExhaustive, MustHold, p4_4, "a biact satisfies M_K iff a subact and its Rees quotient do"),
    claim!("P4.5", FiniteExhaustive, MustHold, p4_5, "the relative biact of T satisfies M_K iff T and the relative quotient do"),
    claim!("T4.6", FiniteExhaustive, MustHold, t4_6, "with finitely many relative L-classes outside T, M_L transfers between S, T and the relative biact"),
    claim!("C4.7", FiniteExhaustive, MustHold, c4_7, "finite Green index transfers M_L between S and T"),
    claim!("Ex4.8", SymbolicWitness, CounterexampleExpected, ex4_8, "the naturals in the integers: the relative biact fails M_K while its quotient satisfies it"),
    claim!("L4.10", FiniteExhaustive, MustHold, l4_10, "K-preserving subsemigroups inherit M_K"),
    claim!("C4.11", FiniteExhaustive, MustHold, c4_11, "regular subsemigroups and ideal complements inherit the minimal conditions"),
    claim!("T4.13", FiniteExhaustive, MustHold, t4_13, "bi-ideals inherit M_L"),
    claim!("C4.14", FiniteExhaustive, MustHold, c4_14, "bi-ideals of stable semigroups with M_J satisfy M_J"),
    claim!("P4.15", FiniteExhaustive, MustHold, p4_15, "S satisfies M_K iff the ideal biact and S/I do"),
    claim!("T4.16", FiniteExhaustive, MustHold, t4_16, "S satisfies M_L iff the ideal I and S/I do"),
    claim!("Con4.17/P4.18", DerivedDecider, MustHold, con4_17, "the (S,T;A) extension: ideals, null part, and the J-deciders on points"),
    claim!("C4.19", SymbolicWitness, CounterexampleExpected, c4_19, "a semigroup with M_J whose ideal fails M_J"),
    claim!("S5.0", SymbolicWitness, CounterexampleExpected, s5_0, "stability is not closed under quotients"),
    claim!("P5.1", FiniteExhaustive, MustHold, p5_1, "a biact is left stable iff a subact and its Rees quotient are"),
    claim!("P5.2", FiniteExhaustive, MustHold, p5_2, "the relative biact is stable iff T and the relative quotient are"),
    claim!("P5.3", FiniteExhaustive, MustHold, p5_3, "finitely many relative L-classes: left stability of S passes to T"),
    claim!("T5.4", FiniteExhaustive, MustHold, t5_4, "finite Green index: S, T and the relative biact are stable together"),
    claim!("L5.5", FiniteExhaustive, MustHold, l5_5, "L-preserving subsemigroups of left stable semigroups are left stable"),
    claim!("C5.6", FiniteExhaustive, MustHold, c5_6, "regular subsemigroups, retracts and ideal complements inherit stability"),
    claim!("T5.7", FiniteExhaustive, MustHold, t5_7, "bi-ideals of left stable semigroups are left stable"),
    claim!("L5.8", FiniteExhaustive, MustHold, l5_8, "S/I is stable iff the biact quotient by the ideal is"),
    claim!("P5.9", FiniteExhaustive, MustHold, p5_9, "S is stable iff the ideal biact and S/I are"),
    claim!("Con5.10/P5.11", DerivedDecider, MustHold, con5_10, "the (S;A) extension: point preorders follow A, and U/I is S with a zero"),
    claim!("C5.12", SymbolicWitness, CounterexampleExpected, c5_12, "a semigroup that is not stable although an ideal and its Rees quotient are"),
];

fn desc_s(s: &FiniteSemigroup) -> String {
    format!("S{:?}", s.table())
}

fn desc_b(a: &FiniteBiact) -> String {
    format!(
        "A(S{:?}, T{:?}; left {:?}, right {:?})",
        a.left().table(),
        a.right().table(),
        a.left_action(),
        a.right_action()
    )
}

fn rng(ctx: &Context) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(ctx.config.seed)
}

/// Compares all three preorders on corresponding ids: `map` lists pairs
/// `(id in a, id in b)`.
fn same_preorders(
    out: &mut Outcome,
    ga: &GreenStructure,
    gb: &GreenStructure,
    map: &[(usize, usize)],
    what: &dyn Fn() -> String,
) {
    for &(a1, b1) in map {
        for &(a2, b2) in map {
            for k in Preorder::ALL {
                let (x, y) = (ga.le(k, a1, a2), gb.le(k, b1, b2));
                out.require(x == y, || {
                    format!("{}: {k:?} on ({a1},{a2}) gives {x}, expected {y}", what())
                });
            }
        }
    }
}

fn all_mk<X: crate::Actions + ?Sized>(an: &Analysis<'_, X>) -> bool {
    Preorder::ALL.iter().all(|&k| an.minimal_condition(k).value)
}

fn audit(out: &mut Outcome, name: &str) -> Result<()> {
    let entry = lookup(name)?;
    for p in entry.audit() {
        out.require(false, || format!("{name}: {p}"));
    }
    out.symbolic += 1;
    Ok(())
}

fn semigroup_and_biact_corpus(
    ctx: &Context,
    f: impl Fn(&dyn Fn() -> String, &Analysis<'_, dyn crate::Actions>) -> Outcome + Sync,
) -> Result<Outcome> {
    let mut out = over(ctx.semigroups()?, |s| {
        let an = Analysis::new(s as &dyn crate::Actions);
        Ok(f(&|| desc_s(s), &an))
    })?;
    out.merge(over(ctx.biacts()?, |a| {
        let an = Analysis::new(a as &dyn crate::Actions);
        Ok(f(&|| desc_b(a), &an))
    })?);
    Ok(out)
}

fn for_subsemigroups(
    ctx: &Context,
    f: impl Fn(&FiniteSemigroup, &GreenStructure, &[usize]) -> Result<Outcome> + Sync,
) -> Result<Outcome> {
    for_role(ctx, Role::Subsemigroup, f)
}

fn for_role(
    ctx: &Context,
    role: Role,
    f: impl Fn(&FiniteSemigroup, &GreenStructure, &[usize]) -> Result<Outcome> + Sync,
) -> Result<Outcome> {
    over(ctx.semigroups()?, |s| {
        let gs = GreenStructure::of(s);
        let mut o = Outcome::default();
        for sub in s.subsets_with_role(role)? {
            o.merge(f(s, &gs, &sub)?);
        }
        Ok(o)
    })
}

/// Every non-empty subact of every corpus biact. The empty subact is
/// counted but not passed to `f`.
fn for_subacts(
    ctx: &Context,
    f: impl Fn(&FiniteBiact, &GreenStructure, &Subact) -> Result<Outcome> + Sync,
) -> Result<Outcome> {
    let mut out = over(ctx.biacts()?, |a| {
        let g = GreenStructure::of(a);
        let mut o = Outcome::default();
        for sub in a.subacts()? {
            if sub.members.is_empty() {
                continue;
            }
            o.merge(f(a, &g, &sub)?);
        }
        Ok(o)
    })?;
    out.note(format!(
        "the empty subact of each of the {} biacts is skipped: restriction to it is not a biact",
        ctx.biacts()?.len()
    ));
    Ok(out)
}

fn complement(s: &FiniteSemigroup, sub: &[usize]) -> Vec<usize> {
    s.elements().filter(|x| !sub.contains(x)).collect()
}

// ---------------------------------------------------------------- claims 3.x

fn l3_3(ctx: &Context) -> Result<Outcome> {
    let mut out = semigroup_and_biact_corpus(ctx, |what, an| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let v = an.green.invariant_violations();
        o.require(v.is_empty(), || format!("{}: {}", what(), v.join("; ")));
        for k in Preorder::ALL {
            let (a, b) = (an.minimal_condition(k).value, an.green.peel_minimal(k));
            o.require(a && b, || {
                format!("{}: {k:?} minimal condition {a}, peeling {b}", what())
            });
        }
        o
    })?;
    let q = IntegersOverNaturalsQuotient;
    let depth = ctx.config.depth;
    for k in 0..=depth {
        let d = q.longest_descent(&Elem::Int(-(k as i64)))?;
        out.require(d <= k + 1, || {
            format!("quotient descent from -{k} has {d} steps")
        });
    }
    out.symbolic += depth as u64 + 1;
    let biact = IntegersOverNaturals;
    for k in Preorder::ALL {
        let c = verify_chain(&biact, k, (-(depth as i64)..=0).map(Elem::Int), depth)?;
        out.require(c.ok, || {
            format!("integer chain fails at step {:?} for {k:?}", c.failed_at)
        });
    }
    out.vacuous = true;
    out.note("finite posets satisfy every minimal condition; the symbolic part checks both sides of the equivalence on the integers");
    Ok(out)
}

fn p3_4(ctx: &Context) -> Result<Outcome> {
    let mut out = over(ctx.biacts()?, |a| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let ga = GreenStructure::of(a);
        let gs = GreenStructure::of(a.left());
        for s in 0..a.left().order() {
            for s2 in 0..a.left().order() {
                if !gs.le(Preorder::L, s, s2) {
                    continue;
                }
                for x in 0..a.size() {
                    let ok = ga.le(Preorder::L, a.act_left(s, x), a.act_left(s2, x));
                    o.require(ok, || {
                        format!(
                            "{}: s={s} <=_L s'={s2} but s·{x} is not below s'·{x}",
                            desc_b(a)
                        )
                    });
                }
            }
        }
        let an = Analysis::new(a);
        o.require(an.minimal_condition(Preorder::L).value, || {
            format!("{}: M_L fails", desc_b(a))
        });
        Ok(o)
    })?;
    let s = Bicyclic.sheet().get(Property::ML);
    let a = BicyclicRegular.sheet().get(Property::ML);
    out.require(s == Some(false) && a == Some(false), || {
        format!("bicyclic M_L {s:?}, regular biact M_L {a:?}")
    });
    audit(&mut out, "bicyclic-regular")?;
    out.vacuous = true;
    out.note("key step: s <=_L s' in S implies s·a <=_L s'·a in A");
    Ok(out)
}

fn p3_5(ctx: &Context) -> Result<Outcome> {
    let mut out = over(ctx.biacts()?, |a| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let an = Analysis::new(a);
        for side in [Side::Left, Side::Right] {
            let forms = an.stable_forms(side);
            let value = an.stable_side(side).value;
            o.require(forms.iter().all(|&f| f == value), || {
                format!("{}: {side:?} forms {forms:?}, predicate {value}", desc_b(a))
            });
        }
        Ok(o)
    })?;
    let b = Bicyclic;
    let (x, y) = (Elem::Pair(0, 1), Elem::Pair(0, 0));
    let below = b.le(Preorder::L, &x, &y)?;
    let j = b.related(Preorder::J, &x, &y)?;
    let l = b.related(Preorder::L, &x, &y)?;
    out.require(below && j && !l, || {
        "bicyclic: (0,1) <=_L (0,0), J-related and not L-related should all hold".into()
    });
    let c = verify_chain(
        &b,
        Preorder::L,
        (0..).map(|n| Elem::Pair(0, n)),
        ctx.config.depth,
    )?;
    out.require(c.ok, || {
        "bicyclic: L-classes inside the J-class have no minimal element".into()
    });
    out.symbolic += 2;
    out.witness("bicyclic: forms (1)-(5) fail at (0,1) <=_L (0,0); forms (6)-(8) fail along (0,n)");
    out.vacuous = true;
    out.note("every finite biact is stable, so all eight forms hold on every finite instance");
    Ok(out)
}

fn p3_6(ctx: &Context) -> Result<Outcome> {
    let mut out = over(ctx.biacts()?, |a| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let an = Analysis::new(a);
        let (c, s) = (an.stable_char().value, an.stable().value);
        o.require(c == s, || {
            format!("{}: characterisation {c}, stable {s}", desc_b(a))
        });
        Ok(o)
    })?;
    let b = Bicyclic;
    let (x, y) = (Elem::Pair(0, 1), Elem::Pair(0, 0));
    let meets = b.le(Preorder::L, &x, &y)? && b.related(Preorder::R, &x, &y)?;
    let h = b.related(Preorder::L, &x, &y)? && b.related(Preorder::R, &x, &y)?;
    out.require(meets && !h, || {
        "bicyclic: (0,1) should be <=_L and R-related to (0,0) without H".into()
    });
    out.symbolic += 1;
    out.vacuous = true;
    Ok(out)
}

fn l3_7(ctx: &Context) -> Result<Outcome> {
    let mut out = semigroup_and_biact_corpus(ctx, |what, an| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        for side in [Side::Left, Side::Right] {
            let mk = an.minimal_condition(side.preorder()).value;
            let per = an.periodic(side).value;
            let st = an.stable_side(side).value;
            o.require((!mk || per) && (!per || st), || {
                format!("{}: {side:?} M {mk}, periodic {per}, stable {st}", what())
            });
        }
        o
    })?;
    let b = Bicyclic;
    let s = Elem::Pair(0, 1);
    let powers: Vec<Elem> = std::iter::successors(Some(Elem::Pair(0, 0)), |x| Some(b.mul(&s, x)))
        .take(ctx.config.depth + 1)
        .collect();
    let c = verify_chain(&b, Preorder::L, powers, ctx.config.depth)?;
    out.require(c.ok, || {
        "bicyclic: the powers of (0,1) do not descend strictly".into()
    });
    out.symbolic += 1;
    out.vacuous = true;
    out.note("symbolic: in the bicyclic monoid the powers of (0,1) never become L-related, matching the failure of M_L");
    Ok(out)
}

fn c3_8(ctx: &Context) -> Result<Outcome> {
    over(ctx.biacts()?, |a| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let an = Analysis::new(a);
        o.require(an.stable().value, || format!("{}: not stable", desc_b(a)));
        for k in Preorder::ALL {
            o.require(an.minimal_condition(k).value, || {
                format!("{}: M_{k:?} fails", desc_b(a))
            });
        }
        Ok(o)
    })
}

fn c3_9(ctx: &Context) -> Result<Outcome> {
    let mut out = over(ctx.biacts()?, |a| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let lp = props::l_periodic(a.left()).value;
        let rp = props::r_periodic(a.right()).value;
        let an = Analysis::new(a);
        o.require(!lp || an.left_stable().value, || {
            format!("{}: L-periodic S, unstable biact", desc_b(a))
        });
        o.require(!(lp && rp) || an.stable().value, || {
            format!("{}: periodic S and T, unstable biact", desc_b(a))
        });
        Ok(o)
    })?;
    let f = FreeSemigroup::new(2);
    let a = Elem::word("a");
    let periodic = (1..=ctx.config.depth).any(|n| {
        let x = Elem::Word(vec![0; n + 1]);
        let y = Elem::Word(vec![0; n + 2]);
        f.related(Preorder::L, &x, &y).unwrap_or(true)
    });
    out.require(!periodic && a == Elem::Word(vec![0]), || {
        "free semigroup: a^n·a became L-related to a^(n+1)·a".into()
    });
    out.symbolic += 1;
    out.vacuous = true;
    out.note("symbolic: the free semigroup acting on the unstable pullback biact is not L-periodic, as the contrapositive requires");
    Ok(out)
}

fn l3_10(ctx: &Context) -> Result<Outcome> {
    let mut out = semigroup_and_biact_corpus(ctx, |what, an| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        if an.minimal_condition(Preorder::J).value {
            let (m, s) = (
                an.minimal_condition(Preorder::L).value,
                an.left_stable().value,
            );
            o.require(m == s, || format!("{}: M_L {m}, left stable {s}", what()));
        }
        o
    })?;
    let sheet = Bicyclic.sheet();
    let (mj, ml, ls) = (
        sheet.get(Property::MJ),
        sheet.get(Property::ML),
        sheet.get(Property::LeftStable),
    );
    out.require(mj == Some(true) && ml == ls, || {
        format!("bicyclic sheet: M_J {mj:?}, M_L {ml:?}, left stable {ls:?}")
    });
    audit(&mut out, "bicyclic")?;
    out.vacuous = true;
    Ok(out)
}

/// The three forms compared on every catalog sheet that records them all.
fn sheet_forms(out: &mut Outcome, semigroups_only: bool) -> Result<()> {
    for name in CATALOG_NAMES {
        for (part, obj) in lookup(name)?.parts {
            let sh = obj.sheet();
            let g = |p| sh.get(p);
            let (Some(ml), Some(mr), Some(mj), Some(ls), Some(rs)) = (
                g(Property::ML),
                g(Property::MR),
                g(Property::MJ),
                g(Property::LeftStable),
                g(Property::RightStable),
            ) else {
                continue;
            };
            out.symbolic += 1;
            let one = ml && mr;
            let three = ls && rs && mj;
            out.require(one == three, || {
                format!("{name}/{part}: M_L and M_R is {one}, stable with M_J is {three}")
            });
            if let (Some(lp), Some(rp)) = (g(Property::LPeriodic), g(Property::RPeriodic)) {
                let two = mj && lp && rp;
                out.require(one == two, || {
                    format!("{name}/{part}: M_L and M_R is {one}, M_J with periodicity is {two}")
                });
            }
            if semigroups_only {
                if let Some(gb) = g(Property::GroupBound) {
                    if let (Some(lp), Some(rp)) = (g(Property::LPeriodic), g(Property::RPeriodic)) {
                        out.require(gb == (lp && rp), || {
                            format!("{name}/{part}: group-bound {gb}, periodic {lp}/{rp}")
                        });
                    }
                    if one {
                        out.require(gb && mj, || {
                            format!("{name}/{part}: M_L and M_R without group-bound M_J")
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn p3_11(ctx: &Context) -> Result<Outcome> {
    let mut out = semigroup_and_biact_corpus(ctx, |what, an| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let m = |k| an.minimal_condition(k).value;
        let one = m(Preorder::L) && m(Preorder::R);
        let two = m(Preorder::J) && an.l_periodic().value && an.r_periodic().value;
        let three = an.stable().value && m(Preorder::J);
        o.require(one == two && two == three, || {
            format!("{}: forms {one} {two} {three}", what())
        });
        o
    })?;
    sheet_forms(&mut out, false)?;
    out.vacuous = true;
    Ok(out)
}

fn c3_12(ctx: &Context) -> Result<Outcome> {
    let mut out = over(ctx.biacts()?, |a| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let hyp = props::minimal_condition(a.left(), Preorder::L).value
            && props::minimal_condition(a.right(), Preorder::R).value;
        let an = Analysis::new(a);
        let concl = an.minimal_condition(Preorder::L).value
            && an.minimal_condition(Preorder::R).value
            && an.stable().value
            && an.minimal_condition(Preorder::J).value;
        o.require(!hyp || concl, || {
            format!("{}: hypothesis holds, conclusion fails", desc_b(a))
        });
        let gt = GreenStructure::of(a.right());
        let ga = &an.green;
        for t in 0..a.right().order() {
            for t2 in 0..a.right().order() {
                if gt.le(Preorder::R, t, t2) {
                    for x in 0..a.size() {
                        let ok = ga.le(Preorder::R, a.act_right(x, t), a.act_right(x, t2));
                        o.require(ok, || {
                            format!(
                                "{}: t={t} <=_R t'={t2} but {x}·t is not below {x}·t'",
                                desc_b(a)
                            )
                        });
                    }
                }
            }
        }
        Ok(o)
    })?;
    out.vacuous = true;
    out.note("key step on the right: t <=_R t' in T implies a·t <=_R a·t' in A");
    Ok(out)
}

fn c3_13(ctx: &Context) -> Result<Outcome> {
    let mut out = over(ctx.semigroups()?, |s| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let an = Analysis::new(s);
        let gb = props::group_bound(s).value;
        let per = an.l_periodic().value && an.r_periodic().value;
        o.require(gb == per, || {
            format!("{}: group-bound {gb}, periodic {per}", desc_s(s))
        });
        let m = |k| an.minimal_condition(k).value;
        let one = m(Preorder::L) && m(Preorder::R);
        let two = gb && m(Preorder::J);
        let three = an.stable().value && m(Preorder::J);
        o.require(one == two && two == three, || {
            format!("{}: forms {one} {two} {three}", desc_s(s))
        });
        Ok(o)
    })?;
    sheet_forms(&mut out, true)?;
    out.vacuous = true;
    Ok(out)
}

fn r3_14_2(ctx: &Context) -> Result<Outcome> {
    let mut out = Outcome::default();
    let b = Bicyclic;
    let depth = ctx.config.depth;
    for k in [Preorder::L, Preorder::R] {
        let c = verify_chain(&b, k, crate::symbolic::chain_iter(&b, k), depth)?;
        out.require(c.ok, || {
            format!("bicyclic {k:?}-chain stops at step {:?}", c.failed_at)
        });
        out.witness(format!(
            "{k:?}-chain descends strictly for {} steps",
            c.steps
        ));
    }
    let mut r = rng(ctx);
    if let Some((x, y)) = sampled_j_total(&b, &mut r, ctx.config.samples)? {
        out.require(false, || format!("bicyclic: {x} and {y} are not J-related"));
    }
    let one = Elem::Pair(0, 0);
    let (a, bb) = (Elem::Pair(0, 1), Elem::Pair(1, 0));
    let left = b.mul(&a, &one);
    let right = b.mul(&one, &bb);
    let lw = b.related(Preorder::J, &left, &one)? && !b.related(Preorder::L, &left, &one)?;
    let rw = b.related(Preorder::J, &right, &one)? && !b.related(Preorder::R, &right, &one)?;
    out.require(lw, || {
        "left stability witness (0,1)·(0,0) does not replay".into()
    });
    out.require(rw, || {
        "right stability witness (0,0)·(1,0) does not replay".into()
    });
    out.witness("(0,1)·(0,0) J (0,0) but not L; (0,0)·(1,0) J (0,0) but not R");
    let ag = bicyclic_agreement(6)?;
    for m in ag.mismatches.iter() {
        out.require(false, || format!("rewriting oracle: {m}"));
    }
    out.note(format!(
        "deciders agree with ab=1 rewriting on {} word pairs of length <= 6",
        ag.checked
    ));
    audit(&mut out, "bicyclic")?;
    out.symbolic += 4 + ctx.config.samples as u64;
    Ok(out)
}

fn r3_14_3(ctx: &Context) -> Result<Outcome> {
    let sgs = semigroups_up_to(ctx.config.max_order.clamp(1, 3))?;
    let pairs: Vec<(&FiniteSemigroup, &FiniteSemigroup)> = sgs
        .iter()
        .flat_map(|s| sgs.iter().map(move |t| (s, t)))
        .collect();
    over(&pairs, |(s, t)| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let p = FiniteBiact::product(s, t);
        let g = GreenStructure::of(&p);
        let (gs, gt) = (GreenStructure::of(*s), GreenStructure::of(*t));
        let nt = t.order();
        for x in 0..p.size() {
            for y in 0..p.size() {
                let (a, b, c, d) = (x / nt, x % nt, y / nt, y % nt);
                let want = gs.le(Preorder::L, a, c) && gt.le(Preorder::R, b, d);
                let got = g.le(Preorder::J, x, y);
                o.require(got == want, || {
                    format!(
                        "{} x {}: ({a},{b}) vs ({c},{d}) gives {got}",
                        desc_s(s),
                        desc_s(t)
                    )
                });
            }
        }
        Ok(o)
    })
}

// ---------------------------------------------------------------- claims 4.x

/// `x <=_K y` implies `[x] <=_K [y]` for every pair and every K.
fn monotone(
    out: &mut Outcome,
    g: &GreenStructure,
    gq: &GreenStructure,
    map: &[usize],
    what: &dyn Fn() -> String,
) {
    for x in 0..map.len() {
        for y in 0..map.len() {
            for k in Preorder::ALL {
                if g.le(k, x, y) {
                    out.require(gq.le(k, map[x], map[y]), || {
                        format!("{}: {x} <=_{k:?} {y} lost in the quotient", what())
                    });
                }
            }
        }
    }
}

fn p4_1(ctx: &Context) -> Result<Outcome> {
    let mut out = over(ctx.biacts()?, |a| {
        let mut o = Outcome::default();
        let g = GreenStructure::of(a);
        for x in 0..a.size() {
            for y in x + 1..a.size() {
                o.instances += 1;
                let rho = congruence_closure(a, &[(x, y)])?;
                let (q, map) = quotient_biact(a, &rho)?;
                let gq = GreenStructure::of(&q);
                monotone(&mut o, &g, &gq, &map, &|| {
                    format!("{} mod ({x},{y})", desc_b(a))
                });
                let an = Analysis::with_green(&q, gq);
                o.require(all_mk(&an), || {
                    format!(
                        "{} mod ({x},{y}): quotient fails a minimal condition",
                        desc_b(a)
                    )
                });
            }
        }
        Ok(o)
    })?;
    out.vacuous = true;
    out.note("key step: the quotient map is monotone for every K");
    Ok(out)
}

fn semigroup_pair_quotients(
    ctx: &Context,
    f: impl Fn(&FiniteSemigroup, (usize, usize)) -> Result<Outcome> + Sync,
) -> Result<Outcome> {
    over(ctx.semigroups()?, |s| {
        let mut o = Outcome::default();
        for x in 0..s.order() {
            for y in x + 1..s.order() {
                o.merge(f(s, (x, y))?);
            }
        }
        Ok(o)
    })
}

fn l4_2(ctx: &Context) -> Result<Outcome> {
    semigroup_pair_quotients(ctx, |s, (x, y)| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let rho = congruence_closure(s, &[(x, y)])?;
        let (q, map) = quotient_semigroup(s, &rho)?;
        let (qb, mapb) = quotient_biact(&FiniteBiact::regular(s), &rho)?;
        let (g, gb) = (GreenStructure::of(&q), GreenStructure::of(&qb));
        let ids: Vec<(usize, usize)> = (0..s.order()).map(|a| (map[a], mapb[a])).collect();
        same_preorders(&mut o, &g, &gb, &ids, &|| {
            format!("{} mod ({x},{y})", desc_s(s))
        });
        Ok(o)
    })
}

fn c4_3(ctx: &Context) -> Result<Outcome> {
    let mut out = semigroup_pair_quotients(ctx, |s, (x, y)| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let rho = congruence_closure(s, &[(x, y)])?;
        let (q, map) = quotient_semigroup(s, &rho)?;
        let what = || format!("{} mod ({x},{y})", desc_s(s));
        if let Err(e) = FiniteSemigroup::is_homomorphism(s, &q, &map) {
            o.require(false, || {
                format!("{}: quotient map is not a homomorphism: {e}", what())
            });
        }
        let (g, gq) = (GreenStructure::of(s), GreenStructure::of(&q));
        monotone(&mut o, &g, &gq, &map, &what);
        let an = Analysis::with_green(&q, gq);
        o.require(all_mk(&an), || {
            format!("{}: quotient fails a minimal condition", what())
        });
        Ok(o)
    })?;
    out.vacuous = true;
    Ok(out)
}

/// Restriction to `sub` agrees with `sub` in its own right, and points
/// outside compare in `A` exactly as their images in `A/B`.
fn subact_key_steps(
    o: &mut Outcome,
    a: &FiniteBiact,
    g: &GreenStructure,
    sub: &Subact,
    sides: &[Preorder],
    only_j: bool,
) -> Result<()> {
    let b = a.restrict(sub)?;
    let gb = GreenStructure::of(&b);
    let (q, proj) = a.rees_quotient(sub)?;
    let gq = GreenStructure::of(&q);
    let what = || format!("{} over subact {:?}", desc_b(a), sub.members);
    let inside = |x: usize| sub.members.binary_search(&x).ok();
    for x in 0..a.size() {
        for y in 0..a.size() {
            if only_j && !g.related(crate::green::Relation::J, x, y) {
                continue;
            }
            for &k in sides {
                let want = g.le(k, x, y);
                match (inside(x), inside(y)) {
                    (Some(i), Some(j)) => {
                        o.require(gb.le(k, i, j) == want, || {
                            format!("{}: {k:?} on ({x},{y}) differs inside", what())
                        });
                    }
                    (None, None) => {
                        o.require(gq.le(k, proj[x], proj[y]) == want, || {
                            format!("{}: {k:?} on ({x},{y}) differs in the quotient", what())
                        });
                    }
                    _ if only_j => o.require(false, || {
                        format!("{}: J-related pair ({x},{y}) straddles the subact", what())
                    }),
                    _ => {}
                }
            }
        }
    }
    Ok(())
}

fn p4_4(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subacts(ctx, |a, g, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        subact_key_steps(&mut o, a, g, sub, &Preorder::ALL, false)?;
        let an = Analysis::new(a);
        let b = a.restrict(sub)?;
        let (q, _) = a.rees_quotient(sub)?;
        let lhs = all_mk(&an);
        let rhs = all_mk(&Analysis::new(&b)) && all_mk(&Analysis::new(&q));
        o.require(lhs == rhs, || {
            format!("{}: M_K {lhs} vs parts {rhs}", desc_b(a))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    out.note(
        "key steps: preorders of B are restrictions of those of A; outside B they agree with A/B",
    );
    Ok(out)
}

fn p4_5(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subsemigroups(ctx, |s, _gs, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let rel = FiniteBiact::relative(s, sub)?;
        let (t, emb) = s.subsemigroup(sub)?;
        let (gr, gt) = (GreenStructure::of(&rel), GreenStructure::of(&t));
        let ids: Vec<(usize, usize)> = emb.iter().enumerate().map(|(i, &e)| (i, e)).collect();
        same_preorders(&mut o, &gt, &gr, &ids, &|| {
            format!("{} relative to {sub:?}", desc_s(s))
        });
        o.require(rel.is_subact(sub), || {
            format!(
                "{}: {sub:?} is not a subact of the relative biact",
                desc_s(s)
            )
        });
        let (q, _) = FiniteBiact::relative_rees(s, sub)?;
        let lhs = all_mk(&Analysis::with_green(&rel, gr));
        let rhs = all_mk(&Analysis::with_green(&t, gt)) && all_mk(&Analysis::new(&q));
        o.require(lhs == rhs, || {
            format!("{} relative to {sub:?}: {lhs} vs {rhs}", desc_s(s))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    out.note(
        "key step: the preorders of T coincide with those of the relative biact restricted to T",
    );
    Ok(out)
}

fn t4_6(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subsemigroups(ctx, |s, _gs, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let r = green_index(s, sub)?;
        o.require(r.classes_separated, || {
            format!(
                "{} relative to {sub:?}: a relative class meets T and its complement",
                desc_s(s)
            )
        });
        let (t, _) = s.subsemigroup(sub)?;
        let rel = FiniteBiact::relative(s, sub)?;
        let m = |x: &dyn crate::Actions| props::minimal_condition(x, Preorder::L).value;
        let (a, b, c) = (m(s), m(&t), m(&rel));
        o.require(a == b && b == c, || {
            format!("{} relative to {sub:?}: M_L {a} {b} {c}", desc_s(s))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    out.note("key step: every relative Green class lies inside T or inside its complement");
    Ok(out)
}

fn c4_7(ctx: &Context) -> Result<Outcome> {
    for_subsemigroups(ctx, |s, _gs, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let r = green_index(s, sub)?;
        let (q, _) = FiniteBiact::relative_rees(s, sub)?;
        let hq = GreenStructure::of(&q).class_count(crate::green::Relation::H);
        o.require(
            r.index == r.outside_h_classes + 1 && r.index == r.quotient_h_classes && r.index == hq,
            || {
                format!(
                    "{} relative to {sub:?}: index {}, outside {}, quotient H {} / {hq}",
                    desc_s(s),
                    r.index,
                    r.outside_h_classes,
                    r.quotient_h_classes
                )
            },
        );
        let (t, _) = s.subsemigroup(sub)?;
        let (a, b) = (
            props::minimal_condition(s, Preorder::L).value,
            props::minimal_condition(&t, Preorder::L).value,
        );
        o.require(a == b, || {
            format!("{} relative to {sub:?}: M_L {a} vs {b}", desc_s(s))
        });
        Ok(o)
    })
}

fn ex4_8(ctx: &Context) -> Result<Outcome> {
    let mut out = Outcome::default();
    let depth = ctx.config.depth;
    let biact = IntegersOverNaturals;
    for k in Preorder::ALL {
        let c = verify_chain(&biact, k, (-(depth as i64)..=0).map(Elem::Int), depth)?;
        out.require(c.ok, || {
            format!(
                "chain -{depth}..0 fails at step {:?} for {k:?}",
                c.failed_at
            )
        });
    }
    out.witness(format!("-{depth} >_K ... >_K 0 strictly for K = L, R, J"));
    let q = IntegersOverNaturalsQuotient;
    let mut longest = 0;
    for k in 0..=depth {
        let d = q.longest_descent(&Elem::Int(-(k as i64)))?;
        longest = longest.max(d);
        out.require(d <= k + 1, || {
            format!("descent from -{k} in the quotient has {d} steps")
        });
    }
    out.note(format!(
        "longest quotient descent from -{depth}..0 is {longest} steps"
    ));
    let mut r = rng(ctx);
    if let Some((x, y)) = sampled_j_total(&IntPlus, &mut r, ctx.config.samples)? {
        out.require(false, || format!("integers: {x} and {y} not J-related"));
    }
    let c = verify_chain(
        &NatPlus,
        Preorder::J,
        crate::symbolic::chain_iter(&NatPlus, Preorder::J),
        depth,
    )?;
    out.require(c.ok, || "naturals: J-chain does not descend".into());
    audit(&mut out, "ex4.8")?;
    out.symbolic += 3 + depth as u64 + ctx.config.samples as u64;
    Ok(out)
}

fn l4_10(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subsemigroups(ctx, |s, gs, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let (t, emb) = s.subsemigroup(sub)?;
        let gt = GreenStructure::of(&t);
        let an = Analysis::with_green(&t, gt.clone());
        for k in Preorder::ALL {
            if k_preserving_with(gs, &gt, &emb, k).value {
                o.symbolic += 0;
                o.require(an.minimal_condition(k).value, || {
                    format!("{} sub {sub:?}: {k:?}-preserving without M_K", desc_s(s))
                });
            }
        }
        Ok(o)
    })?;
    out.vacuous = true;
    Ok(out)
}

/// The sufficient conditions for K-preservation stated alongside the
/// lemma, checked as implications.
fn preservation_facts(
    o: &mut Outcome,
    s: &FiniteSemigroup,
    gs: &GreenStructure,
    sub: &[usize],
) -> Result<()> {
    let (t, emb) = s.subsemigroup(sub)?;
    let gt = GreenStructure::of(&t);
    let pres = |k| k_preserving_with(gs, &gt, &emb, k).value;
    let what = || format!("{} sub {sub:?}", desc_s(s));
    if regular_subsemigroup(s, sub)?.value {
        o.require(pres(Preorder::L) && pres(Preorder::R), || {
            format!("{}: regular but not L- and R-preserving", what())
        });
    }
    let comp = complement(s, sub);
    if !comp.is_empty() {
        if s.is_subset_role(&comp, Role::RightIdeal) {
            o.require(pres(Preorder::L), || {
                format!("{}: complement a right ideal, not L-preserving", what())
            });
        }
        if s.is_subset_role(&comp, Role::LeftIdeal) {
            o.require(pres(Preorder::R), || {
                format!("{}: complement a left ideal, not R-preserving", what())
            });
        }
        if s.is_subset_role(&comp, Role::Ideal) {
            o.require(Preorder::ALL.iter().all(|&k| pres(k)), || {
                format!("{}: complement an ideal, not preserving", what())
            });
        }
    }
    Ok(())
}

fn c4_11(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subsemigroups(ctx, |s, gs, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        preservation_facts(&mut o, s, gs, sub)?;
        let (t, _) = s.subsemigroup(sub)?;
        o.require(all_mk(&Analysis::new(&t)), || {
            format!("{} sub {sub:?}: a minimal condition fails", desc_s(s))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    out.note("key steps: regular subsemigroups are L- and R-preserving; a right (left, two-sided) ideal complement makes T L- (R-, J-) preserving");
    Ok(out)
}

fn t4_13(ctx: &Context) -> Result<Outcome> {
    let mut out = for_role(ctx, Role::BiIdeal, |s, _gs, b| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        o.require(s.is_subset_role(b, Role::Subsemigroup), || {
            format!("{}: bi-ideal {b:?} not closed", desc_s(s))
        });
        let (t, _) = s.subsemigroup(b)?;
        o.require(props::minimal_condition(&t, Preorder::L).value, || {
            format!("{}: bi-ideal {b:?} fails M_L", desc_s(s))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    Ok(out)
}

fn c4_14(ctx: &Context) -> Result<Outcome> {
    let mut out = for_role(ctx, Role::BiIdeal, |s, _gs, b| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let (t, _) = s.subsemigroup(b)?;
        let hyp = props::stable(s).value && props::minimal_condition(s, Preorder::J).value;
        o.require(
            !hyp || props::minimal_condition(&t, Preorder::J).value,
            || format!("{}: bi-ideal {b:?} fails M_J", desc_s(s)),
        );
        Ok(o)
    })?;
    let x = ideal_without_mj();
    let w = (Elem::left(Elem::Pair(0, 1)), Elem::point(Elem::Pair(0, 0)));
    let image = x.u.mul(&w.0, &w.1);
    let unstable =
        x.u.related(Preorder::J, &image, &w.1)? && !x.u.related(Preorder::L, &image, &w.1)?;
    out.require(unstable, || {
        "the (B,B;B) extension should not be left stable".into()
    });
    out.witness(format!(
        "in U(B,B;B): {}·{} = {image}, J-related to {} but not L-related",
        w.0, w.1, w.1
    ));
    out.symbolic += 1;
    out.vacuous = true;
    out.note("symbolic: the ideal without M_J sits in a semigroup that is not stable, so the hypothesis is needed");
    Ok(out)
}

fn ideal_parts(
    s: &FiniteSemigroup,
    i: &[usize],
) -> Result<(
    FiniteBiact,
    FiniteSemigroup,
    Vec<usize>,
    FiniteBiact,
    Vec<usize>,
)> {
    let ib = FiniteBiact::ideal(s, i)?;
    let (q, proj) = s.rees_quotient(i)?;
    let (qb, projb) = FiniteBiact::regular(s).rees_quotient(&Subact {
        members: i.to_vec(),
    })?;
    Ok((ib, q, proj, qb, projb))
}

fn p4_15(ctx: &Context) -> Result<Outcome> {
    let mut out = for_role(ctx, Role::Ideal, |s, gs, i| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let (ib, q, proj, qb, projb) = ideal_parts(s, i)?;
        let gi = GreenStructure::of(&ib);
        let ids: Vec<(usize, usize)> = i.iter().enumerate().map(|(n, &x)| (n, x)).collect();
        same_preorders(&mut o, &gi, gs, &ids, &|| {
            format!("{} ideal {i:?}", desc_s(s))
        });
        let (gq, gqb) = (GreenStructure::of(&q), GreenStructure::of(&qb));
        let ids: Vec<(usize, usize)> = (0..s.order()).map(|x| (proj[x], projb[x])).collect();
        same_preorders(&mut o, &gq, &gqb, &ids, &|| {
            format!("{} mod ideal {i:?}", desc_s(s))
        });
        let lhs = all_mk(&Analysis::new(s));
        let rhs = all_mk(&Analysis::with_green(&ib, gi)) && all_mk(&Analysis::with_green(&q, gq));
        o.require(lhs == rhs, || {
            format!("{} ideal {i:?}: {lhs} vs {rhs}", desc_s(s))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    Ok(out)
}

fn t4_16(ctx: &Context) -> Result<Outcome> {
    let mut out = for_role(ctx, Role::Ideal, |s, _gs, i| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        o.require(s.is_subset_role(i, Role::BiIdeal), || {
            format!("{}: ideal {i:?} is not a bi-ideal", desc_s(s))
        });
        let (t, _) = s.subsemigroup(i)?;
        let (q, _) = s.rees_quotient(i)?;
        let m = |x: &FiniteSemigroup| props::minimal_condition(x, Preorder::L).value;
        let (a, b, c) = (m(s), m(&t), m(&q));
        o.require(a == (b && c), || {
            format!("{} ideal {i:?}: M_L {a} vs {b} and {c}", desc_s(s))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    out.note("both directions evaluated on every ideal; the forward direction rests on ideals being bi-ideals");
    Ok(out)
}

fn small_pairs(ctx: &Context) -> Result<Vec<(FiniteSemigroup, FiniteSemigroup, FiniteBiact)>> {
    let sgs = semigroups_up_to(ctx.config.max_order.min(2))?;
    let mut out = Vec::new();
    for s in &sgs {
        for t in &sgs {
            for m in 1..=2 {
                for a in all_biacts_vec(s, t, m)? {
                    out.push((s.clone(), t.clone(), a));
                }
            }
        }
    }
    Ok(out)
}

fn con4_17(ctx: &Context) -> Result<Outcome> {
    let cases = small_pairs(ctx)?;
    over(&cases, |(s, t, a)| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let what = || desc_b(a);
        let (u, layout) = construct_usta(s, t, a)?;
        o.require(u.triple_scan().is_ok(), || {
            format!("{}: not associative", what())
        });
        let (iset, nset) = (layout.ideal_i(), layout.ideal_n());
        o.require(u.is_subset_role(&iset, Role::Ideal), || {
            format!("{}: I is not an ideal", what())
        });
        o.require(u.is_subset_role(&nset, Role::Ideal), || {
            format!("{}: N is not an ideal", what())
        });
        let (iu, iemb) = u.subsemigroup(&iset)?;
        let local_n: Vec<usize> = nset
            .iter()
            .map(|x| iemb.binary_search(x).expect("N inside I"))
            .collect();
        o.require(iu.is_subset_role(&local_n, Role::Ideal), || {
            format!("{}: N is not an ideal of I", what())
        });
        o.require(u.subsemigroup(&nset)?.0.is_null(), || {
            format!("{}: N is not null", what())
        });

        let (gu, gi, ga) = (
            GreenStructure::of(&u),
            GreenStructure::of(&iu),
            GreenStructure::of(a),
        );
        let x = |p: usize| layout.x.start + p;
        let xi = |p: usize| iemb.binary_search(&x(p)).expect("point inside I");
        for p in 0..a.size() {
            for q in 0..a.size() {
                let (got, want) = (gu.le(Preorder::J, x(p), x(q)), ga.le(Preorder::J, p, q));
                o.require(got == want, || {
                    format!(
                        "{}: x_{p} <=_J x_{q} in U is {got}, a <=_J b is {want}",
                        what()
                    )
                });
                let (got, want) = (gi.le(Preorder::J, xi(p), xi(q)), ga.le(Preorder::L, p, q));
                o.require(got == want, || {
                    format!(
                        "{}: x_{p} <=_J x_{q} in I is {got}, a <=_L b is {want}",
                        what()
                    )
                });
            }
        }

        let sym = Usta::new(
            Arc::new(FiniteView::new(s)),
            Arc::new(FiniteView::new(t)),
            Arc::new(FiniteBiactView::new(a)),
        );
        for v in u.elements() {
            for w in u.elements() {
                for k in Preorder::ALL {
                    let got = sym.le(k, &layout.elem(v), &layout.elem(w))?;
                    o.require(got == gu.le(k, v, w), || {
                        format!("{}: U decider {k:?} on ({v},{w})", what())
                    });
                }
            }
        }
        let sym_i = sym.ideal_i();
        for (i, &v) in iemb.iter().enumerate() {
            for (j, &w) in iemb.iter().enumerate() {
                for k in Preorder::ALL {
                    let got = sym_i.le(k, &layout.elem(v), &layout.elem(w))?;
                    o.require(got == gi.le(k, i, j), || {
                        format!("{}: I decider {k:?} on ({v},{w})", what())
                    });
                }
            }
        }
        Ok(o)
    })
}

fn c4_19(ctx: &Context) -> Result<Outcome> {
    let mut out = Outcome::default();
    let x = ideal_without_mj();
    let depth = ctx.config.depth;
    let c = verify_chain(x.i.as_ref(), Preorder::J, x.i_chain(), depth)?;
    out.require(c.ok, || format!("I-chain stops at step {:?}", c.failed_at));
    out.witness(format!(
        "x_(0,n) for n = 0..{depth} descends strictly in <=_J of I"
    ));
    let mut r = rng(ctx);
    for _ in 0..ctx.config.samples {
        let (p, q) = (x.u.sample_point(&mut r), x.u.sample_point(&mut r));
        out.require(x.u.related(Preorder::J, &p, &q)?, || {
            format!("U: points {p} and {q} not J-related")
        });
    }
    let parts = x.u_parts(&mut r, ctx.config.samples)?;
    out.require(parts.classes() == Some(4), || {
        format!("U: J-parts {parts:?}")
    });
    if let Some((p, q)) = x.n_null_violation(&mut r, ctx.config.samples) {
        out.require(false, || format!("N: {p}·{q} is not 0"));
    }
    let qp = x.quotient_parts(&mut r, ctx.config.samples)?;
    out.require(qp.classes() == Some(2), || format!("I/N: J-parts {qp:?}"));
    audit(&mut out, "cor4.19")?;
    out.symbolic += 4 + 3 * ctx.config.samples as u64;
    Ok(out)
}

// ---------------------------------------------------------------- claims 5.x

fn s5_0(_ctx: &Context) -> Result<Outcome> {
    let mut out = Outcome::default();
    let ag = free_j_agreement(2, 6)?;
    for m in &ag.mismatches {
        out.require(false, || format!("free semigroup: {m}"));
    }
    out.note(format!(
        "free J-triviality exact on {} pairs of words of length <= 6",
        ag.checked
    ));
    let b = Bicyclic;
    let ws = words(2, 1, 4);
    for u in &ws {
        for v in &ws {
            let (eu, ev) = (Elem::Word(u.clone()), Elem::Word(v.clone()));
            let uv = Elem::Word([u.as_slice(), v.as_slice()].concat());
            out.require(
                bicyclic_image(&uv) == b.mul(&bicyclic_image(&eu), &bicyclic_image(&ev)),
                || format!("the map to the bicyclic monoid is not multiplicative on {eu}, {ev}"),
            );
        }
    }
    let (x, one) = (Elem::Pair(0, 1), Elem::Pair(0, 0));
    let witness = b.related(Preorder::J, &x, &one)? && !b.related(Preorder::L, &x, &one)?;
    out.require(witness, || {
        "bicyclic quotient of the free semigroup should not be left stable".into()
    });
    out.witness(
        "free{a,b} is J-trivial, hence stable; its quotient by ab=1 has (0,1) J (0,0) without L",
    );
    audit(&mut out, "free2")?;
    audit(&mut out, "bicyclic")?;
    out.symbolic += ag.checked as u64 + (ws.len() * ws.len()) as u64;
    Ok(out)
}

fn p5_1(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subacts(ctx, |a, g, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        subact_key_steps(&mut o, a, g, sub, &[Preorder::L, Preorder::R], true)?;
        let b = a.restrict(sub)?;
        let (q, _) = a.rees_quotient(sub)?;
        for side in [Side::Left, Side::Right] {
            let lhs = Analysis::new(a).stable_side(side).value;
            let rhs = Analysis::new(&b).stable_side(side).value
                && Analysis::new(&q).stable_side(side).value;
            o.require(lhs == rhs, || {
                format!(
                    "{} subact {:?}: {side:?} stable {lhs} vs {rhs}",
                    desc_b(a),
                    sub.members
                )
            });
        }
        Ok(o)
    })?;
    out.vacuous = true;
    out.note("key step, per side: J-related pairs lie both in B or both outside; inside they compare as in B, outside as in A/B");
    Ok(out)
}

fn p5_2(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subsemigroups(ctx, |s, _gs, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let rel = FiniteBiact::relative(s, sub)?;
        o.require(rel.is_subact(sub), || {
            format!("{}: {sub:?} not a subact of the relative biact", desc_s(s))
        });
        let (t, _) = s.subsemigroup(sub)?;
        let (q, _) = FiniteBiact::relative_rees(s, sub)?;
        let lhs = props::stable(&rel).value;
        let rhs = props::stable(&t).value && props::stable(&q).value;
        o.require(lhs == rhs, || {
            format!("{} sub {sub:?}: {lhs} vs {rhs}", desc_s(s))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    Ok(out)
}

fn p5_3(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subsemigroups(ctx, |s, _gs, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let rel = FiniteBiact::relative(s, sub)?;
        let g = GreenStructure::of(&rel);
        let outside_l = g
            .classes(crate::green::Relation::L)
            .iter()
            .filter(|c| !sub.contains(&c[0]))
            .count();
        let r = green_index(s, sub)?;
        o.require(outside_l + 1 == r.quotient_l_classes, || {
            format!(
                "{} sub {sub:?}: {outside_l} outside L-classes, quotient has {}",
                desc_s(s),
                r.quotient_l_classes
            )
        });
        let (t, _) = s.subsemigroup(sub)?;
        if props::left_stable(s).value {
            o.require(props::left_stable(&t).value, || {
                format!("{} sub {sub:?}: T not left stable", desc_s(s))
            });
        }
        let (a, b) = (props::left_stable(&t).value, props::left_stable(&rel).value);
        o.require(a == b, || {
            format!("{} sub {sub:?}: T {a}, relative biact {b}", desc_s(s))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    out.note(
        "key step: the quotient has one more L-class than there are relative L-classes outside T",
    );
    Ok(out)
}

fn t5_4(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subsemigroups(ctx, |s, _gs, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let rel = FiniteBiact::relative(s, sub)?;
        let g = GreenStructure::of(&rel);
        let v = g.invariant_violations();
        o.require(v.is_empty(), || {
            format!("{} sub {sub:?}: {}", desc_s(s), v.join("; "))
        });
        let (t, _) = s.subsemigroup(sub)?;
        for side in [Side::Left, Side::Right] {
            let a = Analysis::new(s).stable_side(side).value;
            let b = Analysis::new(&t).stable_side(side).value;
            let c = Analysis::with_green(&rel, g.clone())
                .stable_side(side)
                .value;
            o.require(a == b && b == c, || {
                format!("{} sub {sub:?}: {side:?} stable {a} {b} {c}", desc_s(s))
            });
        }
        Ok(o)
    })?;
    out.vacuous = true;
    out.note("key step: H is contained in L and R on every relative biact, used for the pigeonhole on H-classes");
    Ok(out)
}

fn l5_5(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subsemigroups(ctx, |s, gs, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let (t, emb) = s.subsemigroup(sub)?;
        let gt = GreenStructure::of(&t);
        let lp = k_preserving_with(gs, &gt, &emb, Preorder::L).value;
        let rp = k_preserving_with(gs, &gt, &emb, Preorder::R).value;
        let an_s = Analysis::new(s);
        let an_t = Analysis::with_green(&t, gt.clone());
        if lp && an_s.left_stable().value {
            o.require(an_t.left_stable().value, || {
                format!("{} sub {sub:?}: not left stable", desc_s(s))
            });
        }
        if lp && rp && an_s.stable().value {
            o.require(an_t.stable().value, || {
                format!("{} sub {sub:?}: not stable", desc_s(s))
            });
        }
        Ok(o)
    })?;
    out.vacuous = true;
    Ok(out)
}

/// Above this order the retract search is skipped.
const RETRACT_ORDER_CAP: usize = 4;
const RETRACT_NODE_CAP: u64 = 100_000;

fn c5_6(ctx: &Context) -> Result<Outcome> {
    let mut out = for_subsemigroups(ctx, |s, gs, sub| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        preservation_facts(&mut o, s, gs, sub)?;
        if s.order() <= RETRACT_ORDER_CAP {
            match retract(s, sub, RETRACT_NODE_CAP) {
                Ok(r) if r.value => {
                    let (t, emb) = s.subsemigroup(sub)?;
                    let gt = GreenStructure::of(&t);
                    for k in [Preorder::L, Preorder::R] {
                        o.require(k_preserving_with(gs, &gt, &emb, k).value, || {
                            format!("{} retract {sub:?}: not {k:?}-preserving", desc_s(s))
                        });
                    }
                }
                Ok(_) => {}
                Err(crate::Error::SearchCapExceeded { .. }) => o.note(format!(
                    "{} sub {sub:?}: retract search inconclusive",
                    desc_s(s)
                )),
                Err(e) => return Err(e),
            }
        }
        let (t, _) = s.subsemigroup(sub)?;
        o.require(props::stable(&t).value, || {
            format!("{} sub {sub:?}: not stable", desc_s(s))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    out.note(format!("key steps include: retracts are L- and R-preserving (searched for order <= {RETRACT_ORDER_CAP})"));
    Ok(out)
}

fn t5_7(ctx: &Context) -> Result<Outcome> {
    let mut out = for_role(ctx, Role::BiIdeal, |s, _gs, b| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        for &x in b {
            for &u in b {
                let z = s.mul(s.mul(x, u), x);
                o.require(b.contains(&z), || {
                    format!(
                        "{}: bi-ideal {b:?} misses x·u·x for x={x}, u={u}",
                        desc_s(s)
                    )
                });
            }
        }
        let (t, _) = s.subsemigroup(b)?;
        if props::left_stable(s).value {
            o.require(props::left_stable(&t).value, || {
                format!("{}: bi-ideal {b:?} not left stable", desc_s(s))
            });
        }
        Ok(o)
    })?;
    out.vacuous = true;
    out.note("key step: x·u·x stays in the bi-ideal");
    Ok(out)
}

fn l5_8(ctx: &Context) -> Result<Outcome> {
    for_role(ctx, Role::Ideal, |s, _gs, i| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        let (_, q, proj, qb, projb) = ideal_parts(s, i)?;
        let (gq, gqb) = (GreenStructure::of(&q), GreenStructure::of(&qb));
        let ids: Vec<(usize, usize)> = (0..s.order()).map(|x| (proj[x], projb[x])).collect();
        same_preorders(&mut o, &gq, &gqb, &ids, &|| {
            format!("{} mod ideal {i:?}", desc_s(s))
        });
        for side in [Side::Left, Side::Right] {
            let a = Analysis::with_green(&q, gq.clone()).stable_side(side).value;
            let b = Analysis::with_green(&qb, gqb.clone())
                .stable_side(side)
                .value;
            o.require(a == b, || {
                format!("{} mod ideal {i:?}: {side:?} stable {a} vs {b}", desc_s(s))
            });
        }
        Ok(o)
    })
}

fn p5_9(ctx: &Context) -> Result<Outcome> {
    let mut out = for_role(ctx, Role::Ideal, |s, _gs, i| {
        let mut o = Outcome {
            instances: 1,
            ..Outcome::default()
        };
        o.require(FiniteBiact::regular(s).is_subact(i), || {
            format!("{}: ideal {i:?} is not a subact", desc_s(s))
        });
        let (ib, q, ..) = ideal_parts(s, i)?;
        let lhs = props::stable(s).value;
        let rhs = props::stable(&ib).value && props::stable(&q).value;
        o.require(lhs == rhs, || {
            format!("{} ideal {i:?}: {lhs} vs {rhs}", desc_s(s))
        });
        Ok(o)
    })?;
    out.vacuous = true;
    Ok(out)
}

fn con5_10(ctx: &Context) -> Result<Outcome> {
    let sgs = semigroups_up_to(ctx.config.max_order.min(2))?;
    let mut cases = Vec::new();
    for s in &sgs {
        for m in 1..=2 {
            for a in all_biacts_vec(s, s, m)? {
                cases.push((s.clone(), a));
            }
        }
    }
    let parts: Vec<Result<(Outcome, u64)>> = cases
        .par_iter()
        .map(|(s, a)| {
            let mut o = Outcome {
                instances: 1,
                ..Outcome::default()
            };
            let what = || desc_b(a);
            let (u, layout) = construct_usa(s, a)?;
            let n = layout.ideal_n();
            o.require(u.is_subset_role(&n, Role::Ideal), || {
                format!("{}: points and 0 do not form an ideal", what())
            });
            o.require(u.subsemigroup(&n)?.0.is_null(), || {
                format!("{}: points and 0 are not null", what())
            });
            let (gu, ga, gs) = (
                GreenStructure::of(&u),
                GreenStructure::of(a),
                GreenStructure::of(s),
            );
            let x = |p: usize| layout.x.start + p;
            let mut literal = 0u64;
            for p in 0..a.size() {
                for q in 0..a.size() {
                    for k in Preorder::ALL {
                        let got = gu.le(k, x(p), x(q));
                        let want = ga.le(k, p, q);
                        o.require(got == want, || {
                            format!(
                                "{}: x_{p} <=_{k:?} x_{q} in U is {got}, in A {want}",
                                what()
                            )
                        });
                        if a.size() <= s.order() && got != gs.le(k, p, q) {
                            literal += 1;
                        }
                    }
                }
            }
            let sym = Usa::new(
                Arc::new(FiniteView::new(s)),
                Arc::new(FiniteBiactView::new(a)),
            );
            for v in u.elements() {
                for w in u.elements() {
                    for k in Preorder::ALL {
                        let got = sym.le(k, &layout.elem(v), &layout.elem(w))?;
                        o.require(got == gu.le(k, v, w), || {
                            format!("{}: decider {k:?} on ({v},{w})", what())
                        });
                    }
                }
            }
            let (q, _) = u.rees_quotient(&n)?;
            let s0 = s.adjoin(Adjoin::Zero).semigroup;
            o.require(find_isomorphism(&q, &s0).is_some(), || {
                format!("{}: U/I is not S with a zero", what())
            });
            for side in [Side::Left, Side::Right] {
                let lhs = Analysis::with_green(&u, gu.clone()).stable_side(side).value;
                let rhs = Analysis::with_green(a, ga.clone()).stable_side(side).value
                    && Analysis::with_green(s, gs.clone()).stable_side(side).value;
                o.require(lhs == rhs, || {
                    format!("{}: {side:?} stable {lhs} vs {rhs}", what())
                });
            }
            Ok((o, literal))
        })
        .collect();
    let mut out = Outcome::default();
    let mut literal = 0;
    for p in parts {
        let (o, n) = p?;
        out.merge(o);
        literal += n;
    }
    out.note(format!(
        "point preorders follow the biact A on all {} instances; reading the comparison in S instead (identifying point and element ids where |A| <= |S|) disagrees on {literal} comparisons",
        cases.len()
    ));
    Ok(out)
}

fn c5_12(ctx: &Context) -> Result<Outcome> {
    let mut out = Outcome::default();
    let x = unstable_extension();
    out.require(x.replay_witness()?, || {
        "left stability witness does not replay".into()
    });
    let w = x.witness();
    out.witness(format!(
        "{}·{} = {} is J-related to {} but not L-related",
        w.actor, w.point, w.image, w.point
    ));
    let mut r = rng(ctx);
    let f = FreeSemigroup::new(2);
    for _ in 0..500 {
        let (u, v) = (f.sample(&mut r), f.sample(&mut r));
        if f.related(Preorder::J, &u, &v)? {
            out.require(u == v, || {
                format!("free semigroup: distinct {u} and {v} are J-related")
            });
        }
    }
    let ag = free_j_agreement(2, 6)?;
    for m in &ag.mismatches {
        out.require(false, || format!("free semigroup: {m}"));
    }
    if let Some((p, q)) = x.i_null_violation(&mut r, ctx.config.samples) {
        out.require(false, || format!("I: {p}·{q} is not 0"));
    }
    if let Some((p, q)) = x.quotient_j_violation(&mut r, ctx.config.samples)? {
        out.require(false, || format!("U/I: distinct {p} and {q} are J-related"));
    }
    audit(&mut out, "cor5.12")?;
    out.symbolic += 1 + 500 + ag.checked as u64 + 2 * ctx.config.samples as u64;
    Ok(out)
}
