use proptest::prelude::*;

use greenstone::congruence::check_congruence;
use greenstone::enumerate::{random_biacts, random_subsemigroup};
use greenstone::format::{biact_to_json, parse_biact, parse_semigroup, semigroup_to_json};
use greenstone::iso::{canonical_table, find_isomorphism};
use greenstone::props::{Analysis, Side};
use greenstone::{
    congruence_closure, green_index, quotient_semigroup, FiniteBiact, FiniteSemigroup,
    GreenStructure, Preorder, Relation, Role,
};

fn transformations() -> impl Strategy<Value = FiniteSemigroup> {
    (1usize..=4)
        .prop_flat_map(|d| {
            prop::collection::vec(prop::collection::vec(0..d, d), 1..=3).prop_map(move |g| (d, g))
        })
        .prop_map(|(d, g)| FiniteSemigroup::from_transformations(d, &g).unwrap())
}

fn semigroup_and_perm() -> impl Strategy<Value = (FiniteSemigroup, Vec<usize>)> {
    transformations()
        .prop_filter("canonical forms are factorial", |s| s.order() <= 7)
        .prop_flat_map(|s| {
            let n = s.order();
            (Just(s), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn green_invariants_hold(s in transformations()) {
        let g = GreenStructure::of(&s);
        prop_assert!(g.invariant_violations().is_empty());
        prop_assert!(g.same_structure(&GreenStructure::of(&s.with_all_edges())));
        prop_assert!(g.same_structure(&GreenStructure::of(&FiniteBiact::regular(&s))));
        for k in Preorder::ALL {
            prop_assert!(g.peel_minimal(k));
        }
    }

    #[test]
    fn relabelling_preserves_structure((s, perm) in semigroup_and_perm()) {
        let t = s.relabel(&perm);
        prop_assert!(t.triple_scan().is_ok());
        prop_assert_eq!(canonical_table(&s), canonical_table(&t));
        let (g, h) = (GreenStructure::of(&s), GreenStructure::of(&t));
        for r in Relation::ALL {
            prop_assert_eq!(g.class_count(r), h.class_count(r));
        }
        prop_assert!(find_isomorphism(&s, &t).is_some());
    }

    #[test]
    fn semigroup_files_round_trip(s in transformations()) {
        let back = parse_semigroup(&semigroup_to_json(&s)).unwrap();
        prop_assert_eq!(back.table(), s.table());
        prop_assert_eq!(back.labels(), s.labels());
    }

    #[test]
    fn congruence_closure_is_a_congruence(s in transformations(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let (x, y) = (a.index(s.order()), b.index(s.order()));
        let rho = congruence_closure(&s, &[(x, y)]).unwrap();
        prop_assert!(rho.same(x, y));
        prop_assert!(check_congruence(&s, &rho).is_ok());
        let (q, map) = quotient_semigroup(&s, &rho).unwrap();
        prop_assert!(FiniteSemigroup::is_homomorphism(&s, &q, &map).is_ok());
    }

    #[test]
    fn rees_quotient_by_principal_ideal(s in transformations(), a in any::<prop::sample::Index>()) {
        let i = s.principal_ideal(a.index(s.order()));
        prop_assert!(s.is_subset_role(&i, Role::Ideal));
        let (q, proj) = s.rees_quotient(&i).unwrap();
        prop_assert_eq!(q.order(), s.order() - i.len() + 1);
        prop_assert!(FiniteSemigroup::is_homomorphism(&s, &q, &proj).is_ok());
    }

    #[test]
    fn green_index_counts_outside_h_classes(s in transformations(), seed in any::<u64>()) {
        let t = random_subsemigroup(&s, seed);
        prop_assert!(s.is_subset_role(&t, Role::Subsemigroup));
        let r = green_index(&s, &t).unwrap();
        prop_assert_eq!(r.index, r.outside_h_classes + 1);
        prop_assert!(r.classes_separated);
    }

    #[test]
    fn finite_biacts_are_stable_in_every_form(seed in any::<u64>()) {
        for a in random_biacts(seed, 3, 5).take(4) {
            let an = Analysis::new(&a);
            for side in [Side::Left, Side::Right] {
                prop_assert_eq!(an.stable_forms(side), [true; 8]);
            }
            prop_assert_eq!(an.stable_char().value, an.stable().value);
            prop_assert!(an.stable().value);
            let back = parse_biact(&biact_to_json(&a)).unwrap();
            prop_assert_eq!(back.left_action(), a.left_action());
            prop_assert_eq!(back.right_action(), a.right_action());
        }
    }
}
