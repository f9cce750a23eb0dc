//! Soundness and invariance of the three decision procedures.

mod common;

use std::sync::OnceLock;

use common::{nontrivial_word_strategy, w, word_strategy};
use freeaut::decide::{
    bounded_translation_equivalent_with, compute_delta_bounds, potentially_positive_with,
    BteOptions, PositivityOptions,
};
use freeaut::oracle::AutoCatalog;
use freeaut::{
    all_w1, bounded_translation_equivalent, fixed_point_group, potentially_positive, ExactRational,
    FixAnswer, FixOptions, Subgroup, Word,
};
use proptest::prelude::*;

fn catalog() -> &'static AutoCatalog {
    static CATALOG: OnceLock<AutoCatalog> = OnceLock::new();
    CATALOG.get_or_init(|| AutoCatalog::build(5).unwrap())
}

fn bte(u: &Word, v: &Word) -> bool {
    bounded_translation_equivalent(u, v).unwrap().answer
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn positivity_is_invariant_under_w1_and_inversion(u in word_strategy(4)) {
        let answer = potentially_positive(&u).answer;
        prop_assert_eq!(potentially_positive(&u.inverse()).answer, answer);
        for beta in all_w1() {
            prop_assert_eq!(potentially_positive(&beta.apply(&u)).answer, answer);
        }
    }

    #[test]
    fn positivity_witness_replays(u in word_strategy(5)) {
        let report = potentially_positive(&u);
        if let Some(wit) = &report.witness {
            let image = wit.w1_map.apply_cyclic(&wit.chain.apply_cyclic(&u.cyclic_word()));
            prop_assert!(image.is_positive());
            prop_assert_eq!(&image, &wit.positive_image);
            prop_assert!(wit.w1_map.is_w1());
        }
        prop_assert_eq!(report.answer, report.witness.is_some());
    }

    #[test]
    fn positivity_witness_is_independent_of_workers(u in word_strategy(4)) {
        let one = potentially_positive(&u);
        let many = potentially_positive_with(&u, &PositivityOptions { workers: 3, ..Default::default() });
        prop_assert_eq!(one, many);
    }

    #[test]
    fn bte_is_reflexive_and_symmetric(u in nontrivial_word_strategy(3), v in nontrivial_word_strategy(3)) {
        prop_assert!(bte(&u, &u));
        prop_assert_eq!(compute_delta_bounds(&u, &u).unwrap(), (ExactRational::from_integer(1), ExactRational::from_integer(1)));
        prop_assert_eq!(bte(&u, &v), bte(&v, &u));
    }

    #[test]
    fn bte_is_transitive(
        u in nontrivial_word_strategy(3),
        v in nontrivial_word_strategy(3),
        x in nontrivial_word_strategy(3),
    ) {
        if bte(&u, &v) && bte(&v, &x) {
            prop_assert!(bte(&u, &x));
        }
    }

    #[test]
    fn bte_bounds_contain_sampled_ratios(u in nontrivial_word_strategy(3), v in nontrivial_word_strategy(3)) {
        let report = bounded_translation_equivalent(&u, &v).unwrap();
        if let Some(b) = report.bounds {
            for r in catalog().ratios(&u, &v).unwrap() {
                prop_assert!(b.min <= r && r <= b.max, "{} outside [{}, {}]", r, b.min, b.max);
            }
        }
    }

    #[test]
    fn bte_is_independent_of_workers(u in nontrivial_word_strategy(3), v in nontrivial_word_strategy(3)) {
        let one = bounded_translation_equivalent(&u, &v).unwrap();
        let many = bounded_translation_equivalent_with(&u, &v, &BteOptions { workers: 4, ..Default::default() }).unwrap();
        prop_assert_eq!(one, many);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn fixgroup_answers_are_sound(gens in prop::collection::vec(word_strategy(2), 1..=2)) {
        let h = Subgroup::build(gens.clone());
        let report = fixed_point_group(&h, &FixOptions::default());
        match report.answer {
            FixAnswer::Yes => {
                let phi = &report.witness.as_ref().unwrap().automorphism;
                for g in &gens {
                    prop_assert_eq!(&phi.apply(g), g);
                }
            }
            FixAnswer::No => {
                let escaped = report.escaped_fixed_word.as_ref().unwrap();
                prop_assert!(!h.contains(escaped));
            }
            FixAnswer::Inconclusive => prop_assert!(!report.truncations.is_empty()),
        }
    }
}

#[test]
fn zero_length_inputs_are_rejected() {
    assert!(bounded_translation_equivalent(&w("abA"), &Word::identity()).is_err());
    assert!(bounded_translation_equivalent(&w("aA"), &w("a")).is_err());
    assert!(compute_delta_bounds(&w("a"), &w("b")).is_err());
}

#[test]
fn lowered_bounds_are_flagged_incomplete() {
    let p = potentially_positive_with(
        &w("abAB"),
        &PositivityOptions {
            max_chain_len: Some(2),
            workers: 1,
        },
    );
    assert!(!p.answer && !p.complete);
    let b = bounded_translation_equivalent_with(
        &w("aabAB"),
        &w("a"),
        &BteOptions {
            max_chain_len: Some(3),
            workers: 1,
        },
    )
    .unwrap();
    assert!(b.answer && !b.complete);
}
