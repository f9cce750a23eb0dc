//! Automorphisms act as homomorphisms, respect conjugacy and invert.

mod common;

use common::{chain_strategy, word_strategy};
use freeaut::autos::predicted_length_delta;
use freeaut::identities;
use freeaut::{all_w1, Automorphism, Chain, Step};
use proptest::prelude::*;

fn catalog_factor() -> impl Strategy<Value = Automorphism> {
    prop::sample::select(freeaut::oracle::catalog_generators())
}

/// Products of up to four catalog factors.
fn automorphism_strategy() -> impl Strategy<Value = Automorphism> {
    prop::collection::vec(catalog_factor(), 0..=4).prop_map(|fs| {
        fs.iter()
            .fold(Automorphism::identity(), |acc, f| acc.compose(f))
    })
}

#[test]
fn identity_tables_hold() {
    let all = identities::all();
    assert_eq!(all.len(), 32);
    for id in all {
        assert!(id.holds(), "{id}");
    }
}

#[test]
fn counting_formula_examples() {
    let c = |s: &str| s.parse().unwrap();
    assert_eq!(predicted_length_delta(&c("aabAB"), Step::Sigma), 1);
    assert_eq!(predicted_length_delta(&c("ab"), Step::Tau), 1);
    assert_eq!(predicted_length_delta(&c("b"), Step::Sigma), 0);
}

proptest! {
    #[test]
    fn apply_is_a_homomorphism(
        f in automorphism_strategy(),
        u in word_strategy(8),
        v in word_strategy(8),
    ) {
        prop_assert_eq!(f.apply(&u.concat(&v)), f.apply(&u).concat(&f.apply(&v)));
        prop_assert_eq!(f.apply(&u.inverse()), f.apply(&u).inverse());
    }

    #[test]
    fn apply_cyclic_ignores_conjugation(
        f in automorphism_strategy(),
        u in word_strategy(8),
        c in word_strategy(5),
    ) {
        prop_assert_eq!(
            f.apply_cyclic(&u.cyclic_word()),
            f.apply(&u.conjugate(&c)).cyclic_word()
        );
    }

    #[test]
    fn w1_maps_preserve_cyclic_length(u in word_strategy(12)) {
        for beta in all_w1() {
            prop_assert!(beta.is_w1());
            prop_assert_eq!(beta.apply(&u).cyclic_length(), u.cyclic_length());
        }
    }

    #[test]
    fn composition_is_associative(
        f in automorphism_strategy(),
        g in automorphism_strategy(),
        h in automorphism_strategy(),
        u in word_strategy(6),
    ) {
        prop_assert_eq!(f.compose(&g).compose(&h), f.compose(&g.compose(&h)));
        prop_assert_eq!(f.compose(&g).apply(&u), f.apply(&g.apply(&u)));
    }

    #[test]
    fn inverse_undoes(f in automorphism_strategy()) {
        prop_assert!(f.compose(&f.inverse()).is_identity());
        prop_assert!(f.inverse().compose(&f).is_identity());
    }

    #[test]
    fn text_roundtrip(f in automorphism_strategy()) {
        prop_assert_eq!(f.to_string().parse::<Automorphism>().unwrap(), f.clone());
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<Automorphism>(&json).unwrap(), f);
    }

    #[test]
    fn chains_agree_with_their_automorphisms(c in chain_strategy(8), u in word_strategy(6)) {
        let phi = c.to_automorphism();
        prop_assert_eq!(c.apply(&u), phi.apply(&u));
        prop_assert_eq!(c.apply_cyclic(&u.cyclic_word()), phi.apply_cyclic(&u.cyclic_word()));
        prop_assert_eq!(c.to_string().parse::<Chain>().unwrap(), c);
    }
}
