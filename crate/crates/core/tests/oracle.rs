//! The brute-force catalog is sound and agrees with the decision procedures.

mod common;

use std::collections::HashSet;

use freeaut::oracle::{abelian_obstruction, AutoCatalog};
use freeaut::words::reduced_words_up_to;
use freeaut::{potentially_positive, Automorphism};

#[test]
fn catalog_entries_are_distinct_automorphisms() {
    let catalog = AutoCatalog::build(4).unwrap();
    let distinct: HashSet<&Automorphism> = catalog.automorphisms().iter().collect();
    assert_eq!(distinct.len(), catalog.len());
    for phi in catalog.automorphisms() {
        assert!(phi.compose(&phi.inverse()).is_identity(), "{phi}");
    }
}

#[test]
fn catalog_levels_nest() {
    let catalog = AutoCatalog::build(4).unwrap();
    let sizes = catalog.level_sizes();
    assert!(sizes.windows(2).all(|p| p[0] < p[1]));
    assert_eq!(catalog.up_to(4).len(), catalog.len());
}

#[test]
fn agrees_with_positivity_on_short_words() {
    let catalog = AutoCatalog::build(5).unwrap();
    for u in reduced_words_up_to(3) {
        let decided = potentially_positive(&u).answer;
        let oracle = catalog.potentially_positive(&u);
        if oracle.is_yes() {
            assert!(decided, "oracle finds a positive image of {u}");
        }
        if !decided {
            assert!(abelian_obstruction(&u) || !oracle.is_yes(), "{u}");
        }
    }
}

#[test]
fn fixing_entries_fix() {
    let catalog = AutoCatalog::build(3).unwrap();
    let words = [common::w("ab")];
    let fixing: Vec<_> = catalog.fixing(&words).collect();
    assert!(fixing.iter().any(|phi| phi.is_identity()));
    for phi in fixing {
        assert_eq!(phi.apply(&words[0]), words[0]);
    }
}
