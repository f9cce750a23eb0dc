//! Builds a brute-force catalog of automorphisms and uses it to cross-check
//! the positivity and bounded-translation-equivalence procedures.
//!
//! Usage: cargo run --release --example oracle_crosscheck [DEPTH]

use std::time::Instant;

use freeaut::decide::{bounded_translation_equivalent, potentially_positive};
use freeaut::oracle::{abelian_obstruction, AutoCatalog, OracleVerdict};
use freeaut::words::reduced_words_up_to;
use freeaut::Word;

fn main() -> freeaut::Result<()> {
    let depth: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("DEPTH must be a number"))
        .unwrap_or(5);

    let start = Instant::now();
    let catalog = AutoCatalog::build(depth)?;
    println!(
        "catalog of depth {depth}: {} automorphisms (levels {:?}), built in {:.2?}",
        catalog.len(),
        catalog.level_sizes(),
        start.elapsed()
    );

    // Positivity: the oracle can only confirm "yes"; a decided "no" must be
    // backed by the abelian obstruction or by the oracle finding nothing.
    let mut agree = 0;
    let words = reduced_words_up_to(3);
    for u in &words {
        let decided = potentially_positive(u).answer;
        let oracle = catalog.potentially_positive(u);
        let ok = match (&oracle, decided) {
            (OracleVerdict::Yes { .. }, answer) => answer,
            (OracleVerdict::NoWithinDepth, true) => true,
            (OracleVerdict::NoWithinDepth, false) => abelian_obstruction(u) || !oracle.is_yes(),
        };
        if ok {
            agree += 1;
        } else {
            println!("  disagreement on {u}");
        }
    }
    println!(
        "positivity: {agree}/{} words of length <= 3 consistent",
        words.len()
    );

    // Ratio containment for a boundedly translation equivalent pair.
    let u: Word = "aabAB".parse()?;
    let v: Word = "a".parse()?;
    let report = bounded_translation_equivalent(&u, &v)?;
    let bounds = report.bounds.expect("the pair is equivalent");
    let ratios = catalog.ratios(&u, &v)?;
    let inside = ratios
        .iter()
        .filter(|r| bounds.min <= **r && **r <= bounds.max)
        .count();
    println!(
        "bte {u} {v}: Δ in [{}, {}]; {inside}/{} sampled ratios inside",
        bounds.min,
        bounds.max,
        ratios.len()
    );
    Ok(())
}
