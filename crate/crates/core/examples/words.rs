//! Words, cyclic classes, counting functions and conjugacy.
//!
//! Usage: cargo run --example words [WORD]

use freeaut::words::{detect_cancellation, find_conjugator};
use freeaut::{Generator, Letter, Word};

fn main() -> freeaut::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "baabABB".to_string());
    let u: Word = text.parse()?;
    let (core, conjugator) = u.cyclic_reduce();
    println!("word            {u} (length {})", u.len());
    println!("cyclic class    [{core}] (cyclic length {})", core.len());
    println!("conjugator      {conjugator}  ({u} = c·core·c⁻¹)");
    println!("exponent sums   {:?}", u.abelianize());
    println!("positive class  {}", core.is_positive());

    println!("letter counts n(w;x):");
    for x in [Letter::A, Letter::B] {
        println!("  n(w;{x}) = {}", core.count_letter(x));
    }
    println!("pair counts n(w;x,y) (pairs xy and y⁻¹x⁻¹, cyclically):");
    for x in Letter::ALL {
        for y in Letter::ALL {
            let n = core.count_pair(x, y);
            if n > 0 {
                println!("  n(w;{x}{y}) = {n}");
            }
        }
    }

    let c = detect_cancellation(&core, Generator::A, Letter::B);
    println!(
        "a ↦ ab causes {} trivial and {} proper cancellations",
        c.trivial, c.proper
    );

    let v = u.conjugate(&"ab".parse()?);
    match find_conjugator(&[u.clone()], &[v.clone()]) {
        Some(c) => println!("{v} = c⁻¹·{u}·c with c = {c}"),
        None => println!("{v} is not conjugate to {u}"),
    }
    Ok(())
}
