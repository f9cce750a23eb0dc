//! Deciding whether some automorphism makes a word positive.
//!
//! Usage: cargo run --release --example positivity [WORD...]

use freeaut::{potentially_positive, Word};

fn main() -> freeaut::Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["ab", "AB", "abAB", "aBAb", "aabAb", "abbAB"]
            .map(String::from)
            .to_vec();
    }
    for text in inputs {
        let u: Word = text.parse()?;
        let report = potentially_positive(&u);
        print!(
            "{u:<8} {:<5} ({} chains)",
            report.answer, report.chains_examined
        );
        if let Some(w) = &report.witness {
            print!(
                "  chain [{}] then {}  ↦ [{}]",
                w.chain, w.w1_map, w.positive_image
            );
        }
        println!();
    }
    Ok(())
}
