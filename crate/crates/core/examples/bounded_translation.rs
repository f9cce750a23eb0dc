//! Bounded translation equivalence and the Δ bounds on length ratios.
//!
//! Usage: cargo run --release --example bounded_translation [U V]

use freeaut::{bounded_translation_equivalent, Word};

fn main() -> freeaut::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let pairs: Vec<(String, String)> = match args.as_slice() {
        [u, v] => vec![(u.clone(), v.clone())],
        _ => [("aabAB", "a"), ("ab", "BA"), ("a", "b"), ("abb", "ab")]
            .iter()
            .map(|(u, v)| (u.to_string(), v.to_string()))
            .collect(),
    };
    for (u, v) in pairs {
        let (u, v): (Word, Word) = (u.parse()?, v.parse()?);
        let report = bounded_translation_equivalent(&u, &v)?;
        print!("({u}, {v}): {}", report.answer);
        if let Some(b) = report.bounds {
            print!(
                "; {} ≤ ‖φ(u)‖/‖φ(v)‖ ≤ {} over |Δ| = {} ratios",
                b.min, b.max, report.delta_set_size
            );
        }
        if let Some(c) = &report.failing_condition {
            print!(
                "; at chain [{}] the {} lengths are {:?} vs {:?} (k = {})",
                c.chain,
                c.step.name(),
                c.u_lengths,
                c.v_lengths,
                c.k
            );
        }
        println!();
    }
    Ok(())
}
