//! Is a finitely generated subgroup the fixed subgroup of an automorphism?
//!
//! Usage: cargo run --release --example fixed_subgroups [GENERATORS...]
//! where each argument is a comma-separated generator list such as `aab,ba`.

use freeaut::{fixed_point_group, FixOptions, Subgroup};

fn main() -> freeaut::Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["a,b", "a", "aa", "ab", "aa,b"].map(String::from).to_vec();
    }
    for text in inputs {
        let h: Subgroup = text.parse()?;
        let g = h.graph();
        println!(
            "<{h}>: folded graph with {} vertices, {} edges",
            g.vertex_count(),
            g.edge_count()
        );
        let report = fixed_point_group(&h, &FixOptions::default());
        println!("  answer {}", report.answer);
        if let Some(w) = &report.witness {
            println!(
                "  witness {} (chain [{}], δ′ {:?}, β {})",
                w.automorphism, w.chain, w.delta_composition, w.w1_map
            );
        }
        if let Some(e) = &report.escaped_fixed_word {
            println!("  fixed by every candidate but not in H: {e}");
        }
        if !report.truncations.is_empty() {
            println!("  truncated by {:?}", report.truncations);
        }
    }
    Ok(())
}
