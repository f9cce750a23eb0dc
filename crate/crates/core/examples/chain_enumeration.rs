//! Bounded depth-first enumeration of chains and closed-form power lengths.
//!
//! Usage: cargo run --release --example chain_enumeration [WORD] [MAX_LEN]

use freeaut::chains::{chain_count, chain_powers, step_power_length};
use freeaut::{Control, CyclicWord, Enumerator, Polarity, Step};

fn main() -> freeaut::Result<()> {
    let mut args = std::env::args().skip(1);
    let u: CyclicWord = args.next().unwrap_or_else(|| "aabAB".into()).parse()?;
    let max_len: usize = args.next().map_or(3, |s| s.parse().expect("MAX_LEN"));

    for polarity in [Polarity::C1, Polarity::C2] {
        println!("{polarity} chains up to length {max_len} applied to [{u}]:");
        Enumerator::new(polarity, max_len).run(std::slice::from_ref(&u), |v| {
            println!("  {:<8} ↦ [{}]", v.chain().to_string(), v.images[0]);
            Control::Continue
        })?;
    }

    // A parallel fold: the longest image over a much deeper tree.
    let depth = 16;
    let (longest, summary) = Enumerator::new(Polarity::C1, depth).fold(
        std::slice::from_ref(&u),
        4,
        || 0usize,
        |best, v| {
            *best = (*best).max(v.images[0].len());
            true
        },
        usize::max,
    )?;
    println!(
        "\n{} chains of length ≤ {depth} visited ({} expected); longest image {longest}",
        summary.visited,
        chain_count(depth)
    );

    for step in Step::ALL {
        let powers = chain_powers(&u, step, 5);
        let lengths: Vec<usize> = powers.iter().map(CyclicWord::len).collect();
        let far = step_power_length(&u, step, 1_000_000);
        println!(
            "{:<9} powers 0..5: {lengths:?}; ‖{}^1000000‖ = {far}",
            step.name(),
            step.to_char()
        );
    }
    Ok(())
}
