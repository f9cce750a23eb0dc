//! The named automorphisms, Whitehead maps and the verified identity tables.
//!
//! Usage: cargo run --example automorphisms

use freeaut::identities::{self, Family};
use freeaut::{all_w1, named, Automorphism, Letter, Named, WhiteheadW2, Word};

fn main() -> freeaut::Result<()> {
    let u: Word = "aabAB".parse()?;
    for n in [
        Named::Sigma,
        Named::Tau,
        Named::SigmaInv,
        Named::TauInv,
        Named::Delta1,
        Named::Delta2,
        Named::Delta3,
        Named::Delta4,
    ] {
        let f = named(n);
        println!(
            "{:<10} {:<18} {u} ↦ {}",
            n.name(),
            f.to_string(),
            f.apply(&u)
        );
    }

    println!("\nthe 8 signed permutations of the generators:");
    for beta in all_w1() {
        println!("  {beta}");
    }

    let w2 = WhiteheadW2::new(Letter::B, &[Letter::AInv])?.to_automorphism();
    println!("\nWhitehead map a⁻¹ ↦ b·a⁻¹: {w2}");
    let custom: Automorphism = "a -> ab; b -> bab".parse()?;
    println!("{custom} has inverse {}", custom.inverse());

    for family in [
        Family::WhiteheadFactorization,
        Family::DeltaCommutation,
        Family::PiRewriting,
    ] {
        let ids = identities::of_family(family);
        let holding = ids.iter().filter(|id| id.holds()).count();
        println!("\n{family:?}: {holding}/{} identities hold", ids.len());
        for id in ids.iter().take(3) {
            println!("  {id}");
        }
    }
    Ok(())
}
