//! Driving the command-line front end programmatically, including a batch
//! corpus. The same commands work through the `freeaut` binary.
//!
//! Usage: cargo run --release --example batch_cli

use freeaut::cli::run;

fn main() -> std::io::Result<()> {
    let single = run(["freeaut", "--json", "bte", "aabAB", "a"]);
    println!("exit {}: {}", single.status, single.stdout.trim());

    let corpus = "\
# one command per line; flags before the command apply to that line
positivity abAB
positivity BAB
bte a b
apply st aab
--max-chain-len 1 positivity abAB
fixgroup aa
";
    let path = std::env::temp_dir().join("freeaut-example-corpus.txt");
    std::fs::write(&path, corpus)?;
    let batch = run(["freeaut", "--batch", path.to_str().expect("utf-8 path")]);
    print!("{}", batch.stdout);
    println!("batch exit status {} (worst line)", batch.status);
    std::fs::remove_file(path)
}
