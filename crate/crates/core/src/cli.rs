//! Command-line front end. [`run`] takes an argument vector and returns the
//! exit status together with everything that would be printed, so the
//! binary is a thin wrapper and tests can drive the CLI in-process.
//!
//! Exit status: 0 when the question was decided, 2 when a cap left it
//! inconclusive, 1 for usage or input errors.

use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::autos::Automorphism;
use crate::chains::{Chain, Control, Enumerator, Polarity, Step};
use crate::decide::{
    bounded_translation_equivalent_with, fixed_point_group, potentially_positive_with, BteOptions,
    FixAnswer, FixOptions, PositivityOptions, DEFAULT_DELTA_STEP_CAP, DEFAULT_VERIFICATION_DEPTH,
};
use crate::error::{Error, Result};
use crate::oracle::{abelian_obstruction, AutoCatalog};
use crate::subgroups::Subgroup;
use crate::words::Word;

pub const EXIT_DECIDED: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

/// Largest chain length accepted by `enumerate`, which prints every chain.
const ENUMERATE_MAX_LEN: usize = 16;

#[derive(Debug, Parser)]
#[command(
    name = "freeaut",
    version,
    about = "Decide automorphism problems in the free group F2 = <a, b>",
    long_about = "Decide automorphism problems in the free group F2 = <a, b>.\n\n\
        Words use a, b for the generators and A, B for their inverses; 1 is the identity.\n\
        Exit status: 0 decided, 2 inconclusive (a cap was hit), 1 usage or input error."
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Command>,
    #[command(flatten)]
    pub overrides: Overrides,
    /// Run one command per line of FILE and print JSON lines.
    #[arg(long, value_name = "FILE", global = true)]
    pub batch: Option<String>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Overrides {
    /// Emit a single-line JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cross-check against a brute-force catalog of this depth (cap 12).
    #[arg(long, value_name = "DEPTH", global = true)]
    pub verify: Option<usize>,
    /// Chain length bound. Defaults: 2|u|+3 (positivity), 2|u|+5 (bte),
    /// 4|H|+4 (fixgroup). Lower values can make answers inconclusive.
    #[arg(long, value_name = "N", global = true)]
    pub max_chain_len: Option<usize>,
    /// Fixed words up to this length are checked for membership in H.
    #[arg(long, value_name = "N", global = true, default_value_t = DEFAULT_VERIFICATION_DEPTH)]
    pub verification_depth: usize,
    /// Cap on the length of the delta composition; the theoretical bound
    /// (2^(4|H|+4)+1)|H| is used when smaller.
    #[arg(long, value_name = "N", global = true, default_value_t = DEFAULT_DELTA_STEP_CAP)]
    pub delta_step_cap: u64,
    /// Cap on intermediate word lengths. Default for fixgroup: 4(|H|+4);
    /// for enumerate: no cap.
    #[arg(long, value_name = "N", global = true)]
    pub word_length_cap: Option<usize>,
    /// Worker threads for chain enumeration; never changes the output.
    #[arg(long, value_name = "N", global = true, default_value_t = 1)]
    pub workers: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Is some automorphism image of WORD a positive cyclic word?
    Positivity { word: String },
    /// Are U and V boundedly translation equivalent? Prints the Δ bounds.
    Bte { u: String, v: String },
    /// Is the subgroup generated by GENERATORS (e.g. "aab,ba") a fixed-point group?
    Fixgroup { generators: String },
    /// Apply MAP (a name like sigma, "a -> ab; b -> b", or a chain like st or ST) to WORD.
    Apply { map: String, word: String },
    /// List chains of POLARITY (C1 or C2) up to MAX_LEN with the images of WORDS.
    Enumerate {
        polarity: String,
        max_len: usize,
        words: Vec<String>,
    },
}

/// What a finished command prints and how it exits.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs the CLI on `argv` (including the program name).
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_DECIDED
            };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    if let Some(path) = &cli.batch {
        if cli.command.is_some() {
            return usage_error("--batch cannot be combined with a command");
        }
        return run_batch(path, &cli.overrides);
    }
    let Some(command) = cli.command else {
        return usage_error("a command is required (try --help)");
    };
    match execute(&command, &cli.overrides) {
        Ok(report) => {
            let stdout = if cli.overrides.json {
                format!("{}\n", report.json)
            } else {
                report.text
            };
            Outcome {
                status: report.status,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            status: EXIT_ERROR,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn usage_error(msg: &str) -> Outcome {
    Outcome {
        status: EXIT_ERROR,
        stdout: String::new(),
        stderr: format!("error: {msg}\n"),
    }
}

/// Batch mode: each non-empty, non-`#` line is a command with its own
/// flags; file-level flags apply unless a line overrides them. Output is
/// one JSON object per line. The exit status is the most severe one seen
/// (error over inconclusive over decided).
fn run_batch(path: &str, overrides: &Overrides) -> Outcome {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("cannot read {path}: {e}")),
    };
    let mut stdout = String::new();
    let mut worst = EXIT_DECIDED;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (status, value) = run_batch_line(line, overrides);
        worst = severity_max(worst, status);
        let mut obj = match value {
            Value::Object(m) => m,
            other => Map::from_iter([("report".to_string(), other)]),
        };
        obj.insert("line".into(), json!(lineno + 1));
        stdout.push_str(&Value::Object(obj).to_string());
        stdout.push('\n');
    }
    Outcome {
        status: worst,
        stdout,
        stderr: String::new(),
    }
}

fn run_batch_line(line: &str, overrides: &Overrides) -> (i32, Value) {
    let error = |msg: String| (EXIT_ERROR, json!({ "input": line, "error": msg }));
    let Some(words) = shlex::split(line) else {
        return error("unbalanced quotes".into());
    };
    let mut argv = vec!["freeaut".to_string()];
    argv.extend(batch_flags(overrides));
    argv.extend(words);
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => return error(e.render().to_string().trim().to_string()),
    };
    let Some(command) = cli.command else {
        return error("missing command".into());
    };
    match execute(&command, &cli.overrides) {
        Ok(report) => (report.status, report.json),
        Err(e) => error(e.to_string()),
    }
}

/// File-level overrides re-expressed as flags so each line can still
/// override them.
fn batch_flags(o: &Overrides) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(d) = o.verify {
        out.extend(["--verify".into(), d.to_string()]);
    }
    if let Some(n) = o.max_chain_len {
        out.extend(["--max-chain-len".into(), n.to_string()]);
    }
    out.extend([
        "--verification-depth".into(),
        o.verification_depth.to_string(),
    ]);
    out.extend(["--delta-step-cap".into(), o.delta_step_cap.to_string()]);
    if let Some(n) = o.word_length_cap {
        out.extend(["--word-length-cap".into(), n.to_string()]);
    }
    out.extend(["--workers".into(), o.workers.to_string()]);
    out
}

fn severity_max(a: i32, b: i32) -> i32 {
    let rank = |s: i32| match s {
        EXIT_ERROR => 2,
        EXIT_INCONCLUSIVE => 1,
        _ => 0,
    };
    if rank(b) > rank(a) {
        b
    } else {
        a
    }
}

/// A finished command: exit status, JSON report and text rendering.
struct Report {
    status: i32,
    json: Value,
    text: String,
}

fn parse_word_arg(s: &str) -> Result<Word> {
    Ok(s.parse::<Word>()?)
}

fn stats(chains_examined: u64, start: Instant) -> Value {
    json!({
        "chains_examined": chains_examined,
        "elapsed_ms": start.elapsed().as_millis() as u64,
    })
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize to JSON")
}

fn execute(command: &Command, o: &Overrides) -> Result<Report> {
    let workers = o.workers.max(1);
    let catalog = match o.verify {
        Some(depth) => Some(AutoCatalog::build(depth)?),
        None => None,
    };
    let start = Instant::now();
    match command {
        Command::Positivity { word } => {
            let u = parse_word_arg(word)?;
            let r = potentially_positive_with(
                &u,
                &PositivityOptions {
                    max_chain_len: o.max_chain_len,
                    workers,
                },
            );
            let decided = r.answer || r.complete;
            let answer = if decided {
                json!(r.answer)
            } else {
                json!("inconclusive")
            };
            let mut obj = Map::new();
            obj.insert("command".into(), json!("positivity"));
            obj.insert("input".into(), json!({ "word": u }));
            obj.insert("answer".into(), answer.clone());
            if let Some(w) = &r.witness {
                obj.insert("witness".into(), to_value(w));
            }
            obj.insert("max_chain_len".into(), json!(r.max_chain_len));
            if let Some(cat) = &catalog {
                let verdict = cat.potentially_positive(&u);
                let obstruction = abelian_obstruction(&u);
                // The oracle is one-sided: only an oracle "yes" against a
                // "no" answer is a disagreement.
                let consistent = !(verdict.is_yes() && !r.answer);
                obj.insert(
                    "verify".into(),
                    json!({
                        "depth": cat.depth(),
                        "catalog_size": cat.len(),
                        "oracle": to_value(&verdict),
                        "abelian_obstruction": obstruction,
                        "consistent": consistent,
                    }),
                );
            }
            obj.insert("stats".into(), stats(r.chains_examined, start));
            let mut text = format!("positivity {u}: {}\n", plain(&answer));
            if let Some(w) = &r.witness {
                text.push_str(&format!(
                    "  chain: [{}] ({})\n  w1 map: {}\n  positive image: [{}]\n",
                    w.chain,
                    w.chain.polarity(),
                    w.w1_map,
                    w.positive_image
                ));
            }
            text.push_str(&format!("  chains examined: {}\n", r.chains_examined));
            append_verify_text(&mut text, &obj);
            Ok(Report {
                status: if decided {
                    EXIT_DECIDED
                } else {
                    EXIT_INCONCLUSIVE
                },
                json: Value::Object(obj),
                text,
            })
        }
        Command::Bte { u, v } => {
            let (u, v) = (parse_word_arg(u)?, parse_word_arg(v)?);
            let r = bounded_translation_equivalent_with(
                &u,
                &v,
                &BteOptions {
                    max_chain_len: o.max_chain_len,
                    workers,
                },
            )?;
            let decided = !r.answer || r.complete;
            let answer = if decided {
                json!(r.answer)
            } else {
                json!("inconclusive")
            };
            let mut obj = Map::new();
            obj.insert("command".into(), json!("bte"));
            obj.insert("input".into(), json!({ "u": u, "v": v }));
            obj.insert("answer".into(), answer.clone());
            if let Some(f) = &r.failing_condition {
                obj.insert("witness".into(), to_value(f));
            }
            if let Some(b) = &r.bounds {
                obj.insert("bounds".into(), to_value(b));
                obj.insert("delta_set_size".into(), json!(r.delta_set_size));
            }
            obj.insert("max_chain_len".into(), json!(r.max_chain_len));
            if let Some(cat) = &catalog {
                let ratios = cat.ratios(&u, &v)?;
                let lo = ratios.iter().min().copied();
                let hi = ratios.iter().max().copied();
                let within = r
                    .bounds
                    .map(|b| ratios.iter().all(|x| b.min <= *x && *x <= b.max));
                obj.insert(
                    "verify".into(),
                    json!({
                        "depth": cat.depth(),
                        "catalog_size": cat.len(),
                        "sampled_min": lo,
                        "sampled_max": hi,
                        "within_bounds": within,
                        "consistent": within.unwrap_or(true),
                    }),
                );
            }
            obj.insert("stats".into(), stats(r.chains_examined, start));
            let mut text = format!("bte {u} {v}: {}\n", plain(&answer));
            if let Some(b) = &r.bounds {
                text.push_str(&format!(
                    "  min Δ = {}\n  max Δ = {}\n  |Δ| = {}\n",
                    b.min, b.max, r.delta_set_size
                ));
            }
            if let Some(f) = &r.failing_condition {
                text.push_str(&format!(
                    "  fails at chain [{}] ({}), step {}, k = {}: |{u}| lengths {:?}, |{v}| lengths {:?}\n",
                    f.chain,
                    f.chain.polarity(),
                    f.step.name(),
                    f.k,
                    f.u_lengths,
                    f.v_lengths
                ));
            }
            text.push_str(&format!("  chains examined: {}\n", r.chains_examined));
            append_verify_text(&mut text, &obj);
            Ok(Report {
                status: if decided {
                    EXIT_DECIDED
                } else {
                    EXIT_INCONCLUSIVE
                },
                json: Value::Object(obj),
                text,
            })
        }
        Command::Fixgroup { generators } => {
            let h: Subgroup = generators.parse()?;
            let r = fixed_point_group(
                &h,
                &FixOptions {
                    verification_depth: o.verification_depth,
                    delta_step_cap: o.delta_step_cap,
                    word_length_cap: o.word_length_cap,
                    max_chain_len: o.max_chain_len,
                    workers,
                },
            );
            let mut obj = Map::new();
            obj.insert("command".into(), json!("fixgroup"));
            obj.insert("input".into(), json!({ "generators": h.generators() }));
            obj.insert("answer".into(), to_value(&r.answer));
            if let Some(w) = &r.witness {
                obj.insert("witness".into(), to_value(w));
            }
            if let Some(w) = &r.escaped_fixed_word {
                obj.insert("escaped_fixed_word".into(), json!(w));
            }
            for key in [
                "verification_depth",
                "root_certificate",
                "trivial_subgroup",
                "truncations",
                "candidates_examined",
                "max_chain_len",
                "effective_delta_step_cap",
                "word_length_cap",
            ] {
                obj.insert(key.into(), to_value(&r)[key].clone());
            }
            if let Some(cat) = &catalog {
                let fixing: Vec<&Automorphism> = cat.fixing(h.generators()).collect();
                let escaped_fixed = r
                    .escaped_fixed_word
                    .as_ref()
                    .map(|w| fixing.iter().all(|phi| phi.apply(w) == *w));
                obj.insert(
                    "verify".into(),
                    json!({
                        "depth": cat.depth(),
                        "catalog_size": cat.len(),
                        "fixing_generators": fixing.len(),
                        "escaped_word_fixed_by_all": escaped_fixed,
                        "consistent": escaped_fixed.unwrap_or(true),
                    }),
                );
            }
            obj.insert("stats".into(), stats(r.chains_examined, start));
            let mut text = format!("fixgroup <{h}>: {}\n", r.answer);
            if let Some(w) = &r.witness {
                text.push_str(&format!(
                    "  witness: chain [{}], delta [{}], w1 map {}\n  automorphism: {}\n",
                    w.chain,
                    w.delta_composition.join(" "),
                    w.w1_map,
                    w.automorphism
                ));
            }
            if let Some(w) = &r.escaped_fixed_word {
                text.push_str(&format!("  escaped fixed word: {w}\n"));
            }
            if !r.truncations.is_empty() {
                text.push_str(&format!("  truncated by: {:?}\n", r.truncations));
            }
            append_verify_text(&mut text, &obj);
            Ok(Report {
                status: match r.answer {
                    FixAnswer::Inconclusive => EXIT_INCONCLUSIVE,
                    _ => EXIT_DECIDED,
                },
                json: Value::Object(obj),
                text,
            })
        }
        Command::Apply { map, word } => {
            let w = parse_word_arg(word)?;
            let f = parse_map(map)?;
            let image = f.apply(&w);
            let cyclic = image.cyclic_word();
            let json = json!({
                "command": "apply",
                "input": { "map": f, "word": w },
                "answer": image,
                "cyclic": cyclic,
                "cyclic_length": cyclic.len(),
                "stats": stats(0, start),
            });
            let text = format!(
                "{f}\n  {w} -> {image}\n  cyclic [{cyclic}], length {}\n",
                cyclic.len()
            );
            Ok(Report {
                status: EXIT_DECIDED,
                json,
                text,
            })
        }
        Command::Enumerate {
            polarity,
            max_len,
            words,
        } => {
            let polarity = match polarity.as_str() {
                "C1" | "c1" => Polarity::C1,
                "C2" | "c2" => Polarity::C2,
                other => {
                    return Err(Error::Contract(format!(
                        "polarity must be C1 or C2, got {other:?}"
                    )))
                }
            };
            if *max_len > ENUMERATE_MAX_LEN {
                return Err(Error::Contract(format!(
                    "enumerate prints every chain; max_len is limited to {ENUMERATE_MAX_LEN}"
                )));
            }
            let inputs = words
                .iter()
                .map(|s| parse_word_arg(s))
                .collect::<Result<Vec<Word>>>()?;
            let classes: Vec<_> = inputs.iter().map(Word::cyclic_word).collect();
            let mut rows = Vec::new();
            let mut text = String::new();
            let summary = Enumerator::new(polarity, *max_len)
                .with_image_length_cap(o.word_length_cap)
                .run(&classes, |v| {
                    let chain: Chain = v.chain();
                    let images: Vec<String> = v.images.iter().map(|c| c.to_string()).collect();
                    text.push_str(&format!("[{chain}] {}\n", images.join(" ")));
                    rows.push(json!({ "chain": chain, "images": images }));
                    Control::Continue
                })?;
            let json = json!({
                "command": "enumerate",
                "input": { "polarity": polarity, "max_len": max_len, "words": inputs },
                "answer": rows,
                "stats": stats(summary.visited, start),
            });
            Ok(Report {
                status: EXIT_DECIDED,
                json,
                text,
            })
        }
    }
}

/// A named map, an automorphism `a -> …; b -> …`, or a chain over s/t/S/T.
fn parse_map(s: &str) -> Result<Automorphism> {
    let auto = s.parse::<Automorphism>();
    if auto.is_ok() || s.contains("->") {
        return auto;
    }
    // Text made only of step letters is meant as a chain; report its error.
    match s.parse::<Chain>() {
        Ok(c) => Ok(c.to_automorphism()),
        Err(e) if !s.is_empty() && s.chars().all(|c| Step::from_char(c).is_some()) => Err(e.into()),
        Err(_) => auto,
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn append_verify_text(text: &mut String, obj: &Map<String, Value>) {
    if let Some(v) = obj.get("verify") {
        text.push_str(&format!("  verify: {v}\n"));
    }
}

/// Removes `stats.elapsed_ms` so reports from different runs compare equal.
pub fn strip_timing(mut v: Value) -> Value {
    if let Some(stats) = v.get_mut("stats").and_then(Value::as_object_mut) {
        stats.remove("elapsed_ms");
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_json(args: &[&str]) -> (i32, Value) {
        let mut argv = vec!["freeaut"];
        argv.extend_from_slice(args);
        argv.push("--json");
        let out = run(argv);
        let v = serde_json::from_str(out.stdout.trim()).unwrap_or(Value::Null);
        (out.status, v)
    }

    #[test]
    fn positivity_command() {
        let (status, v) = run_json(&["positivity", "abAB"]);
        assert_eq!(status, 0);
        assert_eq!(v["answer"], json!(false));
        assert_eq!(v["command"], json!("positivity"));
        assert!(v["stats"]["chains_examined"].is_u64());
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run(["freeaut", "positivity", "ab$"]).status, 1);
        assert_eq!(run(["freeaut", "--bogus"]).status, 1);
        assert_eq!(run(["freeaut"]).status, 1);
        assert_eq!(run(["freeaut", "bte", "aA", "b"]).status, 1);
        assert_eq!(run(["freeaut", "--help"]).status, 0);
    }

    #[test]
    fn apply_and_enumerate() {
        let (status, v) = run_json(&["apply", "sigma", "ab"]);
        assert_eq!(status, 0);
        assert_eq!(v["answer"], json!("abb"));
        let (_, v) = run_json(&["apply", "st", "a"]);
        assert_eq!(v["cyclic"], json!("aab"));
        let (_, v) = run_json(&["enumerate", "C1", "2", "a"]);
        assert_eq!(v["answer"].as_array().unwrap().len(), 7);
    }
}
