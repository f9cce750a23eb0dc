//! The three decision procedures: potential positivity, bounded translation
//! equivalence (with the Δ bounds), and recognition of fixed-point groups.
//!
//! Every procedure enumerates chains of both polarities up to a length bound
//! and reports the canonically least witness — least by chain order (length,
//! then polarity, then σ before τ), then by the position of the (W1) map in
//! [`all_w1`]. Results do not depend on the number of worker threads.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::autos::{all_w1, Automorphism, Named};
use crate::chains::{
    chain_count, step_power_length, Chain, ChainVisit, Enumerator, Polarity, Step,
};
use crate::error::{Error, Result};
use crate::rational::ExactRational;
use crate::subgroups::Subgroup;
use crate::words::{conjugator_family, reduced_words_up_to, CyclicWord, Letter, Word};

/// Folds over every chain of both polarities with length `≤ max_len`. The
/// empty chain is visited once (as C1).
fn fold_both<A, I, V, M>(
    max_len: usize,
    inputs: &[CyclicWord],
    workers: usize,
    init: I,
    visit: V,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &ChainVisit<'_>) -> bool + Sync,
    M: Fn(A, A) -> A,
{
    let run = |polarity: Polarity, skip_root: bool| {
        Enumerator::new(polarity, max_len)
            .fold(
                inputs,
                workers,
                &init,
                |acc: &mut A, v: &ChainVisit<'_>| {
                    if skip_root && v.depth() == 0 {
                        return true;
                    }
                    visit(acc, v)
                },
                &merge,
            )
            .expect("enumeration without an image cap cannot fail")
            .0
    };
    let c1 = run(Polarity::C1, false);
    let c2 = run(Polarity::C2, true);
    merge(c1, c2)
}

/// Number of distinct chains (both polarities) of length `≤ max_len`.
pub fn chains_in_both_polarities(max_len: usize) -> u64 {
    2 * chain_count(max_len) - 1
}

/// Position of `chain` in the canonical order, counting from 1.
fn canonical_rank(chain: &Chain) -> u64 {
    let len = chain.len();
    if len == 0 {
        return 1;
    }
    let shorter = chains_in_both_polarities(len - 1);
    let same_len_before_polarity = match chain.polarity() {
        Polarity::C1 => 0,
        Polarity::C2 => 1u64 << len,
    };
    let lex = chain.steps().iter().fold(0u64, |acc, s| {
        2 * acc + u64::from(matches!(s, Step::Tau | Step::TauInv))
    });
    shorter + same_len_before_polarity + lex + 1
}

fn min_chain(a: Option<Chain>, b: Option<Chain>) -> Option<Chain> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

// ---------------------------------------------------------------------------
// Potential positivity

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositivityOptions {
    /// Chain length bound; `None` uses `2‖u‖ + 3`.
    pub max_chain_len: Option<usize>,
    pub workers: usize,
}

impl Default for PositivityOptions {
    fn default() -> Self {
        PositivityOptions {
            max_chain_len: None,
            workers: 1,
        }
    }
}

/// The chain length that makes the positivity search complete: `2‖u‖ + 3`.
pub fn positivity_chain_bound(u: &Word) -> usize {
    2 * u.cyclic_length() + 3
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityWitness {
    pub chain: Chain,
    pub w1_map: Automorphism,
    pub positive_image: CyclicWord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub answer: bool,
    pub witness: Option<PositivityWitness>,
    /// Chains up to and including the witness in canonical order, or all
    /// chains searched when there is none.
    pub chains_examined: u64,
    pub max_chain_len: usize,
    /// False when a lowered chain bound makes a negative answer unreliable.
    pub complete: bool,
}

/// Decides whether some automorphism sends `u` to a positive cyclic word.
pub fn potentially_positive(u: &Word) -> PositivityReport {
    potentially_positive_with(u, &PositivityOptions::default())
}

pub fn potentially_positive_with(u: &Word, options: &PositivityOptions) -> PositivityReport {
    let bound = positivity_chain_bound(u);
    let max_len = options.max_chain_len.unwrap_or(bound);
    let inputs = [u.cyclic_word()];

    // A chain qualifies when its image uses each generator with one sign
    // only; a sign flip then makes it positive. Extensions of a qualifying
    // chain, and chains longer than the best so far, cannot win.
    let best = fold_both(
        max_len,
        &inputs,
        options.workers,
        || None::<Chain>,
        |best, v| {
            if best.as_ref().is_some_and(|b| v.depth() > b.len()) {
                return false;
            }
            if v.images[0].support().is_sign_coherent() {
                *best = min_chain(best.take(), Some(v.chain()));
                return false;
            }
            true
        },
        min_chain,
    );

    match best {
        Some(chain) => {
            let image = chain.apply_cyclic(&inputs[0]);
            let (w1_map, positive_image) = all_w1()
                .into_iter()
                .map(|beta| {
                    let img = beta.apply_cyclic(&image);
                    (beta, img)
                })
                .find(|(_, img)| img.is_positive())
                .expect("a sign-coherent word has a positive W1 image");
            PositivityReport {
                answer: true,
                chains_examined: canonical_rank(&chain),
                witness: Some(PositivityWitness {
                    chain,
                    w1_map,
                    positive_image,
                }),
                max_chain_len: max_len,
                complete: true,
            }
        }
        None => PositivityReport {
            answer: false,
            witness: None,
            chains_examined: chains_in_both_polarities(max_len),
            max_chain_len: max_len,
            complete: max_len >= bound,
        },
    }
}

// ---------------------------------------------------------------------------
// Bounded translation equivalence

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BteOptions {
    /// Chain length bound; `None` uses `2‖u‖ + 5` with `‖u‖ ≥ ‖v‖`.
    pub max_chain_len: Option<usize>,
    pub workers: usize,
}

impl Default for BteOptions {
    fn default() -> Self {
        BteOptions {
            max_chain_len: None,
            workers: 1,
        }
    }
}

/// A chain ψ and step α where `‖α^{k+1}ψ(u)‖ = ‖α^kψ(u)‖` holds for one
/// word but not the other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BteCounterexample {
    pub chain: Chain,
    pub step: Step,
    pub k: u64,
    /// `[‖α^kψ(u)‖, ‖α^{k+1}ψ(u)‖]` for the caller's first word.
    pub u_lengths: [u64; 2],
    /// The same for the caller's second word.
    pub v_lengths: [u64; 2],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DeltaBounds {
    pub min: ExactRational,
    pub max: ExactRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BteReport {
    pub answer: bool,
    pub failing_condition: Option<BteCounterexample>,
    pub bounds: Option<DeltaBounds>,
    pub delta_set_size: usize,
    pub chains_examined: u64,
    pub max_chain_len: usize,
    /// False when a lowered chain bound makes a positive answer unreliable.
    pub complete: bool,
}

/// Per-subtree search state for BTE.
struct BteAcc {
    failure: Option<(Chain, Step)>,
    ratios: BTreeSet<ExactRational>,
}

fn ratio(p: u64, q: u64) -> ExactRational {
    ExactRational::new(p as i64, q as i64)
}

/// Decides whether `‖φ(u)‖/‖φ(v)‖` is bounded above and below over all
/// automorphisms φ, and if so returns the Δ bounds.
pub fn bounded_translation_equivalent(u: &Word, v: &Word) -> Result<BteReport> {
    bounded_translation_equivalent_with(u, v, &BteOptions::default())
}

pub fn bounded_translation_equivalent_with(
    u: &Word,
    v: &Word,
    options: &BteOptions,
) -> Result<BteReport> {
    for w in [u, v] {
        if w.cyclic_length() == 0 {
            return Err(Error::ZeroCyclicLength(w.to_string()));
        }
    }
    let swapped = u.cyclic_length() < v.cyclic_length();
    let (long, short) = if swapped { (v, u) } else { (u, v) };
    let k = long.cyclic_length() as u64 + 1;
    let bound = 2 * long.cyclic_length() + 5;
    let max_len = options.max_chain_len.unwrap_or(bound);
    let inputs = [long.cyclic_word(), short.cyclic_word()];

    let stable = |w: &CyclicWord, step: Step| {
        step_power_length(w, step, k + 1) == step_power_length(w, step, k)
    };

    let acc = fold_both(
        max_len,
        &inputs,
        options.workers,
        || BteAcc {
            failure: None,
            ratios: BTreeSet::new(),
        },
        |acc, visit| {
            let (pu, pv) = (&visit.images[0], &visit.images[1]);
            if acc.failure.is_none() {
                acc.ratios.insert(ratio(pu.len() as u64, pv.len() as u64));
                for step in visit.polarity.steps() {
                    let du = (step_power_length(pu, step, 1) as i64 - pu.len() as i64).max(1);
                    let dv = (step_power_length(pv, step, 1) as i64 - pv.len() as i64).max(1);
                    acc.ratios.insert(ExactRational::new(du, dv));
                }
            }
            for step in visit.polarity.steps() {
                if stable(pu, step) != stable(pv, step) {
                    let found = (visit.chain(), step);
                    if acc.failure.as_ref().is_none_or(|f| found < *f) {
                        acc.failure = Some(found);
                    }
                    return false;
                }
            }
            // Deeper chains cannot beat a failure already found.
            acc.failure
                .as_ref()
                .is_none_or(|(c, _)| visit.depth() < c.len())
        },
        |mut a, b| {
            a.failure = match (a.failure, b.failure) {
                (Some(x), Some(y)) => Some(x.min(y)),
                (x, None) => x,
                (None, y) => y,
            };
            a.ratios.extend(b.ratios);
            a
        },
    );

    if let Some((chain, step)) = acc.failure {
        let lengths = |w: &Word| {
            let img = chain.apply_cyclic(&w.cyclic_word());
            [
                step_power_length(&img, step, k),
                step_power_length(&img, step, k + 1),
            ]
        };
        return Ok(BteReport {
            answer: false,
            chains_examined: canonical_rank(&chain),
            failing_condition: Some(BteCounterexample {
                u_lengths: lengths(u),
                v_lengths: lengths(v),
                chain,
                step,
                k,
            }),
            bounds: None,
            delta_set_size: 0,
            max_chain_len: max_len,
            complete: true,
        });
    }

    let lo = *acc
        .ratios
        .first()
        .expect("the empty chain contributes a ratio");
    let hi = *acc
        .ratios
        .last()
        .expect("the empty chain contributes a ratio");
    let bounds = if swapped {
        DeltaBounds {
            min: hi.recip(),
            max: lo.recip(),
        }
    } else {
        DeltaBounds { min: lo, max: hi }
    };
    Ok(BteReport {
        answer: true,
        failing_condition: None,
        bounds: Some(bounds),
        delta_set_size: acc.ratios.len(),
        chains_examined: chains_in_both_polarities(max_len),
        max_chain_len: max_len,
        complete: max_len >= bound,
    })
}

/// `(min Δ, max Δ)` for a boundedly translation equivalent pair.
pub fn compute_delta_bounds(u: &Word, v: &Word) -> Result<(ExactRational, ExactRational)> {
    let report = bounded_translation_equivalent(u, v)?;
    match report.bounds {
        Some(b) if report.answer => Ok((b.min, b.max)),
        _ => Err(Error::Contract(format!(
            "{u} and {v} are not boundedly translation equivalent; Δ is undefined"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Fixed-point groups

pub const DEFAULT_VERIFICATION_DEPTH: usize = 8;
pub const DEFAULT_DELTA_STEP_CAP: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixOptions {
    /// Fixed words of length `≤ verification_depth` are checked for
    /// membership in H.
    pub verification_depth: usize,
    /// Cap on the length of δ′; the effective cap never exceeds the
    /// theoretical bound `(2^{4|H|+4}+1)|H|`.
    pub delta_step_cap: u64,
    /// Cap on intermediate word lengths while applying δ′; `None` uses
    /// `4(|H| + 4)`.
    pub word_length_cap: Option<usize>,
    /// Chain length bound; `None` uses `4|H| + 4`.
    pub max_chain_len: Option<usize>,
    pub workers: usize,
}

impl Default for FixOptions {
    fn default() -> Self {
        FixOptions {
            verification_depth: DEFAULT_VERIFICATION_DEPTH,
            delta_step_cap: DEFAULT_DELTA_STEP_CAP,
            word_length_cap: None,
            max_chain_len: None,
            workers: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FixAnswer {
    Yes,
    No,
    Inconclusive,
}

impl std::fmt::Display for FixAnswer {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FixAnswer::Yes => "yes",
            FixAnswer::No => "no",
            FixAnswer::Inconclusive => "inconclusive",
        })
    }
}

/// The δ maps as inner automorphisms: δ₁ is `w ↦ b⁻¹wb`, δ₂ is `w ↦ bwb⁻¹`,
/// δ₃ is `w ↦ a⁻¹wa`, δ₄ is `w ↦ awa⁻¹`.
fn delta_for_letter(l: Letter) -> Named {
    match l {
        Letter::B => Named::Delta1,
        Letter::BInv => Named::Delta2,
        Letter::A => Named::Delta3,
        Letter::AInv => Named::Delta4,
    }
}

/// `w ↦ c⁻¹wc` as a sequence of δ maps in application order.
pub fn delta_composition(c: &Word) -> Vec<Named> {
    c.letters().iter().map(|&l| delta_for_letter(l)).collect()
}

/// The automorphism `w ↦ c⁻¹wc`.
fn inner(c: &Word) -> Automorphism {
    let ci = c.inverse();
    Automorphism::from_images_unchecked(
        ci.concat(&Word::letter(Letter::A)).concat(c),
        ci.concat(&Word::letter(Letter::B)).concat(c),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixWitness {
    pub w1_map: Automorphism,
    /// δ′ in application order.
    pub delta_composition: Vec<&'static str>,
    pub chain: Chain,
    /// The composite `β ∘ δ′ ∘ ψ′`.
    pub automorphism: Automorphism,
}

/// Why a search was cut short.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Truncation {
    /// Some δ′ solution lies beyond the δ cap but within the theoretical
    /// bound.
    DeltaStepCap,
    /// Applying δ′ produced a word longer than the word-length cap.
    WordLengthCap,
    /// The chain bound was lowered below `4|H| + 4`.
    ChainBound,
    /// H is trivial, so δ′ is unconstrained and only δ′ = 1 was tried.
    TrivialSubgroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixReport {
    pub answer: FixAnswer,
    pub witness: Option<FixWitness>,
    pub verification_depth: usize,
    pub escaped_fixed_word: Option<Word>,
    /// A word outside H some power of which lies in H. Every automorphism
    /// fixing H fixes such a word, so H cannot be a fixed-point group.
    pub root_certificate: bool,
    pub trivial_subgroup: bool,
    pub chains_examined: u64,
    pub candidates_examined: u64,
    pub truncations: Vec<Truncation>,
    pub max_chain_len: usize,
    pub effective_delta_step_cap: u64,
    pub word_length_cap: usize,
}

/// `(2^{4|H|+4} + 1)·|H|`, saturating.
pub fn theoretical_delta_bound(norm: usize) -> u64 {
    let exp = 4 * norm as u32 + 4;
    let pow = 1u64
        .checked_shl(exp)
        .filter(|_| exp < 64)
        .unwrap_or(u64::MAX);
    pow.saturating_add(1).saturating_mul(norm as u64)
}

/// A candidate `β ∘ δ′ ∘ ψ′` ordered by chain, then δ′ (length, then δ
/// index sequence), then β.
struct Candidate {
    chain: Chain,
    conjugator: Word,
    beta_index: usize,
}

fn delta_key(c: &Word) -> (usize, Vec<Named>) {
    (c.len(), delta_composition(c))
}

impl Candidate {
    fn automorphism(&self, betas: &[Automorphism]) -> Automorphism {
        betas[self.beta_index]
            .compose(&inner(&self.conjugator))
            .compose(&self.chain.to_automorphism())
    }
}

/// A shortlex-least word `w ∉ H` with `wⁿ ∈ H` for some `n ≥ 2`, of length
/// `≤ depth`.
fn root_escape(h: &Subgroup, words: &[Word]) -> Option<Word> {
    let bound = h.graph().vertex_count() + 1;
    words
        .iter()
        .find(|w| {
            !w.is_empty() && !h.contains(w) && (2..=bound as i64).any(|n| h.contains(&w.pow(n)))
        })
        .cloned()
}

/// Decides whether H is the fixed-point group of some automorphism.
pub fn fixed_point_group(h: &Subgroup, options: &FixOptions) -> FixReport {
    let norm = h.norm();
    let chain_bound = 4 * norm + 4;
    let max_len = options.max_chain_len.unwrap_or(chain_bound);
    let theory_bound = theoretical_delta_bound(norm);
    let delta_cap = options.delta_step_cap.min(theory_bound);
    let word_cap = options.word_length_cap.unwrap_or(4 * (norm + 4));
    let trivial = h.is_trivial();
    let words = reduced_words_up_to(options.verification_depth);

    let mut report = FixReport {
        answer: FixAnswer::Inconclusive,
        witness: None,
        verification_depth: options.verification_depth,
        escaped_fixed_word: None,
        root_certificate: false,
        trivial_subgroup: trivial,
        chains_examined: 0,
        candidates_examined: 0,
        truncations: Vec::new(),
        max_chain_len: max_len,
        effective_delta_step_cap: delta_cap,
        word_length_cap: word_cap,
    };

    if let Some(w) = root_escape(h, &words) {
        report.answer = FixAnswer::No;
        report.escaped_fixed_word = Some(w);
        report.root_certificate = true;
        return report;
    }

    let gens: Vec<Word> = h
        .generators()
        .iter()
        .filter(|g| !g.is_empty())
        .cloned()
        .collect();
    let betas = all_w1();
    let targets: Vec<Vec<Word>> = betas
        .iter()
        .map(|beta| {
            let inv = beta.inverse();
            gens.iter().map(|g| inv.apply(g)).collect()
        })
        .collect();
    let target_classes: Vec<Vec<CyclicWord>> = targets
        .iter()
        .map(|ys| ys.iter().map(Word::cyclic_word).collect())
        .collect();
    let inputs: Vec<CyclicWord> = gens.iter().map(Word::cyclic_word).collect();

    // Since δ′ is inner, ψ = β δ′ ψ′ can fix every generator only if ψ′
    // already sends each generator into the conjugacy class of its β⁻¹
    // target.
    let mut matches: Vec<(Chain, usize)> = fold_both(
        max_len,
        &inputs,
        options.workers,
        Vec::new,
        |found, v| {
            for (i, classes) in target_classes.iter().enumerate() {
                if v.images == classes.as_slice() {
                    found.push((v.chain(), i));
                }
            }
            true
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    matches.sort();
    report.chains_examined = chains_in_both_polarities(max_len);
    if max_len < chain_bound {
        report.truncations.push(Truncation::ChainBound);
    }
    if trivial {
        report.truncations.push(Truncation::TrivialSubgroup);
    }

    // Group by chain and expand each (chain, β) into its δ′ solutions.
    let mut survivors: Vec<Automorphism> = Vec::new();
    let mut i = 0;
    while i < matches.len() {
        let chain = matches[i].0.clone();
        let mut candidates = Vec::new();
        while i < matches.len() && matches[i].0 == chain {
            let beta_index = matches[i].1;
            i += 1;
            let xs: Vec<Word> = gens.iter().map(|g| chain.apply(g)).collect();
            let Some((base, period)) = conjugator_family(&xs, &targets[beta_index]) else {
                continue;
            };
            let conjugators = match (&period, trivial) {
                (_, true) => vec![Word::identity()],
                (None, false) => {
                    if base.len() as u64 > delta_cap && base.len() as u64 <= theory_bound {
                        push_unique(&mut report.truncations, Truncation::DeltaStepCap);
                    }
                    vec![base.clone()]
                }
                (Some(r), false) => {
                    // |base·rⁿ| ≥ |n| − |base|, so larger |n| exceed the cap.
                    let reach = delta_cap
                        .saturating_add(base.len() as u64)
                        .min(i64::MAX as u64) as i64;
                    let family: Vec<Word> =
                        (-reach..=reach).map(|n| base.concat(&r.pow(n))).collect();
                    if delta_cap < theory_bound {
                        push_unique(&mut report.truncations, Truncation::DeltaStepCap);
                    }
                    family
                }
            };
            for c in conjugators {
                if c.len() as u64 > delta_cap {
                    continue;
                }
                if exceeds_word_cap(&xs, &c, word_cap) {
                    push_unique(&mut report.truncations, Truncation::WordLengthCap);
                    continue;
                }
                candidates.push(Candidate {
                    chain: chain.clone(),
                    conjugator: c,
                    beta_index,
                });
            }
        }
        candidates.sort_by(|x, y| {
            delta_key(&x.conjugator)
                .cmp(&delta_key(&y.conjugator))
                .then(x.beta_index.cmp(&y.beta_index))
        });
        candidates.dedup_by(|x, y| x.conjugator == y.conjugator && x.beta_index == y.beta_index);

        for cand in candidates {
            report.candidates_examined += 1;
            let psi = cand.automorphism(&betas);
            debug_assert!(gens.iter().all(|g| psi.apply(g) == *g));
            let escaped = words.iter().find(|w| !h.contains(w) && psi.apply(w) == **w);
            match escaped {
                None => {
                    report.answer = FixAnswer::Yes;
                    report.witness = Some(FixWitness {
                        w1_map: betas[cand.beta_index].clone(),
                        delta_composition: delta_composition(&cand.conjugator)
                            .into_iter()
                            .map(Named::name)
                            .collect(),
                        chain: cand.chain,
                        automorphism: psi,
                    });
                    return report;
                }
                Some(_) => survivors.push(psi),
            }
        }
    }

    // Every candidate was refuted; with nothing cut short, no element of
    // the search space has H as its fixed-point group.
    if report.truncations.is_empty() {
        report.answer = FixAnswer::No;
        report.escaped_fixed_word = words
            .iter()
            .find(|w| !h.contains(w) && survivors.iter().all(|p| p.apply(w) == **w))
            .cloned();
    }
    report
}

fn push_unique(v: &mut Vec<Truncation>, t: Truncation) {
    if !v.contains(&t) {
        v.push(t);
    }
}

/// True if conjugating the tuple letter by letter along `c` ever produces
/// a word longer than `cap`.
fn exceeds_word_cap(xs: &[Word], c: &Word, cap: usize) -> bool {
    let mut cur: Vec<Word> = xs.to_vec();
    for &l in c.letters() {
        let lw = Word::letter(l);
        let li = lw.inverse();
        for x in &mut cur {
            *x = li.concat(x).concat(&lw);
            if x.len() > cap {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn h(s: &str) -> Subgroup {
        s.parse().unwrap()
    }

    #[test]
    fn positivity_examples() {
        let r = potentially_positive(&w("ab"));
        assert!(r.answer);
        let wit = r.witness.unwrap();
        assert!(wit.chain.is_empty());
        assert!(wit.w1_map.is_identity());
        assert_eq!(r.chains_examined, 1);

        let r = potentially_positive(&w("AB"));
        let wit = r.witness.unwrap();
        assert_eq!(wit.w1_map.to_string(), "a -> A; b -> B");

        let r = potentially_positive(&w("abAB"));
        assert!(!r.answer);
        assert!(r.complete);
        assert_eq!(r.chains_examined, chains_in_both_polarities(11));

        assert!(potentially_positive(&Word::identity()).answer);
    }

    #[test]
    fn positivity_witnesses_replay() {
        for u in reduced_words_up_to(3) {
            let r = potentially_positive(&u);
            if let Some(wit) = &r.witness {
                let img = wit
                    .w1_map
                    .apply_cyclic(&wit.chain.apply_cyclic(&u.cyclic_word()));
                assert_eq!(img, wit.positive_image);
                assert!(img.is_positive());
            }
        }
        let r = potentially_positive(&w("aB"));
        assert_eq!(r.witness.unwrap().w1_map.to_string(), "a -> a; b -> B");
    }

    #[test]
    fn canonical_rank_matches_order() {
        let mut all = vec![Chain::empty()];
        for len in 1..=3 {
            for pol in [Polarity::C1, Polarity::C2] {
                for bits in 0..(1u32 << len) {
                    let steps: Vec<Step> = (0..len)
                        .rev()
                        .map(|i| pol.steps()[((bits >> i) & 1) as usize])
                        .collect();
                    all.push(Chain::new(steps).unwrap());
                }
            }
        }
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        for (i, c) in all.iter().enumerate() {
            assert_eq!(canonical_rank(c), i as u64 + 1);
        }
    }

    #[test]
    fn bte_examples() {
        let r = bounded_translation_equivalent(&w("a"), &w("b")).unwrap();
        assert!(!r.answer);
        let f = r.failing_condition.unwrap();
        assert!(f.chain.is_empty());
        assert_eq!(f.step, Step::Sigma);
        assert_eq!(f.k, 2);
        assert_eq!(f.u_lengths, [3, 4]);
        assert_eq!(f.v_lengths, [1, 1]);

        let u = w("aab");
        let (lo, hi) = compute_delta_bounds(&u, &u.inverse()).unwrap();
        assert_eq!(
            (lo, hi),
            (
                ExactRational::from_integer(1),
                ExactRational::from_integer(1)
            )
        );

        assert!(matches!(
            bounded_translation_equivalent(&w("abA"), &Word::identity()),
            Err(Error::ZeroCyclicLength(_))
        ));
        assert!(matches!(
            compute_delta_bounds(&w("a"), &w("b")),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn bte_bounds_are_reciprocated_when_swapped() {
        let u = w("aabAB");
        let v = w("a");
        let fwd = bounded_translation_equivalent(&u, &v).unwrap();
        let back = bounded_translation_equivalent(&v, &u).unwrap();
        assert!(fwd.answer && back.answer);
        let (f, b) = (fwd.bounds.unwrap(), back.bounds.unwrap());
        assert_eq!(f.min, b.max.recip());
        assert_eq!(f.max, b.min.recip());
    }

    #[test]
    fn fixgroup_examples() {
        let opts = FixOptions::default();
        let r = fixed_point_group(&h("a,b"), &opts);
        assert_eq!(r.answer, FixAnswer::Yes);
        assert!(r.witness.unwrap().automorphism.is_identity());

        let r = fixed_point_group(&h("a"), &opts);
        assert_eq!(r.answer, FixAnswer::Yes);
        let wit = r.witness.unwrap();
        assert_eq!(wit.w1_map.to_string(), "a -> a; b -> B");
        assert!(wit.delta_composition.is_empty());
        assert!(wit.chain.is_empty());

        let r = fixed_point_group(&h("aa"), &opts);
        assert_eq!(r.answer, FixAnswer::No);
        assert_eq!(r.escaped_fixed_word, Some(w("a")));
    }

    #[test]
    fn theoretical_bound_saturates() {
        assert_eq!(theoretical_delta_bound(1), (256 + 1));
        assert_eq!(theoretical_delta_bound(2), (4096 + 1) * 2);
        assert_eq!(theoretical_delta_bound(40), u64::MAX);
    }

    #[test]
    fn inner_matches_delta_composition() {
        let c = w("aBBab");
        let composed = delta_composition(&c)
            .into_iter()
            .fold(Automorphism::identity(), |acc, d| {
                crate::autos::named(d).compose(&acc)
            });
        assert_eq!(composed, inner(&c));
    }
}
