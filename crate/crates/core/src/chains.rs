//! Chains of σ/τ steps and their bounded enumeration.
//!
//! A chain of polarity C1 is a word over `{σ, τ}`; one of polarity C2 is a
//! word over `{σ⁻¹, τ⁻¹}`. Steps are stored in application order: `steps[0]`
//! acts first, so the chain `[σ, τ]` is the automorphism `τ ∘ σ`.
//!
//! Enumeration is a depth-first traversal with an explicit stack. Each node
//! derives its images from its parent's with one step application per
//! input, so at most `max_len + 1` image sets are alive at any time.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::autos::{named, Automorphism, Named};
use crate::error::{Error, ParseError, Result};
use crate::words::{cyclic_core, push_reduced, CyclicWord, Generator, Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    C1,
    C2,
}

impl Polarity {
    /// The two steps of this polarity, σ-type first.
    pub fn steps(self) -> [Step; 2] {
        match self {
            Polarity::C1 => [Step::Sigma, Step::Tau],
            Polarity::C2 => [Step::SigmaInv, Step::TauInv],
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::C1 => "C1",
            Polarity::C2 => "C2",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Sigma,
    Tau,
    SigmaInv,
    TauInv,
}

impl Step {
    pub const ALL: [Step; 4] = [Step::Sigma, Step::Tau, Step::SigmaInv, Step::TauInv];

    pub fn polarity(self) -> Polarity {
        match self {
            Step::Sigma | Step::Tau => Polarity::C1,
            Step::SigmaInv | Step::TauInv => Polarity::C2,
        }
    }

    /// `(x, y)` such that the step sends `x ↦ xy` and fixes the other
    /// generator.
    pub fn moved_and_multiplier(self) -> (Letter, Letter) {
        match self {
            Step::Sigma => (Letter::A, Letter::B),
            Step::SigmaInv => (Letter::A, Letter::BInv),
            Step::Tau => (Letter::B, Letter::A),
            Step::TauInv => (Letter::B, Letter::AInv),
        }
    }

    pub fn automorphism(self) -> Automorphism {
        named(match self {
            Step::Sigma => Named::Sigma,
            Step::Tau => Named::Tau,
            Step::SigmaInv => Named::SigmaInv,
            Step::TauInv => Named::TauInv,
        })
    }

    pub fn to_char(self) -> char {
        match self {
            Step::Sigma => 's',
            Step::Tau => 't',
            Step::SigmaInv => 'S',
            Step::TauInv => 'T',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            's' => Some(Step::Sigma),
            't' => Some(Step::Tau),
            'S' => Some(Step::SigmaInv),
            'T' => Some(Step::TauInv),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Step::Sigma => "sigma",
            Step::Tau => "tau",
            Step::SigmaInv => "sigma_inv",
            Step::TauInv => "tau_inv",
        }
    }

    /// Applies the step to a freely reduced letter sequence, appending the
    /// reduced image to `out`.
    #[inline]
    pub(crate) fn apply_into(self, letters: &[Letter], out: &mut Vec<Letter>) {
        let (x, y) = self.moved_and_multiplier();
        let (xi, yi) = (x.inverse(), y.inverse());
        for &l in letters {
            if l == x {
                push_reduced(out, x);
                push_reduced(out, y);
            } else if l == xi {
                push_reduced(out, yi);
                push_reduced(out, xi);
            } else {
                push_reduced(out, l);
            }
        }
    }

    /// Image of a conjugacy class under the step.
    pub fn apply_cyclic(self, w: &CyclicWord) -> CyclicWord {
        let mut buf = Vec::with_capacity(w.len() + w.len() / 2 + 1);
        self.apply_into(w.letters(), &mut buf);
        CyclicWord::from_cyclically_reduced(cyclic_core(&buf).to_vec())
    }
}

impl Serialize for Step {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    polarity: Polarity,
    steps: Vec<Step>,
}

impl Chain {
    pub fn empty() -> Chain {
        Chain {
            polarity: Polarity::C1,
            steps: Vec::new(),
        }
    }

    /// Steps must all belong to one polarity. The empty chain is tagged C1.
    pub fn new(steps: Vec<Step>) -> Result<Chain, ParseError> {
        let polarity = steps.first().map_or(Polarity::C1, |s| s.polarity());
        if steps.iter().any(|s| s.polarity() != polarity) {
            return Err(ParseError::MixedPolarity);
        }
        Ok(Chain { polarity, steps })
    }

    pub(crate) fn from_parts(polarity: Polarity, steps: &[Step]) -> Chain {
        debug_assert!(steps.iter().all(|s| s.polarity() == polarity));
        Chain {
            polarity: if steps.is_empty() {
                Polarity::C1
            } else {
                polarity
            },
            steps: steps.to_vec(),
        }
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// The length |ψ|: the number of σ/τ factors.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of factors equal to `step`.
    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// Exponent runs in application order, e.g. `ssts` is
    /// `[(σ, 2), (τ, 1), (σ, 1)]`, i.e. `σ τ σ²`.
    pub fn runs(&self) -> Vec<(Step, usize)> {
        let mut out: Vec<(Step, usize)> = Vec::new();
        for &s in &self.steps {
            match out.last_mut() {
                Some((last, n)) if *last == s => *n += 1,
                _ => out.push((s, 1)),
            }
        }
        out
    }

    /// The chain as an automorphism, composed right to left.
    pub fn to_automorphism(&self) -> Automorphism {
        self.steps.iter().fold(Automorphism::identity(), |acc, s| {
            s.automorphism().compose(&acc)
        })
    }

    pub fn apply(&self, w: &Word) -> Word {
        apply_chain(self, w)
    }

    pub fn apply_cyclic(&self, w: &CyclicWord) -> CyclicWord {
        self.steps
            .iter()
            .fold(w.clone(), |acc, s| s.apply_cyclic(&acc))
    }

    fn order_key(&self) -> (usize, Polarity, &[Step]) {
        (self.steps.len(), self.polarity, &self.steps)
    }
}

/// Canonical order: length, then polarity (C1 first), then lexicographic
/// with σ before τ.
impl Ord for Chain {
    fn cmp(&self, other: &Chain) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Chain {
    fn partial_cmp(&self, other: &Chain) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for Chain {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Chain, ParseError> {
        let steps = s
            .trim()
            .chars()
            .enumerate()
            .map(|(position, character)| {
                Step::from_char(character).ok_or(ParseError::InvalidStep {
                    position,
                    character,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Chain::new(steps)
    }
}

#[derive(Serialize, Deserialize)]
struct ChainRepr {
    polarity: Polarity,
    steps: String,
}

impl Serialize for Chain {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ChainRepr {
            polarity: self.polarity,
            steps: self.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Chain {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ChainRepr::deserialize(d)?;
        let chain: Chain = repr.steps.parse().map_err(serde::de::Error::custom)?;
        if !chain.is_empty() && chain.polarity != repr.polarity {
            return Err(serde::de::Error::custom("polarity does not match steps"));
        }
        Ok(chain)
    }
}

/// Applies the chain to a word, first step first.
pub fn apply_chain(c: &Chain, w: &Word) -> Word {
    let mut cur = w.letters().to_vec();
    let mut next = Vec::with_capacity(cur.len() * 2);
    for s in &c.steps {
        next.clear();
        s.apply_into(&cur, &mut next);
        std::mem::swap(&mut cur, &mut next);
    }
    Word::from_reduced_unchecked(cur)
}

/// `[w, step(w), …, step^count(w)]`.
pub fn chain_powers(w: &CyclicWord, step: Step, count: usize) -> Vec<CyclicWord> {
    let mut out = Vec::with_capacity(count + 1);
    out.push(w.clone());
    for i in 0..count {
        let next = step.apply_cyclic(&out[i]);
        out.push(next);
    }
    out
}

/// `‖step^k(w)‖` without building the image.
///
/// For a step `x ↦ xy^s` (`s = ±1`), `step^k` sends `x ↦ x y^{sk}`. Split the
/// cyclic word at its `x`-letters; every gap between consecutive `x`-letters
/// is a syllable `y^e`, whose exponent becomes `e + sk·([left = x] − [right =
/// x⁻¹])`. The `x`-letters themselves never cancel, so the new length is the
/// number of `x`-letters plus the sum of the new syllable lengths.
pub fn step_power_length(w: &CyclicWord, step: Step, k: u64) -> u64 {
    let (x, y) = step.moved_and_multiplier();
    let shift = y.sign() * k as i64;
    let letters = w.letters();
    let Some(first) = letters.iter().position(|l| l.generator() == x.generator()) else {
        return letters.len() as u64;
    };
    let n = letters.len();
    let yg: Generator = y.generator();
    let mut total: u64 = 0;
    let mut left = letters[first];
    let mut e: i64 = 0;
    for off in 1..=n {
        let l = letters[(first + off) % n];
        if l.generator() == yg {
            e += if l.is_positive() { 1 } else { -1 };
            continue;
        }
        let delta = i64::from(left == x) - i64::from(l == x.inverse());
        total += 1 + (e + shift * delta).unsigned_abs();
        left = l;
        e = 0;
    }
    total
}

/// What a visitor wants the traversal to do after seeing a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Control {
    Continue,
    /// Skip the subtree below this node.
    Prune,
    /// Abandon the whole traversal.
    Stop,
}

/// A node of the traversal: a chain and the images of every input under it.
#[derive(Debug)]
pub struct ChainVisit<'a> {
    pub polarity: Polarity,
    pub steps: &'a [Step],
    /// `images[i]` is the image of `inputs[i]`.
    pub images: &'a [CyclicWord],
}

impl ChainVisit<'_> {
    pub fn depth(&self) -> usize {
        self.steps.len()
    }

    pub fn chain(&self) -> Chain {
        Chain::from_parts(self.polarity, self.steps)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct TraversalSummary {
    pub visited: u64,
    pub stopped: bool,
    /// Largest number of image sets held at once.
    pub peak_image_sets: usize,
}

impl TraversalSummary {
    fn absorb(&mut self, other: TraversalSummary) {
        self.visited += other.visited;
        self.stopped |= other.stopped;
        self.peak_image_sets = self.peak_image_sets.max(other.peak_image_sets);
    }
}

/// Bounded enumeration of all chains of one polarity.
#[derive(Debug, Clone, Copy)]
pub struct Enumerator {
    polarity: Polarity,
    max_len: usize,
    image_length_cap: Option<usize>,
}

impl Enumerator {
    pub fn new(polarity: Polarity, max_len: usize) -> Enumerator {
        Enumerator {
            polarity,
            max_len,
            image_length_cap: None,
        }
    }

    /// Abort with [`Error::ImageTooLong`] when an image exceeds `cap`
    /// letters.
    pub fn with_image_length_cap(mut self, cap: Option<usize>) -> Enumerator {
        self.image_length_cap = cap;
        self
    }

    /// Visits every chain of length `≤ max_len` once, in depth-first
    /// pre-order: a chain before its extensions, σ-type extensions before
    /// τ-type ones. Among chains of equal length this is lexicographic order.
    pub fn run<F>(&self, inputs: &[CyclicWord], mut visitor: F) -> Result<TraversalSummary>
    where
        F: FnMut(&ChainVisit<'_>) -> Control,
    {
        let mut steps = Vec::with_capacity(self.max_len);
        self.traverse(&mut steps, inputs.to_vec(), &mut visitor)
    }

    /// Depth-first traversal of the subtree rooted at `steps`, whose images
    /// are `root_images`. `steps` is restored on return.
    fn traverse<F>(
        &self,
        steps: &mut Vec<Step>,
        root_images: Vec<CyclicWord>,
        visitor: &mut F,
    ) -> Result<TraversalSummary>
    where
        F: FnMut(&ChainVisit<'_>) -> Control,
    {
        struct Frame {
            images: Vec<CyclicWord>,
            next_child: usize,
        }

        let base_depth = steps.len();
        let alphabet = self.polarity.steps();
        let mut summary = TraversalSummary {
            visited: 1,
            stopped: false,
            peak_image_sets: 1,
        };
        let control = visitor(&ChainVisit {
            polarity: self.polarity,
            steps,
            images: &root_images,
        });
        match control {
            Control::Stop => {
                summary.stopped = true;
                return Ok(summary);
            }
            Control::Prune => return Ok(summary),
            Control::Continue if base_depth >= self.max_len => return Ok(summary),
            Control::Continue => {}
        }

        let mut stack = vec![Frame {
            images: root_images,
            next_child: 0,
        }];
        let mut scratch = Vec::new();
        while let Some(top) = stack.last_mut() {
            if top.next_child == alphabet.len() {
                stack.pop();
                if !stack.is_empty() {
                    steps.pop();
                }
                continue;
            }
            let step = alphabet[top.next_child];
            top.next_child += 1;

            let mut images = Vec::with_capacity(top.images.len());
            for img in &top.images {
                scratch.clear();
                step.apply_into(img.letters(), &mut scratch);
                let core = cyclic_core(&scratch);
                if let Some(cap) = self.image_length_cap {
                    if core.len() > cap {
                        steps.truncate(base_depth);
                        return Err(Error::ImageTooLong {
                            length: core.len(),
                            cap,
                        });
                    }
                }
                images.push(CyclicWord::from_cyclically_reduced(core.to_vec()));
            }
            steps.push(step);
            summary.visited += 1;
            summary.peak_image_sets = summary.peak_image_sets.max(stack.len() + 1);
            let control = visitor(&ChainVisit {
                polarity: self.polarity,
                steps,
                images: &images,
            });
            match control {
                Control::Stop => {
                    summary.stopped = true;
                    steps.truncate(base_depth);
                    return Ok(summary);
                }
                Control::Continue if steps.len() < self.max_len => {
                    stack.push(Frame {
                        images,
                        next_child: 0,
                    });
                }
                _ => {
                    steps.pop();
                }
            }
        }
        debug_assert_eq!(steps.len(), base_depth);
        Ok(summary)
    }

    /// Folds over every chain, optionally splitting the tree across
    /// `workers` threads. Subtrees are folded independently from `init()`
    /// and merged in canonical (pre-order) sequence, so the result does not
    /// depend on the worker count. Returning `false` from `visit` prunes the
    /// node's subtree.
    pub fn fold<A, I, V, M>(
        &self,
        inputs: &[CyclicWord],
        workers: usize,
        init: I,
        visit: V,
        merge: M,
    ) -> Result<(A, TraversalSummary)>
    where
        A: Send,
        I: Fn() -> A + Sync,
        V: Fn(&mut A, &ChainVisit<'_>) -> bool + Sync,
        M: Fn(A, A) -> A,
    {
        let mut steps = Vec::with_capacity(self.max_len);
        if workers <= 1 || self.max_len == 0 {
            let mut acc = init();
            let summary = self.traverse(&mut steps, inputs.to_vec(), &mut |v| {
                if visit(&mut acc, v) {
                    Control::Continue
                } else {
                    Control::Prune
                }
            })?;
            return Ok((acc, summary));
        }

        // Visit the shallow levels here and hand each node at `split` depth
        // to the pool as the root of an independent subtree.
        let mut split = 0;
        while (1usize << split) < 4 * workers && split < self.max_len {
            split += 1;
        }
        let shallow = Enumerator {
            max_len: split,
            ..*self
        };
        // Shallow nodes become single-node parts; nodes at the split depth
        // become subtree parts. Parts are kept in pre-order and merged in
        // that order, so the result matches the sequential fold exactly.
        enum Part<A> {
            Node(A),
            Subtree(Vec<Step>, Vec<CyclicWord>),
        }
        let mut parts: Vec<Part<A>> = Vec::new();
        let mut summary = shallow.traverse(&mut steps, inputs.to_vec(), &mut |v| {
            if v.depth() == split {
                parts.push(Part::Subtree(v.steps.to_vec(), v.images.to_vec()));
                return Control::Prune;
            }
            let mut acc = init();
            let go_on = visit(&mut acc, v);
            parts.push(Part::Node(acc));
            if go_on {
                Control::Continue
            } else {
                Control::Prune
            }
        })?;
        summary.visited -= parts
            .iter()
            .filter(|p| matches!(p, Part::Subtree(..)))
            .count() as u64;

        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::Contract(format!("thread pool: {e}")))?;
        let results: Vec<Result<(A, TraversalSummary)>> = pool.install(|| {
            parts
                .into_par_iter()
                .map(|part| match part {
                    Part::Node(a) => Ok((a, TraversalSummary::default())),
                    Part::Subtree(mut prefix, images) => {
                        let mut local = init();
                        let s = self.traverse(&mut prefix, images, &mut |v| {
                            if visit(&mut local, v) {
                                Control::Continue
                            } else {
                                Control::Prune
                            }
                        })?;
                        Ok((local, s))
                    }
                })
                .collect()
        });
        let mut acc = init();
        for part in results {
            let (local, s) = part?;
            acc = merge(acc, local);
            summary.absorb(s);
        }
        Ok((acc, summary))
    }
}

/// Convenience wrapper around [`Enumerator::run`].
pub fn enumerate<F>(
    polarity: Polarity,
    max_len: usize,
    inputs: &[CyclicWord],
    visitor: F,
) -> Result<TraversalSummary>
where
    F: FnMut(&ChainVisit<'_>) -> Control,
{
    Enumerator::new(polarity, max_len).run(inputs, visitor)
}

/// Number of chains of one polarity with length at most `max_len`.
pub fn chain_count(max_len: usize) -> u64 {
    (1u64 << (max_len + 1)) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn enumerate_small_tree() {
        let mut seen = Vec::new();
        let summary = enumerate(Polarity::C1, 2, &[cw("a")], |v| {
            seen.push(v.chain().to_string());
            Control::Continue
        })
        .unwrap();
        assert_eq!(summary.visited, 7);
        assert_eq!(seen, ["", "s", "ss", "st", "t", "ts", "tt"]);
    }

    #[test]
    fn enumerate_images_and_stop() {
        let mut image = None;
        enumerate(Polarity::C1, 2, &[cw("a")], |v| {
            if v.chain().to_string() == "st" {
                image = Some(v.images[0].clone());
                return Control::Stop;
            }
            Control::Continue
        })
        .unwrap();
        assert_eq!(image.unwrap().to_string(), "aab");

        let summary = enumerate(Polarity::C2, 5, &[cw("ab")], |_| Control::Stop).unwrap();
        assert_eq!(summary.visited, 1);
        assert!(summary.stopped);
    }

    #[test]
    fn pruning_skips_subtrees() {
        let summary = enumerate(Polarity::C1, 3, &[cw("a")], |v| {
            if v.steps.first() == Some(&Step::Sigma) {
                Control::Prune
            } else {
                Control::Continue
            }
        })
        .unwrap();
        // root, s (pruned), and the full τ subtree of 7 nodes
        assert_eq!(summary.visited, 9);
    }

    #[test]
    fn apply_chain_examples() {
        let ss: Chain = "ss".parse().unwrap();
        assert_eq!(apply_chain(&ss, &w("a")), w("abb"));
        assert_eq!(apply_chain(&Chain::empty(), &w("aBBa")), w("aBBa"));
        let s_inv: Chain = "S".parse().unwrap();
        assert_eq!(apply_chain(&s_inv, &w("a")), w("aB"));
        let st: Chain = "st".parse().unwrap();
        assert_eq!(st.to_automorphism().apply(&w("a")), w("aba"));
    }

    #[test]
    fn chain_powers_examples() {
        let lens: Vec<usize> = chain_powers(&cw("a"), Step::Sigma, 3)
            .iter()
            .map(CyclicWord::len)
            .collect();
        assert_eq!(lens, [1, 2, 3, 4]);
        assert!(chain_powers(&cw("b"), Step::Sigma, 3)
            .iter()
            .all(|x| *x == cw("b")));
        assert_eq!(chain_powers(&cw("abAB"), Step::TauInv, 0), vec![cw("abAB")]);
    }

    #[test]
    fn power_length_matches_iteration_exhaustively() {
        for word in crate::words::reduced_words_up_to(6) {
            let c = word.cyclic_word();
            for step in Step::ALL {
                let powers = chain_powers(&c, step, 6);
                for (k, p) in powers.iter().enumerate() {
                    assert_eq!(
                        step_power_length(&c, step, k as u64),
                        p.len() as u64,
                        "{c} {step:?} {k}"
                    );
                }
            }
        }
    }

    #[test]
    fn chain_parsing_and_order() {
        assert!("sT".parse::<Chain>().is_err());
        assert!("sx".parse::<Chain>().is_err());
        let e: Chain = "".parse().unwrap();
        assert_eq!(e.polarity(), Polarity::C1);
        let mut v: Vec<Chain> = ["tt", "S", "s", "", "st", "SS"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        v.sort();
        let r: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        assert_eq!(r, ["", "s", "S", "st", "tt", "SS"]);
        let c: Chain = "sstsss".parse().unwrap();
        assert_eq!(
            c.runs(),
            vec![(Step::Sigma, 2), (Step::Tau, 1), (Step::Sigma, 3)]
        );
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"polarity":"C1","steps":"sstsss"}"#);
        assert_eq!(serde_json::from_str::<Chain>(&json).unwrap(), c);
    }

    #[test]
    fn image_cap_is_a_resource_error() {
        let err = Enumerator::new(Polarity::C1, 10)
            .with_image_length_cap(Some(6))
            .run(&[cw("ab")], |_| Control::Continue)
            .unwrap_err();
        assert!(matches!(err, Error::ImageTooLong { cap: 6, .. }));
    }

    #[test]
    fn stack_holds_at_most_depth_plus_one_image_sets() {
        for max_len in 0..8 {
            let s = enumerate(Polarity::C2, max_len, &[cw("abAAb"), cw("b")], |_| {
                Control::Continue
            })
            .unwrap();
            assert_eq!(s.visited, chain_count(max_len));
            assert!(s.peak_image_sets <= max_len + 1);
            assert_eq!(s.peak_image_sets, max_len + 1);
        }
    }

    #[test]
    fn fold_is_independent_of_workers() {
        let inputs = [cw("aabAB"), cw("ab")];
        let collect = |workers| {
            Enumerator::new(Polarity::C1, 9)
                .fold(
                    &inputs,
                    workers,
                    Vec::new,
                    |acc: &mut Vec<(String, usize)>, v| {
                        acc.push((v.chain().to_string(), v.images[0].len()));
                        v.images[1].len() < 40
                    },
                    |mut a, b| {
                        a.extend(b);
                        a
                    },
                )
                .unwrap()
        };
        let (seq, s1) = collect(1);
        for workers in [2, 3, 4, 8] {
            let (par, s) = collect(workers);
            assert_eq!(seq, par);
            assert_eq!(s1.visited, s.visited);
        }
    }
}
