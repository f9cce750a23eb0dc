//! Helpers shared by the integration tests: random inputs and the
//! length-regime checks for chains of elementary steps.

#![allow(dead_code)]

use freeaut::autos::predicted_length_delta;
use freeaut::words::{detect_cancellation, Letter};
use freeaut::{Chain, CyclicWord, Step, Word};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

pub const LETTERS: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

pub fn w(s: &str) -> Word {
    s.parse().unwrap()
}

/// A uniformly random freely reduced word of exactly `len` letters.
pub fn random_word<R: Rng>(rng: &mut R, len: usize) -> Word {
    let mut letters: Vec<Letter> = Vec::with_capacity(len);
    while letters.len() < len {
        let l = *LETTERS.choose(rng).unwrap();
        if letters.last().map_or(true, |p| p.inverse() != l) {
            letters.push(l);
        }
    }
    Word::free_reduce(letters)
}

/// A random word whose cyclic length lies in `1..=max_len`.
pub fn random_nontrivial_cyclic<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    loop {
        let len = rng.gen_range(1..=max_len);
        let u = random_word(rng, len);
        if u.cyclic_length() > 0 {
            return u;
        }
    }
}

/// Strategy for freely reduced words of length at most `max_len`.
pub fn word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(LETTERS.to_vec()), 0..=max_len * 2).prop_map(
        move |ls| {
            let w = Word::free_reduce(ls);
            let keep = w.len().min(max_len);
            Word::free_reduce(w.letters()[..keep].iter().copied())
        },
    )
}

/// Strategy for words with nonzero cyclic length.
pub fn nontrivial_word_strategy(max_len: usize) -> impl Strategy<Value = Word> {
    word_strategy(max_len).prop_filter("nonzero cyclic length", |w| w.cyclic_length() > 0)
}

pub fn step_strategy() -> impl Strategy<Value = Step> {
    prop::sample::select(Step::ALL.to_vec())
}

/// Strategy for chains of either polarity with at most `max_len` steps.
pub fn chain_strategy(max_len: usize) -> impl Strategy<Value = Chain> {
    (
        any::<bool>(),
        prop::collection::vec(any::<bool>(), 0..=max_len),
    )
        .prop_map(|(c2, bits)| {
            let [s, t] = if c2 {
                [Step::SigmaInv, Step::TauInv]
            } else {
                [Step::Sigma, Step::Tau]
            };
            Chain::new(bits.into_iter().map(|b| if b { t } else { s }).collect()).unwrap()
        })
}

/// The other step of the same polarity.
pub fn partner(x: Step) -> Step {
    match x {
        Step::Sigma => Step::Tau,
        Step::Tau => Step::Sigma,
        Step::SigmaInv => Step::TauInv,
        Step::TauInv => Step::SigmaInv,
    }
}

/// A random chain of `len` steps over `{x, partner(x)}` in which `x`
/// occurs at least `min_x` times.
pub fn random_chain_with<R: Rng>(rng: &mut R, x: Step, min_x: usize, len: usize) -> Vec<Step> {
    assert!(min_x <= len);
    let y = partner(x);
    let mut steps = vec![x; min_x];
    steps.extend((min_x..len).map(|_| if rng.gen_bool(0.5) { x } else { y }));
    steps.shuffle(rng);
    steps
}

/// `[ψ(u)]` for the chain whose steps are applied in the given order.
pub fn image(steps: &[Step], u: &CyclicWord) -> CyclicWord {
    steps.iter().fold(u.clone(), |w, s| s.apply_cyclic(&w))
}

/// `‖f(w)‖ − ‖w‖` for a single step `f`.
pub fn growth(step: Step, w: &CyclicWord) -> i64 {
    step.apply_cyclic(w).len() as i64 - w.len() as i64
}

/// Which length-regime property an instance exercised.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    /// Enough factors of `x`: the counting formula predicts the growth
    /// under `x` and no proper cancellation occurs.
    NoProperCancellation,
    /// Enough factors of `x`: both steps of the polarity never shorten.
    NonNegativeGrowth,
    /// `ψ = y^m x ψ₁`: the growth under `x` and `y` satisfies the linear
    /// recurrence in `m`.
    Recurrence,
    /// Enough factors of `x`: zero growth under `x` persists for all powers.
    Stabilization,
}

pub const REGIMES: [Regime; 4] = [
    Regime::NoProperCancellation,
    Regime::NonNegativeGrowth,
    Regime::Recurrence,
    Regime::Stabilization,
];

#[derive(Debug, Clone)]
pub struct Instance {
    pub regime: Regime,
    pub u: Word,
    /// The distinguished step `x`.
    pub x: Step,
    /// Steps in application order.
    pub steps: Vec<Step>,
    /// For the recurrence: `ψ₁` is `steps[..split]`, followed by `x` and
    /// then `m` copies of the partner step.
    pub split: usize,
}

/// Draws an instance with `‖u‖ ≤ max_norm` and at most `2‖u‖ + 5` steps.
pub fn random_instance<R: Rng>(rng: &mut R, regime: Regime, max_norm: usize) -> Instance {
    let u = random_nontrivial_cyclic(rng, max_norm);
    let n = u.cyclic_length();
    let max_len = 2 * n + 5;
    let x = *Step::ALL.choose(rng).unwrap();
    let (steps, split) = match regime {
        Regime::NoProperCancellation | Regime::NonNegativeGrowth => {
            let len = rng.gen_range(n..=max_len);
            (random_chain_with(rng, x, n, len), 0)
        }
        Regime::Stabilization => {
            let len = rng.gen_range(n + 1..=max_len);
            (random_chain_with(rng, x, n + 1, len), 0)
        }
        Regime::Recurrence => {
            let m = rng.gen_range(0..=n + 2);
            let len1 = rng.gen_range(n + 2..=max_len - 1 - m);
            let mut steps = random_chain_with(rng, x, n + 2, len1);
            steps.push(x);
            steps.extend(std::iter::repeat(partner(x)).take(m));
            (steps, len1)
        }
    };
    Instance {
        regime,
        u,
        x,
        steps,
        split,
    }
}

impl Instance {
    pub fn chain(&self) -> Chain {
        Chain::new(self.steps.clone()).unwrap()
    }

    /// `Ok(())` when the property holds, otherwise a description of the
    /// violation.
    pub fn check(&self) -> Result<(), String> {
        let u = self.u.cyclic_word();
        let x = self.x;
        let y = partner(x);
        let psi_u = image(&self.steps, &u);
        let fail = |what: String| Err(format!("{what} (u = {}, chain = {})", self.u, self.chain()));
        match self.regime {
            Regime::NoProperCancellation => {
                let actual = growth(x, &psi_u);
                let predicted = predicted_length_delta(&psi_u, x);
                if actual != predicted {
                    return fail(format!("{x:?}: predicted {predicted}, actual {actual}"));
                }
                let (moved, mult) = x.moved_and_multiplier();
                let c = detect_cancellation(&psi_u, moved.generator(), mult);
                if c.proper != 0 {
                    return fail(format!("{x:?}: {} proper cancellations", c.proper));
                }
            }
            Regime::NonNegativeGrowth => {
                for s in [x, y] {
                    let g = growth(s, &psi_u);
                    if g < 0 {
                        return fail(format!("{s:?} shortens by {}", -g));
                    }
                }
            }
            Regime::Recurrence => {
                let psi1 = &self.steps[..self.split];
                let m = (self.steps.len() - self.split - 1) as i64;
                let psi1_u = image(psi1, &u);
                let ym_psi1_u = image(&vec![y; m as usize], &psi1_u);
                let base_x = growth(x, &psi1_u);
                let lhs_x = growth(x, &psi_u);
                let rhs_x = growth(x, &ym_psi1_u) + m * base_x;
                if lhs_x != rhs_x {
                    return fail(format!("{x:?} recurrence: {lhs_x} != {rhs_x}"));
                }
                let lhs_y = growth(y, &psi_u);
                let rhs_y = growth(y, &ym_psi1_u) + base_x;
                if lhs_y != rhs_y {
                    return fail(format!("{y:?} recurrence: {lhs_y} != {rhs_y}"));
                }
            }
            Regime::Stabilization => {
                let n = u.len();
                let mut w = psi_u;
                let mut flat = Vec::with_capacity(n + 3);
                for _ in 0..=n + 2 {
                    let next = x.apply_cyclic(&w);
                    flat.push(next.len() == w.len());
                    w = next;
                }
                if flat[0] && !flat.iter().all(|f| *f) {
                    return fail(format!("{x:?}: zero growth does not persist: {flat:?}"));
                }
                if !flat[0] && flat.iter().any(|f| *f) {
                    return fail(format!(
                        "{x:?}: later zero growth without initial: {flat:?}"
                    ));
                }
            }
        }
        Ok(())
    }
}
