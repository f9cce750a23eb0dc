//! Automorphisms of F₂, stored extensionally as the images of `a` and `b`.
//!
//! Composition follows function notation: `f.compose(&g)` is `f ∘ g`, so
//! `g` acts first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chains::Step;
use crate::error::{Error, ParseError, Result};
use crate::words::{push_reduced, CyclicWord, Generator, Letter, LetterSet, Word};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    image_a: Word,
    image_b: Word,
}

/// The fixed maps used throughout: σ, τ, δ₁..δ₄, π and a few inverses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Named {
    /// `a ↦ ab`
    Sigma,
    /// `b ↦ ba`
    Tau,
    /// `a ↦ b⁻¹ab`
    Delta1,
    /// `a ↦ bab⁻¹`
    Delta2,
    /// `b ↦ a⁻¹ba`
    Delta3,
    /// `b ↦ aba⁻¹`
    Delta4,
    /// `a ↦ b, b ↦ a⁻¹`
    Pi,
    SigmaInv,
    TauInv,
    PiInv,
}

impl Named {
    pub const ALL: [Named; 10] = [
        Named::Sigma,
        Named::Tau,
        Named::Delta1,
        Named::Delta2,
        Named::Delta3,
        Named::Delta4,
        Named::Pi,
        Named::SigmaInv,
        Named::TauInv,
        Named::PiInv,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Named::Sigma => "sigma",
            Named::Tau => "tau",
            Named::Delta1 => "delta1",
            Named::Delta2 => "delta2",
            Named::Delta3 => "delta3",
            Named::Delta4 => "delta4",
            Named::Pi => "pi",
            Named::SigmaInv => "sigma_inv",
            Named::TauInv => "tau_inv",
            Named::PiInv => "pi_inv",
        }
    }
}

impl FromStr for Named {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Named, ParseError> {
        Named::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| ParseError::UnknownName(s.to_string()))
    }
}

fn word(s: &str) -> Word {
    s.parse().expect("static word literal")
}

/// The automorphism registered under `name`.
pub fn named(name: Named) -> Automorphism {
    let (a, b) = match name {
        Named::Sigma => ("ab", "b"),
        Named::Tau => ("a", "ba"),
        Named::Delta1 => ("Bab", "b"),
        Named::Delta2 => ("baB", "b"),
        Named::Delta3 => ("a", "Aba"),
        Named::Delta4 => ("a", "abA"),
        Named::Pi => ("b", "A"),
        Named::SigmaInv => ("aB", "b"),
        Named::TauInv => ("a", "bA"),
        Named::PiInv => ("B", "a"),
    };
    Automorphism {
        image_a: word(a),
        image_b: word(b),
    }
}

impl Automorphism {
    pub fn identity() -> Automorphism {
        Automorphism {
            image_a: Word::letter(Letter::A),
            image_b: Word::letter(Letter::B),
        }
    }

    /// Builds the map `a ↦ image_a, b ↦ image_b`, rejecting pairs that are
    /// not a basis of F₂.
    pub fn from_images(image_a: Word, image_b: Word) -> Result<Automorphism> {
        nielsen_inverse(&image_a, &image_b)?;
        Ok(Automorphism { image_a, image_b })
    }

    /// Skips the basis check. Callers guarantee the images come from a
    /// composition of automorphisms.
    pub(crate) fn from_images_unchecked(image_a: Word, image_b: Word) -> Automorphism {
        Automorphism { image_a, image_b }
    }

    pub fn image_a(&self) -> &Word {
        &self.image_a
    }

    pub fn image_b(&self) -> &Word {
        &self.image_b
    }

    pub fn image_of(&self, g: Generator) -> &Word {
        match g {
            Generator::A => &self.image_a,
            Generator::B => &self.image_b,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == Automorphism::identity()
    }

    /// Appends the image of `letters` to an already reduced buffer.
    pub(crate) fn apply_into(&self, letters: &[Letter], buf: &mut Vec<Letter>) {
        for &l in letters {
            let img = self.image_of(l.generator()).letters();
            if l.is_positive() {
                for &x in img {
                    push_reduced(buf, x);
                }
            } else {
                for &x in img.iter().rev() {
                    push_reduced(buf, x.inverse());
                }
            }
        }
    }

    pub fn apply(&self, w: &Word) -> Word {
        let mut buf = Vec::with_capacity(w.len() * 2);
        self.apply_into(w.letters(), &mut buf);
        Word::from_reduced_unchecked(buf)
    }

    /// Image of a conjugacy class.
    pub fn apply_cyclic(&self, w: &CyclicWord) -> CyclicWord {
        let mut buf = Vec::with_capacity(w.len() * 2);
        self.apply_into(w.letters(), &mut buf);
        let core = crate::words::cyclic_core(&buf).to_vec();
        CyclicWord::from_cyclically_reduced(core)
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &Automorphism) -> Automorphism {
        Automorphism {
            image_a: self.apply(&g.image_a),
            image_b: self.apply(&g.image_b),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        nielsen_inverse(&self.image_a, &self.image_b)
            .expect("Automorphism values always hold a basis")
    }

    /// True iff the map is a signed permutation of the letters.
    pub fn is_w1(&self) -> bool {
        self.image_a.len() == 1
            && self.image_b.len() == 1
            && self.image_a.letters()[0].generator() != self.image_b.letters()[0].generator()
    }
}

impl Default for Automorphism {
    fn default() -> Self {
        Automorphism::identity()
    }
}

impl From<Named> for Automorphism {
    fn from(n: Named) -> Automorphism {
        named(n)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a -> {}; b -> {}", self.image_a, self.image_b)
    }
}

impl FromStr for Automorphism {
    type Err = Error;

    /// Accepts `a -> <word>; b -> <word>` or a registered name such as
    /// `sigma`.
    fn from_str(s: &str) -> Result<Automorphism> {
        let s = s.trim();
        if let Ok(n) = s.parse::<Named>() {
            return Ok(named(n));
        }
        let malformed = || ParseError::MalformedAutomorphism(s.to_string());
        let (left, right) = s.split_once(';').ok_or_else(malformed)?;
        let image = |part: &str, expect: &str| -> Result<Word> {
            let (lhs, rhs) = part.split_once("->").ok_or_else(malformed)?;
            if lhs.trim() != expect {
                return Err(malformed().into());
            }
            Ok(rhs.parse()?)
        };
        Automorphism::from_images(image(left, "a")?, image(right, "b")?)
    }
}

impl Serialize for Automorphism {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Automorphism {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Solves for the inverse by greedy Nielsen reduction of the image pair,
/// tracking the preimage of each entry as a word in the original basis.
fn nielsen_inverse(image_a: &Word, image_b: &Word) -> Result<Automorphism> {
    let invalid = || Error::InvalidAutomorphism {
        image_a: image_a.to_string(),
        image_b: image_b.to_string(),
    };
    // entries[i] = (current value, preimage expressed in a, b)
    let mut entries = [
        (image_a.clone(), Word::letter(Letter::A)),
        (image_b.clone(), Word::letter(Letter::B)),
    ];
    let cap = 4 * (image_a.len() + image_b.len()) + 4;
    for _ in 0..=cap {
        let (u, v) = (&entries[0].0, &entries[1].0);
        if u.is_empty() || v.is_empty() {
            return Err(invalid());
        }
        if u.len() == 1 && v.len() == 1 {
            let (x, y) = (u.letters()[0], v.letters()[0]);
            if x.generator() == y.generator() {
                return Err(invalid());
            }
            // f(P) = x and f(Q) = y, so f⁻¹(x) = P and f⁻¹(y) = Q.
            let mut inv_a = Word::identity();
            let mut inv_b = Word::identity();
            for (letter, pre) in [(x, &entries[0].1), (y, &entries[1].1)] {
                let img = if letter.is_positive() {
                    pre.clone()
                } else {
                    pre.inverse()
                };
                match letter.generator() {
                    Generator::A => inv_a = img,
                    Generator::B => inv_b = img,
                }
            }
            return Ok(Automorphism {
                image_a: inv_a,
                image_b: inv_b,
            });
        }
        let total = u.len() + v.len();
        let mut best: Option<(usize, [(Word, Word); 2])> = None;
        for target in 0..2 {
            let other = 1 - target;
            for e in [1i64, -1] {
                for right in [true, false] {
                    let (ov, op) = if e == 1 {
                        (entries[other].0.clone(), entries[other].1.clone())
                    } else {
                        (entries[other].0.inverse(), entries[other].1.inverse())
                    };
                    let (tv, tp) = &entries[target];
                    let (nv, np) = if right {
                        (tv.concat(&ov), tp.concat(&op))
                    } else {
                        (ov.concat(tv), op.concat(tp))
                    };
                    let len = nv.len() + entries[other].0.len();
                    if len < total && best.as_ref().is_none_or(|(l, _)| len < *l) {
                        let mut next = entries.clone();
                        next[target] = (nv, np);
                        best = Some((len, next));
                    }
                }
            }
        }
        match best {
            Some((_, next)) => entries = next,
            None => return Err(invalid()),
        }
    }
    Err(invalid())
}

/// A type (W1) Whitehead automorphism: a signed permutation of the letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WhiteheadW1 {
    pub image_of_a: Letter,
    pub image_of_b: Letter,
}

impl WhiteheadW1 {
    /// The 8 maps, identity first: the four sign patterns with `a ↦ a^±`,
    /// then the four with `a ↦ b^±`, each ordered by `a < A < b < B` on
    /// the image of `a` and then of `b`.
    pub fn all() -> [WhiteheadW1; 8] {
        use Letter::*;
        let pairs = [
            (A, B),
            (A, BInv),
            (AInv, B),
            (AInv, BInv),
            (B, A),
            (B, AInv),
            (BInv, A),
            (BInv, AInv),
        ];
        pairs.map(|(image_of_a, image_of_b)| WhiteheadW1 {
            image_of_a,
            image_of_b,
        })
    }

    pub fn to_automorphism(self) -> Automorphism {
        Automorphism {
            image_a: Word::letter(self.image_of_a),
            image_b: Word::letter(self.image_of_b),
        }
    }
}

/// The 8 type (W1) automorphisms in the order of [`WhiteheadW1::all`].
pub fn all_w1() -> Vec<Automorphism> {
    WhiteheadW1::all()
        .into_iter()
        .map(WhiteheadW1::to_automorphism)
        .collect()
}

/// A type (W2) Whitehead automorphism `(S, x)`; `x` itself is left out of
/// `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WhiteheadW2 {
    multiplier: Letter,
    set: LetterSet,
}

impl WhiteheadW2 {
    pub fn new(multiplier: Letter, set: &[Letter]) -> Result<WhiteheadW2> {
        let mut s = LetterSet::default();
        for &l in set {
            if l.generator() == multiplier.generator() {
                return Err(Error::InvalidWhitehead(multiplier.to_char()));
            }
            s.insert(l);
        }
        Ok(WhiteheadW2 { multiplier, set: s })
    }

    pub fn to_automorphism(self) -> Automorphism {
        let x = self.multiplier;
        let xw = Word::letter(x);
        let image = |g: Generator| -> Word {
            let c = g.positive();
            if g == x.generator() {
                return Word::letter(c);
            }
            let cw = Word::letter(c);
            match (self.set.contains(c), self.set.contains(c.inverse())) {
                (true, true) => xw.inverse().concat(&cw).concat(&xw),
                (true, false) => cw.concat(&xw),
                // c⁻¹ ↦ c⁻¹x, hence c ↦ x⁻¹c
                (false, true) => xw.inverse().concat(&cw),
                (false, false) => cw,
            }
        };
        Automorphism {
            image_a: image(Generator::A),
            image_b: image(Generator::B),
        }
    }
}

/// `max(1, ‖f(ψ(w))‖ − ‖ψ(w)‖)`, given `ψ(w)` and its image under `f`.
pub fn delta_norm(f: &Automorphism, psi_image: &CyclicWord, after: &CyclicWord) -> u64 {
    debug_assert_eq!(&f.apply_cyclic(psi_image), after);
    delta_norm_of_lengths(psi_image.len(), after.len())
}

pub(crate) fn delta_norm_of_lengths(before: usize, after: usize) -> u64 {
    (after as i64 - before as i64).max(1) as u64
}

/// Length change `‖step(w)‖ − ‖w‖` predicted from letter and pair counts:
/// `n(w;x) − 2·n(w;x,y⁻¹)` for a step `x ↦ xy`, with `y` replaced by `y⁻¹`
/// for the inverse steps.
pub fn predicted_length_delta(w: &CyclicWord, which: Step) -> i64 {
    let (x, y) = which.moved_and_multiplier();
    w.count_letter(x) as i64 - 2 * w.count_pair(x, y.inverse()) as i64
}
