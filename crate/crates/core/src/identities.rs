//! Exact identities among the named automorphisms.
//!
//! Three families relate products of σ, τ, δ₁–δ₄ and π. They are what lets
//! any product of Whitehead maps be rewritten into the normal form
//! `β ∘ δ′ ∘ ψ′` searched by [`crate::decide::fixed_point_group`]:
//!
//! * the (W2) maps not in the named set factor as a δ map times a chain
//!   letter;
//! * a chain letter followed by a δ map equals δ maps followed by the same
//!   chain letter;
//! * a chain letter of one sign followed by one of the other sign (or by π)
//!   can be rewritten with π in front.
//!
//! Each identity holds as an exact equality of the images of `a` and `b`.

use std::fmt;

use crate::autos::{named, Automorphism, Named, WhiteheadW2};
use crate::words::Letter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    WhiteheadFactorization,
    DeltaCommutation,
    PiRewriting,
}

/// One side of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `f₁ ∘ f₂ ∘ … ∘ fₙ`, written left to right.
    Product(&'static [Named]),
    /// The (W2) map `(S, x)`.
    Whitehead {
        multiplier: Letter,
        set: &'static [Letter],
    },
}

impl Side {
    pub fn evaluate(&self) -> Automorphism {
        match *self {
            Side::Product(fs) => fs
                .iter()
                .fold(Automorphism::identity(), |acc, &f| acc.compose(&named(f))),
            Side::Whitehead { multiplier, set } => WhiteheadW2::new(multiplier, set)
                .expect("identity tables only use valid (W2) maps")
                .to_automorphism(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Product(fs) => {
                let names: Vec<&str> = fs.iter().map(|n| n.name()).collect();
                f.write_str(&names.join(" "))
            }
            Side::Whitehead { multiplier, set } => {
                let s: String = set.iter().map(|l| l.to_char()).collect();
                write!(f, "({{{s}}}, {multiplier})")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Identity {
    pub family: Family,
    pub lhs: Side,
    pub rhs: Side,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs.evaluate() == self.rhs.evaluate()
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

use Letter::{AInv, BInv, A, B};
use Named::*;

const fn w2(multiplier: Letter, set: &'static [Letter]) -> Side {
    Side::Whitehead { multiplier, set }
}

const fn p(fs: &'static [Named]) -> Side {
    Side::Product(fs)
}

const FACTORIZATIONS: [(Side, Side); 4] = [
    (w2(B, &[AInv]), p(&[Delta1, SigmaInv])),
    (w2(BInv, &[AInv]), p(&[Delta2, Sigma])),
    (w2(A, &[BInv]), p(&[Delta3, TauInv])),
    (w2(AInv, &[BInv]), p(&[Delta4, Tau])),
];

const COMMUTATIONS: [(Side, Side); 16] = [
    (p(&[Sigma, Delta1]), p(&[Delta1, Sigma])),
    (p(&[Sigma, Delta2]), p(&[Delta2, Sigma])),
    (p(&[Sigma, Delta3]), p(&[Delta1, Delta3, Sigma])),
    (p(&[Sigma, Delta4]), p(&[Delta4, Delta2, Sigma])),
    (p(&[Tau, Delta1]), p(&[Delta3, Delta1, Tau])),
    (p(&[Tau, Delta2]), p(&[Delta2, Delta4, Tau])),
    (p(&[Tau, Delta3]), p(&[Delta3, Tau])),
    (p(&[Tau, Delta4]), p(&[Delta4, Tau])),
    (p(&[SigmaInv, Delta1]), p(&[Delta1, SigmaInv])),
    (p(&[SigmaInv, Delta2]), p(&[Delta2, SigmaInv])),
    (p(&[SigmaInv, Delta3]), p(&[Delta2, Delta3, SigmaInv])),
    (p(&[SigmaInv, Delta4]), p(&[Delta4, Delta1, SigmaInv])),
    (p(&[TauInv, Delta1]), p(&[Delta4, Delta1, TauInv])),
    (p(&[TauInv, Delta2]), p(&[Delta2, Delta3, TauInv])),
    (p(&[TauInv, Delta3]), p(&[Delta3, TauInv])),
    (p(&[TauInv, Delta4]), p(&[Delta4, TauInv])),
];

const PI_REWRITES: [(Side, Side); 12] = [
    (p(&[Sigma, TauInv]), p(&[Pi, Delta1, SigmaInv])),
    (p(&[SigmaInv, Tau]), p(&[PiInv, Delta3, Sigma])),
    (p(&[Tau, SigmaInv]), p(&[PiInv, Delta3, TauInv])),
    (p(&[TauInv, Sigma]), p(&[Pi, Delta1, Tau])),
    (p(&[Sigma, Pi]), p(&[Pi, Delta3, TauInv])),
    (p(&[Sigma, PiInv]), p(&[PiInv, TauInv])),
    (p(&[SigmaInv, Pi]), p(&[Pi, Delta4, Tau])),
    (p(&[SigmaInv, PiInv]), p(&[PiInv, Tau])),
    (p(&[Tau, Pi]), p(&[Pi, SigmaInv])),
    (p(&[Tau, PiInv]), p(&[PiInv, Delta1, SigmaInv])),
    (p(&[TauInv, Pi]), p(&[Pi, Sigma])),
    (p(&[TauInv, PiInv]), p(&[PiInv, Delta2, Sigma])),
];

/// All 32 identities: 4 factorizations, 16 commutations, 12 π rewrites.
pub fn all() -> Vec<Identity> {
    let tag = |family: Family, rows: &[(Side, Side)]| -> Vec<Identity> {
        rows.iter()
            .map(|&(lhs, rhs)| Identity { family, lhs, rhs })
            .collect()
    };
    let mut out = tag(Family::WhiteheadFactorization, &FACTORIZATIONS);
    out.extend(tag(Family::DeltaCommutation, &COMMUTATIONS));
    out.extend(tag(Family::PiRewriting, &PI_REWRITES));
    out
}

pub fn of_family(family: Family) -> Vec<Identity> {
    all().into_iter().filter(|i| i.family == family).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(of_family(Family::WhiteheadFactorization).len(), 4);
        assert_eq!(of_family(Family::DeltaCommutation).len(), 16);
        assert_eq!(of_family(Family::PiRewriting).len(), 12);
    }

    #[test]
    fn every_identity_holds_exactly() {
        for id in all() {
            assert!(id.holds(), "{id}");
        }
    }

    #[test]
    fn rendering() {
        let first = all()[0];
        assert_eq!(first.to_string(), "({A}, b) = delta1 sigma_inv");
    }

    #[test]
    fn perturbed_identities_fail() {
        // Guard against a vacuous checker: dropping the leading δ breaks
        // every identity whose right side has one.
        for id in all() {
            if let Side::Product(fs) = id.rhs {
                if fs.len() > 1 && matches!(fs[0], Delta1 | Delta2 | Delta3 | Delta4) {
                    let broken = Side::Product(&fs[1..]);
                    assert_ne!(id.lhs.evaluate(), broken.evaluate(), "{id}");
                }
            }
        }
    }
}
