//! Decision procedures for automorphism problems in the free group F₂ of
//! rank two.
//!
//! * [`words`] — reduced and cyclic words, counting functions, cancellation.
//! * [`autos`] — automorphisms stored by the images of `a` and `b`, the
//!   Whitehead maps and the named maps σ, τ, δ₁–δ₄, π.
//! * [`chains`] — σ/τ chains and their bounded, incremental enumeration.
//! * [`subgroups`] — finitely generated subgroups via Stallings graphs.
//! * [`decide`] — potential positivity, bounded translation equivalence
//!   and fixed-point-group recognition.
//! * [`oracle`] — brute-force automorphism catalogs used for cross-checks.
//! * [`cli`] — the command-line front end, usable as a library.

pub mod autos;
pub mod chains;
pub mod cli;
pub mod decide;
pub mod error;
pub mod identities;
pub mod oracle;
pub mod rational;
pub mod subgroups;
pub mod words;

pub use autos::{all_w1, named, Automorphism, Named, WhiteheadW1, WhiteheadW2};
pub use chains::{Chain, ChainVisit, Control, Enumerator, Polarity, Step};
pub use decide::{
    bounded_translation_equivalent, compute_delta_bounds, fixed_point_group, potentially_positive,
    BteReport, FixAnswer, FixOptions, FixReport, PositivityReport,
};
pub use error::{Error, ParseError, Result};
pub use rational::ExactRational;
pub use subgroups::Subgroup;
pub use words::{parse_word, AbelianImage, CyclicWord, Generator, Letter, Word};
