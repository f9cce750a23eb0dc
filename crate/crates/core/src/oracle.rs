//! Brute-force ground truth: every automorphism expressible as a short
//! product of Whitehead factors, plus the abelianization obstruction.
//!
//! The oracle is one-sided. A catalog of bounded depth sees only finitely
//! many automorphisms, so "no positive image within depth d" is evidence,
//! never proof.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::autos::{all_w1, named, Automorphism, Named};
use crate::error::{Error, Result};
use crate::rational::ExactRational;
use crate::words::Word;

/// Largest catalog depth accepted unless a caller raises it.
pub const DEFAULT_DEPTH_CAP: usize = 12;

/// The 16 factors: the 8 (W1) maps, σ^{±1}, τ^{±1} and δ₁..δ₄.
pub fn catalog_generators() -> Vec<Automorphism> {
    let mut gens = all_w1();
    for n in [
        Named::Sigma,
        Named::SigmaInv,
        Named::Tau,
        Named::TauInv,
        Named::Delta1,
        Named::Delta2,
        Named::Delta3,
        Named::Delta4,
    ] {
        gens.push(named(n));
    }
    gens
}

/// All distinct automorphisms that are products of at most `depth`
/// factors, in breadth-first order of first appearance.
#[derive(Debug, Clone)]
pub struct AutoCatalog {
    depth: usize,
    automorphisms: Vec<Automorphism>,
    /// `level_ends[d]` is the number of entries reachable with `≤ d`
    /// factors.
    level_ends: Vec<usize>,
}

impl AutoCatalog {
    pub fn build(depth: usize) -> Result<AutoCatalog> {
        AutoCatalog::build_with_cap(depth, DEFAULT_DEPTH_CAP)
    }

    pub fn build_with_cap(depth: usize, cap: usize) -> Result<AutoCatalog> {
        if depth > cap {
            return Err(Error::DepthTooLarge {
                requested: depth,
                cap,
            });
        }
        let gens = catalog_generators();
        let mut seen: HashSet<Automorphism> = HashSet::new();
        let mut automorphisms = vec![Automorphism::identity()];
        seen.insert(Automorphism::identity());
        let mut level_ends = vec![1];
        let mut start = 0;
        for _ in 0..depth {
            let end = automorphisms.len();
            for i in start..end {
                for g in &gens {
                    let next = g.compose(&automorphisms[i]);
                    if !seen.contains(&next) {
                        seen.insert(next.clone());
                        automorphisms.push(next);
                    }
                }
            }
            start = end;
            level_ends.push(automorphisms.len());
        }
        Ok(AutoCatalog {
            depth,
            automorphisms,
            level_ends,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn len(&self) -> usize {
        self.automorphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.automorphisms.is_empty()
    }

    pub fn automorphisms(&self) -> &[Automorphism] {
        &self.automorphisms
    }

    /// Entries that are products of at most `depth` factors.
    pub fn up_to(&self, depth: usize) -> &[Automorphism] {
        &self.automorphisms[..self.level_ends[depth.min(self.depth)]]
    }

    /// Catalog sizes at depth `0, 1, …, depth`.
    pub fn level_sizes(&self) -> &[usize] {
        &self.level_ends
    }

    /// The first catalog entry (in breadth-first order) making `[φ(u)]`
    /// positive.
    pub fn potentially_positive(&self, u: &Word) -> OracleVerdict {
        let class = u.cyclic_word();
        match self
            .automorphisms
            .par_iter()
            .position_first(|phi| phi.apply_cyclic(&class).is_positive())
        {
            Some(i) => OracleVerdict::Yes {
                witness: self.automorphisms[i].clone(),
            },
            None => OracleVerdict::NoWithinDepth,
        }
    }

    /// `‖φ(u)‖/‖φ(v)‖` for every entry, in catalog order.
    pub fn ratios(&self, u: &Word, v: &Word) -> Result<Vec<ExactRational>> {
        for w in [u, v] {
            if w.cyclic_length() == 0 {
                return Err(Error::ZeroCyclicLength(w.to_string()));
            }
        }
        let (cu, cv) = (u.cyclic_word(), v.cyclic_word());
        Ok(self
            .automorphisms
            .par_iter()
            .map(|phi| {
                ExactRational::new(
                    phi.apply_cyclic(&cu).len() as i64,
                    phi.apply_cyclic(&cv).len() as i64,
                )
            })
            .collect())
    }

    /// Entries that fix every word in `words` exactly.
    pub fn fixing<'a>(&'a self, words: &'a [Word]) -> impl Iterator<Item = &'a Automorphism> + 'a {
        self.automorphisms
            .iter()
            .filter(move |phi| words.iter().all(|w| phi.apply(w) == *w))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum OracleVerdict {
    Yes { witness: Automorphism },
    NoWithinDepth,
}

impl OracleVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, OracleVerdict::Yes { .. })
    }
}

pub fn enumerate_automorphisms(depth: usize) -> Result<AutoCatalog> {
    AutoCatalog::build(depth)
}

pub fn oracle_potentially_positive(u: &Word, depth: usize) -> Result<OracleVerdict> {
    Ok(AutoCatalog::build(depth)?.potentially_positive(u))
}

pub fn sample_ratios(u: &Word, v: &Word, depth: usize) -> Result<Vec<ExactRational>> {
    AutoCatalog::build(depth)?.ratios(u, v)
}

/// True when `u` is nontrivial with exponent sums `(0, 0)`. Automorphisms
/// act on exponent sums invertibly, and a nonempty positive word has a
/// positive total, so such a `u` is never potentially positive.
pub fn abelian_obstruction(u: &Word) -> bool {
    let ab = u.abelianize();
    u.cyclic_length() > 0 && ab.exp_a == 0 && ab.exp_b == 0
}
