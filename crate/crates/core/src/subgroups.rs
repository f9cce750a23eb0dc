//! Finitely generated subgroups of F₂ and membership through folded
//! Stallings graphs.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::words::{Generator, Letter, Word};

const NONE: usize = usize::MAX;

/// A folded core graph with base vertex 0. `out[v][g]` and `inc[v][g]` are
/// the unique `g`-labelled edges leaving and entering `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StallingsGraph {
    out: Vec<[usize; 2]>,
    inc: Vec<[usize; 2]>,
}

fn gi(g: Generator) -> usize {
    match g {
        Generator::A => 0,
        Generator::B => 1,
    }
}

impl StallingsGraph {
    /// Wedge of one loop per generator, folded and trimmed to its core.
    pub fn from_generators(generators: &[Word]) -> StallingsGraph {
        // Raw edge list (from, label, to); vertex 0 is the base.
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        let mut vertex_count = 1;
        for w in generators {
            let letters = w.letters();
            let mut cur = 0;
            for (i, &l) in letters.iter().enumerate() {
                let next = if i + 1 == letters.len() {
                    0
                } else {
                    vertex_count += 1;
                    vertex_count - 1
                };
                let g = gi(l.generator());
                if l.is_positive() {
                    edges.push((cur, g, next));
                } else {
                    edges.push((next, g, cur));
                }
                cur = next;
            }
        }
        let folded = fold(vertex_count, &edges);
        let core = trim_to_core(folded);
        canonical(core)
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn edge_count(&self) -> usize {
        self.out
            .iter()
            .map(|e| e.iter().filter(|&&t| t != NONE).count())
            .sum()
    }

    /// Edges as `(from, generator, to)`, vertices numbered in breadth-first
    /// order from the base.
    pub fn edges(&self) -> Vec<(usize, Generator, usize)> {
        let mut out = Vec::new();
        for (v, targets) in self.out.iter().enumerate() {
            for (g, &t) in [Generator::A, Generator::B].iter().zip(targets) {
                if t != NONE {
                    out.push((v, *g, t));
                }
            }
        }
        out
    }

    fn step(&self, v: usize, l: Letter) -> Option<usize> {
        let g = gi(l.generator());
        let t = if l.is_positive() {
            self.out[v][g]
        } else {
            self.inc[v][g]
        };
        (t != NONE).then_some(t)
    }

    /// Reads `w` from the base vertex; accepts iff the walk closes up.
    pub fn accepts(&self, w: &Word) -> bool {
        let mut v = 0;
        for &l in w.letters() {
            match self.step(v, l) {
                Some(t) => v = t,
                None => return false,
            }
        }
        v == 0
    }

    fn degree(&self, v: usize) -> usize {
        self.out[v]
            .iter()
            .chain(&self.inc[v])
            .filter(|&&t| t != NONE)
            .count()
    }

    /// True iff every vertex has at most one outgoing and one incoming edge
    /// per label, and all edge records are mutually consistent.
    pub fn is_folded(&self) -> bool {
        (0..self.vertex_count()).all(|v| {
            (0..2).all(|g| {
                let t = self.out[v][g];
                let s = self.inc[v][g];
                (t == NONE || self.inc[t][g] == v) && (s == NONE || self.out[s][g] == v)
            })
        })
    }

    /// True iff no vertex other than the base has degree below 2.
    pub fn is_core(&self) -> bool {
        (1..self.vertex_count()).all(|v| self.degree(v) >= 2)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Merges two classes; the smaller representative (earlier vertex)
    /// survives.
    fn union(&mut self, x: usize, y: usize) -> bool {
        let (x, y) = (self.find(x), self.find(y));
        if x == y {
            return false;
        }
        let (keep, gone) = if x < y { (x, y) } else { (y, x) };
        self.0[gone] = keep;
        true
    }
}

/// Merges edge targets until every vertex has at most one edge per label
/// and direction.
fn fold(vertex_count: usize, edges: &[(usize, usize, usize)]) -> StallingsGraph {
    let mut uf = UnionFind((0..vertex_count).collect());
    loop {
        let mut out = vec![[NONE; 2]; vertex_count];
        let mut inc = vec![[NONE; 2]; vertex_count];
        let mut merged = false;
        for &(s, g, t) in edges {
            let (s, t) = (uf.find(s), uf.find(t));
            let (s, t) = (uf.find(s), uf.find(t));
            if out[s][g] == NONE {
                out[s][g] = t;
            } else if uf.union(out[s][g], t) {
                merged = true;
            }
            let (s, t) = (uf.find(s), uf.find(t));
            if inc[t][g] == NONE {
                inc[t][g] = s;
            } else if uf.union(inc[t][g], s) {
                merged = true;
            }
        }
        if !merged {
            // Re-resolve: entries written before a later union may be stale.
            let mut out2 = vec![[NONE; 2]; vertex_count];
            let mut inc2 = vec![[NONE; 2]; vertex_count];
            for &(s, g, t) in edges {
                let (s, t) = (uf.find(s), uf.find(t));
                out2[s][g] = t;
                inc2[t][g] = s;
            }
            return StallingsGraph {
                out: out2,
                inc: inc2,
            };
        }
    }
}

/// Repeatedly deletes non-base vertices of degree at most 1.
fn trim_to_core(mut g: StallingsGraph) -> StallingsGraph {
    let n = g.vertex_count();
    let mut alive: Vec<bool> = (0..n).map(|v| g.degree(v) > 0 || v == 0).collect();
    let mut queue: VecDeque<usize> = (1..n).filter(|&v| alive[v] && g.degree(v) <= 1).collect();
    while let Some(v) = queue.pop_front() {
        if !alive[v] || g.degree(v) > 1 {
            continue;
        }
        alive[v] = false;
        for k in 0..2 {
            let t = g.out[v][k];
            if t != NONE {
                g.out[v][k] = NONE;
                g.inc[t][k] = NONE;
                if t != 0 && alive[t] && g.degree(t) <= 1 {
                    queue.push_back(t);
                }
            }
            let s = g.inc[v][k];
            if s != NONE {
                g.inc[v][k] = NONE;
                g.out[s][k] = NONE;
                if s != 0 && alive[s] && g.degree(s) <= 1 {
                    queue.push_back(s);
                }
            }
        }
    }
    g
}

/// Renumbers reachable vertices in breadth-first order from the base,
/// following `a, a⁻¹, b, b⁻¹`. Isomorphic based graphs get equal values.
fn canonical(g: StallingsGraph) -> StallingsGraph {
    let n = g.vertex_count();
    let mut label = vec![NONE; n];
    let mut order = Vec::new();
    label[0] = 0;
    order.push(0);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for l in Letter::ALL {
            if let Some(t) = g.step(v, l) {
                if label[t] == NONE {
                    label[t] = order.len();
                    order.push(t);
                }
            }
        }
    }
    let relabel = |t: usize| if t == NONE { NONE } else { label[t] };
    StallingsGraph {
        out: order.iter().map(|&v| g.out[v].map(relabel)).collect(),
        inc: order.iter().map(|&v| g.inc[v].map(relabel)).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    generators: Vec<Word>,
    graph: StallingsGraph,
}

impl Subgroup {
    /// An empty generator list is treated as `⟨1⟩`.
    pub fn build(generators: Vec<Word>) -> Subgroup {
        let generators = if generators.is_empty() {
            vec![Word::identity()]
        } else {
            generators
        };
        let graph = StallingsGraph::from_generators(&generators);
        Subgroup { generators, graph }
    }

    pub fn generators(&self) -> &[Word] {
        &self.generators
    }

    pub fn graph(&self) -> &StallingsGraph {
        &self.graph
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.graph.accepts(w)
    }

    /// `|H|`: the longest generator as given.
    pub fn norm(&self) -> usize {
        self.generators.iter().map(Word::len).max().unwrap_or(0)
    }

    /// True iff every generator is the identity.
    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(Word::is_empty)
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        f.write_str(&gens.join(","))
    }
}

/// Comma-separated generators, e.g. `aab,ba`.
impl FromStr for Subgroup {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Subgroup, ParseError> {
        let mut gens = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let w = part.parse::<Word>().map_err(|e| match e {
                ParseError::InvalidCharacter {
                    position,
                    character,
                } => ParseError::InvalidCharacter {
                    position: position + offset,
                    character,
                },
                other => other,
            })?;
            gens.push(w);
            offset += part.chars().count() + 1;
        }
        Ok(Subgroup::build(gens))
    }
}

/// `|H|` as a free function.
pub fn subgroup_norm(h: &Subgroup) -> usize {
    h.norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(s: &str) -> Subgroup {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn build_examples() {
        let a = h("a");
        assert_eq!(a.graph().vertex_count(), 1);
        assert_eq!(a.graph().edges(), vec![(0, Generator::A, 0)]);

        let a2b = h("aa,b");
        assert_eq!(a2b.graph().vertex_count(), 2);
        assert_eq!(
            a2b.graph().edges(),
            vec![
                (0, Generator::A, 1),
                (0, Generator::B, 0),
                (1, Generator::A, 0)
            ]
        );

        assert_eq!(h("a,a").graph(), a.graph());
    }

    #[test]
    fn contains_examples() {
        assert!(h("a").contains(&w("aaa")));
        assert!(!h("aa,b").contains(&w("a")));
        let f2 = h("a,b");
        for word in crate::words::reduced_words_up_to(4) {
            assert!(f2.contains(&word));
        }
        assert!(h("ab").contains(&Word::identity()));
    }

    #[test]
    fn norm_examples() {
        assert_eq!(h("aab,a").norm(), 3);
        assert_eq!(h("a").norm(), 1);
        assert_eq!(h("1").norm(), 0);
        assert!(h("1").is_trivial());
    }

    #[test]
    fn folding_collapses_redundant_generators() {
        // ⟨ab, aB⟩ has index 2 style overlap at the base: both start with a.
        let g = h("ab,aB");
        assert!(g.graph().is_folded());
        assert!(g.graph().is_core());
        assert!(g.contains(&w("abbA")));
        assert!(!g.contains(&w("a")));
        // ⟨bab⁻¹⟩: the hanging b-edge is part of the core only through the
        // base, so it stays.
        let c = h("baB");
        assert!(c.contains(&w("baaB")));
        assert!(!c.contains(&w("a")));
        // Conjugate generators folding into a single loop.
        let d = h("a,baB,bAB");
        assert!(d.contains(&w("baaaB")));
        assert!(!d.contains(&w("b")));
    }

    #[test]
    fn parse_errors_report_absolute_position() {
        assert_eq!(
            "ab,a$".parse::<Subgroup>(),
            Err(ParseError::InvalidCharacter {
                position: 4,
                character: '$'
            })
        );
    }
}
