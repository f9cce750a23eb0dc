//! Reduced and cyclic words over the basis `{a, b}` of the free group F₂.
//!
//! Text syntax: lowercase `a`/`b` are the generators, uppercase `A`/`B` their
//! inverses, `1` is the identity and whitespace is ignored. Rendering always
//! produces the compact form, with `1` for the empty word.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

/// One of the two free generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::A => Generator::B,
            Generator::B => Generator::A,
        }
    }

    pub fn positive(self) -> Letter {
        Letter::new(self, true)
    }

    pub fn negative(self) -> Letter {
        Letter::new(self, false)
    }
}

/// A signed generator. The derived order is `a < A < b < B`, which is the
/// order used for canonical rotations and shortlex enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub fn new(generator: Generator, positive: bool) -> Letter {
        match (generator, positive) {
            (Generator::A, true) => Letter::A,
            (Generator::A, false) => Letter::AInv,
            (Generator::B, true) => Letter::B,
            (Generator::B, false) => Letter::BInv,
        }
    }

    #[inline]
    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    #[inline]
    pub fn generator(self) -> Generator {
        match self {
            Letter::A | Letter::AInv => Generator::A,
            Letter::B | Letter::BInv => Generator::B,
        }
    }

    #[inline]
    pub fn is_positive(self) -> bool {
        matches!(self, Letter::A | Letter::B)
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::B => 'b',
            Letter::BInv => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::AInv),
            'b' => Some(Letter::B),
            'B' => Some(Letter::BInv),
            _ => None,
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Appends `letter` to a buffer that is already freely reduced, cancelling
/// against the last letter when possible.
#[inline]
pub(crate) fn push_reduced(buf: &mut Vec<Letter>, letter: Letter) {
    if buf.last() == Some(&letter.inverse()) {
        buf.pop();
    } else {
        buf.push(letter);
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        let mut buf = Vec::new();
        for l in letters {
            push_reduced(&mut buf, l);
        }
        Word(buf)
    }

    /// Wraps letters known to be freely reduced.
    pub(crate) fn from_reduced_unchecked(letters: Vec<Letter>) -> Word {
        debug_assert!(is_freely_reduced(&letters));
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Free product `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut buf = self.0.clone();
        for &l in &other.0 {
            push_reduced(&mut buf, l);
        }
        Word(buf)
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `c · self · c⁻¹`, freely reduced.
    pub fn conjugate(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    /// Splits off the longest `c` with `self = c · core · c⁻¹`, then rotates
    /// the core to its canonical representative, folding the rotation into
    /// the returned conjugator.
    pub fn cyclic_reduce(&self) -> (CyclicWord, Word) {
        let w = &self.0;
        let n = w.len();
        let mut peel = 0;
        while 2 * peel + 1 < n && w[peel] == w[n - 1 - peel].inverse() {
            peel += 1;
        }
        let middle = &w[peel..n - peel];
        let start = least_rotation(middle);
        let mut conjugator = w[..peel].to_vec();
        for &l in &middle[..start] {
            push_reduced(&mut conjugator, l);
        }
        let mut core = Vec::with_capacity(middle.len());
        core.extend_from_slice(&middle[start..]);
        core.extend_from_slice(&middle[..start]);
        (CyclicWord(core), Word(conjugator))
    }

    pub fn cyclic_word(&self) -> CyclicWord {
        self.cyclic_reduce().0
    }

    pub fn cyclic_length(&self) -> usize {
        cyclic_core(&self.0).len()
    }

    pub fn abelianize(&self) -> AbelianImage {
        AbelianImage::of(&self.0)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(&self.0, f)
    }
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Word, ParseError> {
        parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Word, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn render(letters: &[Letter], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.is_empty() {
        return f.write_str("1");
    }
    for l in letters {
        write!(f, "{}", l.to_char())?;
    }
    Ok(())
}

/// Parses the word text syntax. `1` may appear only as the whole (trimmed)
/// input.
pub fn parse_word(text: &str) -> Result<Word, ParseError> {
    if text.trim() == "1" {
        return Ok(Word::identity());
    }
    let mut buf = Vec::new();
    for (position, c) in text.chars().enumerate() {
        if c.is_whitespace() {
            continue;
        }
        match Letter::from_char(c) {
            Some(l) => push_reduced(&mut buf, l),
            None => {
                return Err(ParseError::InvalidCharacter {
                    position,
                    character: c,
                })
            }
        }
    }
    Ok(Word(buf))
}

pub(crate) fn is_freely_reduced(letters: &[Letter]) -> bool {
    letters.windows(2).all(|p| p[0] != p[1].inverse())
}

/// The cyclically reduced middle of a freely reduced letter slice.
pub(crate) fn cyclic_core(w: &[Letter]) -> &[Letter] {
    let n = w.len();
    let mut peel = 0;
    while 2 * peel + 1 < n && w[peel] == w[n - 1 - peel].inverse() {
        peel += 1;
    }
    &w[peel..n - peel]
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
pub(crate) fn least_rotation(s: &[Letter]) -> usize {
    let n = s.len();
    if n < 2 {
        return 0;
    }
    let at = |i: isize| s[i as usize % n];
    let mut failure = vec![-1isize; 2 * n];
    let mut k: isize = 0;
    for j in 1..(2 * n) as isize {
        let sj = at(j);
        let mut i = failure[(j - k - 1) as usize];
        while i != -1 && sj != at(k + i + 1) {
            if sj < at(k + i + 1) {
                k = j - i - 1;
            }
            i = failure[i as usize];
        }
        if sj != at(k + i + 1) {
            // i == -1 here
            if sj < at(k) {
                k = j;
            }
            failure[(j - k) as usize] = -1;
        } else {
            failure[(j - k) as usize] = i + 1;
        }
    }
    k as usize % n
}

/// A conjugacy class, stored as the least rotation of its cyclically reduced
/// representative. Structural equality is conjugacy.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    pub fn empty() -> CyclicWord {
        CyclicWord(Vec::new())
    }

    /// Canonicalizes a letter sequence that is already cyclically reduced.
    pub(crate) fn from_cyclically_reduced(mut letters: Vec<Letter>) -> CyclicWord {
        debug_assert!(is_freely_reduced(&letters));
        debug_assert!(letters.len() < 2 || letters[0] != letters[letters.len() - 1].inverse());
        let start = least_rotation(&letters);
        letters.rotate_left(start);
        CyclicWord(letters)
    }

    /// Cyclically reduces and canonicalizes an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> CyclicWord {
        Word::free_reduce(letters).cyclic_word()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// The cyclic length ‖·‖.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The canonical representative as an ordinary word.
    pub fn to_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::from_cyclically_reduced(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// True iff no letter has a negative exponent. The empty word is positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|l| l.is_positive())
    }

    /// Occurrences of `x` and `x⁻¹`.
    pub fn count_letter(&self, x: Letter) -> usize {
        let g = x.generator();
        self.0.iter().filter(|l| l.generator() == g).count()
    }

    /// Cyclic occurrences of the two-letter subwords `xy` and `y⁻¹x⁻¹`.
    pub fn count_pair(&self, x: Letter, y: Letter) -> usize {
        let (xi, yi) = (y.inverse(), x.inverse());
        self.cyclic_pairs()
            .filter(|&(p, q)| (p == x && q == y) || (p == xi && q == yi))
            .count()
    }

    /// Cyclic occurrences of exactly `xy`, without the inverse form.
    pub fn count_pair_raw(&self, x: Letter, y: Letter) -> usize {
        self.cyclic_pairs()
            .filter(|&(p, q)| p == x && q == y)
            .count()
    }

    fn cyclic_pairs(&self) -> impl Iterator<Item = (Letter, Letter)> + '_ {
        let n = self.0.len();
        (0..n).map(move |i| (self.0[i], self.0[(i + 1) % n]))
    }

    /// The set of letters occurring in the word.
    pub fn support(&self) -> LetterSet {
        let mut s = LetterSet::default();
        for &l in &self.0 {
            s.insert(l);
        }
        s
    }

    pub fn abelianize(&self) -> AbelianImage {
        AbelianImage::of(&self.0)
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(&self.0, f)
    }
}

impl FromStr for CyclicWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<CyclicWord, ParseError> {
        Ok(parse_word(s)?.cyclic_word())
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CyclicWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<CyclicWord, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Cancellation events produced by a Whitehead map `x ↦ x·m` on a cyclic
/// word, where `x` is the positive letter of `moved` and `m` the multiplier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Cancellation {
    /// Cancellations inside an invariant subword `x m^r x⁻¹`, which the map
    /// leaves unchanged.
    pub trivial: usize,
    /// Every other cancellation; these are what make the image shorter
    /// than the letter count predicts.
    pub proper: usize,
}

/// Classifies the cancellation that `x ↦ x·multiplier` causes on `w`.
///
/// Between consecutive `x`-letters sits a syllable `m^e`. A gap of shape
/// `x m^e x⁻¹` receives `m` on the left and `m⁻¹` on the right and is
/// invariant; if `e ≠ 0` one inserted letter cancels (trivial). A gap of
/// shape `x m^e x` or `x⁻¹ m^e x⁻¹` receives a single letter, which cancels
/// exactly when it opposes the sign of `e` (proper). Gaps `x⁻¹ m^e x` are
/// untouched.
pub fn detect_cancellation(w: &CyclicWord, moved: Generator, multiplier: Letter) -> Cancellation {
    let mut out = Cancellation::default();
    let letters = w.letters();
    let x = moved.positive();
    let Some(first) = letters.iter().position(|l| l.generator() == moved) else {
        return out;
    };
    let n = letters.len();
    let mut left = letters[first];
    let mut e: i64 = 0;
    for off in 1..=n {
        let l = letters[(first + off) % n];
        if l.generator() != moved {
            e += if l == multiplier { 1 } else { -1 };
            continue;
        }
        // Inserted letter measured in powers of the multiplier: `m` after a
        // leading `x`, `m⁻¹` before a trailing `x⁻¹`.
        let d = i64::from(left == x) - i64::from(l == x.inverse());
        if left == x && l == x.inverse() {
            out.trivial += usize::from(e != 0);
        } else if d != 0 && e != 0 && e.signum() != d.signum() {
            out.proper += 1;
        }
        left = l;
        e = 0;
    }
    out
}

/// A bitset over the four letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct LetterSet(u8);

impl LetterSet {
    pub fn insert(&mut self, l: Letter) {
        self.0 |= 1 << l.index();
    }

    pub fn contains(self, l: Letter) -> bool {
        self.0 & (1 << l.index()) != 0
    }

    /// True iff no generator occurs with both signs.
    pub fn is_sign_coherent(self) -> bool {
        !(self.contains(Letter::A) && self.contains(Letter::AInv))
            && !(self.contains(Letter::B) && self.contains(Letter::BInv))
    }
}

/// Exponent sums of `a` and `b`: the image in ℤ².
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct AbelianImage {
    pub exp_a: i64,
    pub exp_b: i64,
}

impl AbelianImage {
    fn of(letters: &[Letter]) -> AbelianImage {
        let mut img = AbelianImage::default();
        for l in letters {
            match l.generator() {
                Generator::A => img.exp_a += l.sign(),
                Generator::B => img.exp_b += l.sign(),
            }
        }
        img
    }
}

impl std::ops::Add for AbelianImage {
    type Output = AbelianImage;

    fn add(self, rhs: AbelianImage) -> AbelianImage {
        AbelianImage {
            exp_a: self.exp_a + rhs.exp_a,
            exp_b: self.exp_b + rhs.exp_b,
        }
    }
}

impl std::ops::Neg for AbelianImage {
    type Output = AbelianImage;

    fn neg(self) -> AbelianImage {
        AbelianImage {
            exp_a: -self.exp_a,
            exp_b: -self.exp_b,
        }
    }
}

/// All freely reduced words of length exactly `n`, in shortlex order.
pub fn reduced_words_of_length(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    fn rec(buf: &mut Vec<Letter>, n: usize, out: &mut Vec<Word>) {
        if buf.len() == n {
            out.push(Word(buf.clone()));
            return;
        }
        for l in Letter::ALL {
            if buf.last() == Some(&l.inverse()) {
                continue;
            }
            buf.push(l);
            rec(buf, n, out);
            buf.pop();
        }
    }
    rec(&mut buf, n, &mut out);
    out
}

/// All freely reduced words of length at most `n`, in shortlex order,
/// starting with the identity.
pub fn reduced_words_up_to(n: usize) -> Vec<Word> {
    (0..=n).flat_map(reduced_words_of_length).collect()
}

/// Primitive root of a nonempty cyclically reduced word: the shortest `r`
/// with `w = r^k`.
pub(crate) fn primitive_root(w: &[Letter]) -> &[Letter] {
    let n = w.len();
    (1..=n)
        .find(|&d| n % d == 0 && (d..n).all(|i| w[i] == w[i - d]))
        .map_or(w, |d| &w[..d])
}

/// Finds `c` with `c⁻¹·xs[i]·c = ys[i]` for every `i`, if one exists.
///
/// Conjugators of the first nontrivial pair form a coset `p·rⁿ·q⁻¹` of the
/// centralizer `⟨r⟩`; each remaining pair either commutes with `r` (and
/// then must already agree) or pins down at most one `n`, which lies in a
/// window bounded by the word lengths.
pub fn find_conjugator(xs: &[Word], ys: &[Word]) -> Option<Word> {
    if xs.len() != ys.len() {
        return None;
    }
    let Some(lead) = xs.iter().position(|x| !x.is_empty()) else {
        return ys.iter().all(Word::is_empty).then(Word::identity);
    };
    let (core_x, p) = xs[lead].cyclic_reduce();
    let (core_y, q) = ys[lead].cyclic_reduce();
    if core_x != core_y {
        return None;
    }
    let root = Word(primitive_root(core_x.letters()).to_vec());
    let candidate = |n: i64| p.concat(&root.pow(n)).concat(&q.inverse());
    let works = |c: &Word| {
        let ci = c.inverse();
        xs.iter().zip(ys).all(|(x, y)| ci.concat(x).concat(c) == *y)
    };
    let mut pinned: Option<i64> = None;
    for (x, y) in xs.iter().zip(ys) {
        let big_x = p.inverse().concat(x).concat(&p);
        let big_y = q.inverse().concat(y).concat(&q);
        if big_x.concat(&root) == root.concat(&big_x) {
            if big_x != big_y {
                return None;
            }
            continue;
        }
        let window = (big_x.len() + big_y.len() + 2) as i64;
        let n = (-window..=window).find(|&n| {
            let r = root.pow(n);
            r.inverse().concat(&big_x).concat(&r) == big_y
        })?;
        match pinned {
            Some(m) if m != n => return None,
            _ => pinned = Some(n),
        }
    }
    let c = candidate(pinned.unwrap_or(0));
    debug_assert!(works(&c));
    works(&c).then_some(c)
}

/// All solutions `c` of `c⁻¹·xs[i]·c = ys[i]`, as `base·periodⁿ` for
/// `n ∈ ℤ` (or just `base` when the centralizer of `ys` is trivial).
/// Returns `None` when there is no solution. If every `ys[i]` is trivial the
/// centralizer is the whole group; this is reported as `(base, None)` and
/// left to the caller.
pub fn conjugator_family(xs: &[Word], ys: &[Word]) -> Option<(Word, Option<Word>)> {
    let base = find_conjugator(xs, ys)?;
    let Some(lead) = ys.iter().find(|y| !y.is_empty()) else {
        return Some((base, None));
    };
    let (core, g) = lead.cyclic_reduce();
    let root = g
        .concat(&Word(primitive_root(core.letters()).to_vec()))
        .concat(&g.inverse());
    let abelian = ys.iter().all(|y| y.concat(&root) == root.concat(y));
    Some((base, abelian.then_some(root)))
}
