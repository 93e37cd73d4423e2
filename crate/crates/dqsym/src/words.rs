//! Words over the positive integers and permutations in one-line notation.
//!
//! Besides the two newtypes this module carries the word-level operations the
//! algebra is built from: standardization, the shifted-shuffle convolution of
//! permutations, the max-letter dendriform pair on words, descent and
//! saillance compositions, and the factorization of a word into initially
//! dominated blocks.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::compositions::Composition;

/// A word over the alphabet `{1, 2, ..}`; letters may repeat.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u8>);

impl Word {
    /// Builds a word. Panics if any letter is zero.
    pub fn new(letters: Vec<u8>) -> Self {
        assert!(
            letters.iter().all(|&a| a > 0),
            "word letters must be positive, got {letters:?}"
        );
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter; panics on the empty word.
    pub fn max_letter(&self) -> u8 {
        *self.0.iter().max().expect("max letter of the empty word")
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }
}

/// A permutation of `{1, .., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    /// Builds a permutation from one-line notation; panics unless the letters
    /// are exactly `1, .., n` in some order.
    pub fn new(letters: Vec<u8>) -> Self {
        match Permutation::try_new(letters) {
            Some(p) => p,
            None => panic!("not a permutation in one-line notation"),
        }
    }

    /// Fallible constructor: `None` unless the letters are exactly
    /// `1, .., n` in some order.
    pub fn try_new(letters: Vec<u8>) -> Option<Self> {
        let n = letters.len();
        let mut seen = vec![false; n];
        for &a in &letters {
            if a < 1 || (a as usize) > n || std::mem::replace(&mut seen[a as usize - 1], true) {
                return None;
            }
        }
        Some(Permutation(letters))
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "permutation too long");
        Permutation((1..=n as u8).collect())
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn word(&self) -> Word {
        Word(self.0.clone())
    }
}

impl fmt::Display for Word {
    /// Digit string when every letter is a single digit, otherwise
    /// comma-separated; the empty word prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, f)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_letters(&self.0, f)
    }
}

fn fmt_letters(letters: &[u8], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if letters.is_empty() {
        return write!(f, "()");
    }
    if letters.iter().all(|&a| a <= 9) {
        for a in letters {
            write!(f, "{a}")?;
        }
        Ok(())
    } else {
        let strs: Vec<String> = letters.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Error for unparsable word or permutation literals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseWordError(pub String);

impl fmt::Display for ParseWordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid word literal: {}", self.0)
    }
}

impl std::error::Error for ParseWordError {}

fn parse_letters(s: &str) -> Result<Vec<u8>, ParseWordError> {
    let bad = || ParseWordError(s.to_string());
    if s.is_empty() || s == "()" {
        return Ok(Vec::new());
    }
    let letters: Vec<u8> = if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
            .collect::<Result<_, _>>()?
    };
    if letters.iter().any(|&a| a == 0) {
        return Err(bad());
    }
    Ok(letters)
}

impl FromStr for Word {
    type Err = ParseWordError;

    /// Accepts a digit string (`312`) or comma-separated letters (`10,1,2`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_letters(s).map(Word)
    }
}

impl FromStr for Permutation {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = parse_letters(s)?;
        let n = letters.len();
        let mut seen = vec![false; n];
        for &a in &letters {
            if a == 0 || a as usize > n || std::mem::replace(&mut seen[a as usize - 1], true) {
                return Err(ParseWordError(s.to_string()));
            }
        }
        Ok(Permutation(letters))
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Word::new(Vec::<u8>::deserialize(deserializer)?))
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Ok(Permutation::new(Vec::<u8>::deserialize(deserializer)?))
    }
}

/// The standardization of `w`: the unique permutation ordering positions by
/// letter, ties broken left to right.
pub fn standardize(w: &Word) -> Permutation {
    let n = w.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (w.0[i], i));
    let mut out = vec![0u8; n];
    for (rank, &i) in order.iter().enumerate() {
        out[i] = rank as u8 + 1;
    }
    Permutation(out)
}

/// The convolution of two permutations: all permutations of `m + k` whose
/// first `m` letters standardize to `a` and last `k` letters standardize to
/// `b`. There are `binomial(m + k, m)` of them; returned in lexicographic
/// order.
pub fn convolution(a: &Permutation, b: &Permutation) -> Vec<Permutation> {
    let m = a.len();
    let k = b.len();
    let n = m + k;
    assert!(n <= u8::MAX as usize, "convolution result too long");
    let mut out = Vec::new();
    for chosen in (1..=n as u8).combinations(m) {
        let rest: Vec<u8> = (1..=n as u8).filter(|v| !chosen.contains(v)).collect();
        let mut letters = Vec::with_capacity(n);
        letters.extend(a.0.iter().map(|&i| chosen[i as usize - 1]));
        letters.extend(b.0.iter().map(|&i| rest[i as usize - 1]));
        out.push(Permutation(letters));
    }
    out.sort();
    out
}

/// Left dendriform half on words: the concatenation `uv` when `v`'s largest
/// letter does not exceed `u`'s, otherwise nothing. Both halves keep the
/// concatenation when the maxima are equal, so callers that need the halves
/// to partition the product must feed words with distinct maxima. Panics on
/// empty operands.
pub fn word_left_dend(u: &Word, v: &Word) -> Option<Word> {
    assert!(!u.is_empty() && !v.is_empty(), "dendriform halves need nonempty words");
    (v.max_letter() <= u.max_letter()).then(|| u.concat(v))
}

/// Right dendriform half on words: the concatenation `uv` when `v`'s largest
/// letter is at least `u`'s, otherwise nothing. See [`word_left_dend`] for
/// the equal-maxima overlap. Panics on empty operands.
pub fn word_right_dend(u: &Word, v: &Word) -> Option<Word> {
    assert!(!u.is_empty() && !v.is_empty(), "dendriform halves need nonempty words");
    (v.max_letter() >= u.max_letter()).then(|| u.concat(v))
}

/// Lengths of the maximal increasing runs of `p`.
pub fn descent_composition(p: &Permutation) -> Composition {
    assert!(!p.is_empty(), "descent composition of the empty permutation");
    let mut parts = Vec::new();
    let mut run = 1;
    for w in p.0.windows(2) {
        if w[0] > w[1] {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    Composition::new(parts)
}

/// Splits a word with pairwise distinct letters into maximal blocks whose
/// first letter strictly exceeds the rest of the block; block leaders then
/// increase left to right. Panics if a letter repeats.
pub fn initially_dominated_factorization(w: &Word) -> Vec<Word> {
    let mut seen = std::collections::BTreeSet::new();
    for &a in &w.0 {
        assert!(seen.insert(a), "factorization needs distinct letters, got repeated {a}");
    }
    let mut blocks = Vec::new();
    let mut block: Vec<u8> = Vec::new();
    for &a in &w.0 {
        if let Some(&leader) = block.first() {
            if a < leader {
                block.push(a);
                continue;
            }
            blocks.push(Word(std::mem::take(&mut block)));
        }
        block.push(a);
    }
    if !block.is_empty() {
        blocks.push(Word(block));
    }
    blocks
}

/// Block sizes of the initially dominated factorization of `p`.
pub fn saillance_composition(p: &Permutation) -> Composition {
    assert!(!p.is_empty(), "saillance composition of the empty permutation");
    let parts = initially_dominated_factorization(&p.word())
        .iter()
        .map(Word::len)
        .collect();
    Composition::new(parts)
}

/// All permutations of `{1, .., n}` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    assert!(n <= u8::MAX as usize, "permutation degree too large");
    if n == 0 {
        return vec![Permutation::empty()];
    }
    (1..=n as u8).permutations(n).map(Permutation).collect()
}

/// The descent class of `i`: permutations whose maximal increasing runs have
/// lengths `i`, in lexicographic order.
pub fn permutations_with_descents(i: &Composition) -> Vec<Permutation> {
    permutations(i.weight())
        .into_iter()
        .filter(|p| &descent_composition(p) == i)
        .collect()
}

/// The saillance class of `j`: permutations whose initially dominated blocks
/// have sizes `j`, in lexicographic order.
pub fn permutations_with_saillance(j: &Composition) -> Vec<Permutation> {
    permutations(j.weight())
        .into_iter()
        .filter(|p| &saillance_composition(p) == j)
        .collect()
}
