//! Compositions of an integer and their descent-set combinatorics.
//!
//! A composition of `n` is a sequence of positive parts summing to `n`. Via
//! partial sums, compositions of `n` correspond to subsets of `{1, .., n-1}`;
//! refinement of compositions is containment of descent sets. This module
//! provides that dictionary together with the mirror and conjugate
//! involutions, refinement enumeration, concatenations, and the block
//! decomposition of one composition along another with its associated
//! q-exponent statistic.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A composition: a (possibly empty) sequence of positive integer parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition(Vec<usize>);

impl Composition {
    /// Builds a composition from its parts. Panics if any part is zero.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.iter().all(|&p| p > 0),
            "composition parts must be positive, got {parts:?}"
        );
        Composition(parts)
    }

    /// The empty composition of 0.
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Strictly increasing partial sums short of the weight: the descent set.
    pub fn descents(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        let mut acc = 0;
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Rebuilds a composition of `n` from a strictly increasing subset of `{1, .., n-1}`.
    pub fn from_descents(n: usize, descents: &[usize]) -> Self {
        assert!(
            descents.windows(2).all(|w| w[0] < w[1]),
            "descent positions must be strictly increasing, got {descents:?}"
        );
        assert!(
            descents.iter().all(|&d| d >= 1 && d < n),
            "descent positions must lie in 1..{n}, got {descents:?}"
        );
        let mut parts = Vec::with_capacity(descents.len() + 1);
        let mut prev = 0;
        for &d in descents {
            parts.push(d - prev);
            prev = d;
        }
        if n > prev {
            parts.push(n - prev);
        } else {
            assert!(n == 0 && descents.is_empty(), "descents exceed weight {n}");
        }
        Composition(parts)
    }

    /// True when `self` refines `coarser`: same weight and every boundary of
    /// `coarser` is a boundary of `self`.
    pub fn refines(&self, coarser: &Composition) -> bool {
        if self.weight() != coarser.weight() {
            return false;
        }
        let fine = self.descents();
        coarser.descents().iter().all(|d| fine.contains(d))
    }

    /// Parts in reverse order.
    pub fn mirror(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.reverse();
        Composition(parts)
    }

    /// Conjugate composition: the descent set becomes the complement of the
    /// reflected descent set, `{1, .., n-1} \ {n - d}`. Panics on the empty
    /// composition, which has no conjugate.
    pub fn conjugate(&self) -> Composition {
        assert!(!self.is_empty(), "conjugate of the empty composition");
        let n = self.weight();
        let reflected: Vec<usize> = self.descents().iter().map(|&d| n - d).collect();
        let kept: Vec<usize> = (1..n).filter(|d| !reflected.contains(d)).collect();
        Composition::from_descents(n, &kept)
    }

    /// Concatenation of part lists.
    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Concatenation with the touching parts merged: the last part of `self`
    /// absorbs the first part of `other`. Panics if either side is empty.
    pub fn near_concat(&self, other: &Composition) -> Composition {
        assert!(
            !self.is_empty() && !other.is_empty(),
            "near-concatenation needs nonempty operands"
        );
        let mut parts = self.0.clone();
        *parts.last_mut().unwrap() += other.0[0];
        parts.extend_from_slice(&other.0[1..]);
        Composition(parts)
    }

    /// Position of the composition in the display order used throughout:
    /// descent `d` contributes bit `n-1-d`, so `(n)` comes first and
    /// `(1, .., 1)` last.
    pub fn order_index(&self) -> usize {
        let n = self.weight();
        self.descents().iter().map(|&d| 1usize << (n - 1 - d)).sum()
    }
}

impl fmt::Display for Composition {
    /// Digit string when every part is a single digit (`211`), otherwise
    /// comma-separated (`10,1`); the empty composition prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        if self.0.iter().all(|&p| p <= 9) {
            for p in &self.0 {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let strs: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", strs.join(","))
        }
    }
}

/// Error for unparsable composition literals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseCompositionError(pub String);

impl fmt::Display for ParseCompositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid composition literal: {}", self.0)
    }
}

impl std::error::Error for ParseCompositionError {}

impl FromStr for Composition {
    type Err = ParseCompositionError;

    /// Accepts comma-separated parts (`2,1,1`) or a digit string (`211`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseCompositionError(s.to_string());
        if s.is_empty() || s == "()" {
            return Ok(Composition::empty());
        }
        let parts: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_, _>>()?
        };
        if parts.iter().any(|&p| p == 0) {
            return Err(bad());
        }
        Ok(Composition(parts))
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Composition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A descent set: a subset of `{1, .., n-1}` with the ambient `n` remembered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentSet {
    pub n: usize,
    pub positions: Vec<usize>,
}

impl DescentSet {
    pub fn new(n: usize, mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        positions.dedup();
        assert!(
            positions.iter().all(|&d| d >= 1 && d < n),
            "descent positions must lie in 1..{n}, got {positions:?}"
        );
        DescentSet { n, positions }
    }

    pub fn from_composition(c: &Composition) -> Self {
        DescentSet {
            n: c.weight(),
            positions: c.descents(),
        }
    }

    pub fn to_composition(&self) -> Composition {
        Composition::from_descents(self.n, &self.positions)
    }

    pub fn contains(&self, d: usize) -> bool {
        self.positions.binary_search(&d).is_ok()
    }
}

/// Descent set shifted down by one: `{d - 1 : d a descent}`. May contain 0.
pub fn descent_set_minus(c: &Composition) -> Vec<usize> {
    c.descents().iter().map(|&d| d - 1).collect()
}

/// All compositions of `n` in display order; `compositions(0)` is the empty
/// composition alone.
pub fn compositions(n: usize) -> Vec<Composition> {
    if n == 0 {
        return vec![Composition::empty()];
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    for idx in 0..(1usize << (n - 1)) {
        let descents: Vec<usize> = (1..n).filter(|d| idx >> (n - 1 - d) & 1 == 1).collect();
        out.push(Composition::from_descents(n, &descents));
    }
    out
}

/// All compositions refining `c` (splitting its parts), `c` included, in
/// display order.
pub fn finer_refinements(c: &Composition) -> Vec<Composition> {
    let n = c.weight();
    let base = c.descents();
    let free: Vec<usize> = (1..n).filter(|d| !base.contains(d)).collect();
    let mut out: Vec<Composition> = subsets(&free)
        .into_iter()
        .map(|extra| {
            let mut ds = base.clone();
            ds.extend(extra);
            ds.sort_unstable();
            Composition::from_descents(n, &ds)
        })
        .collect();
    out.sort_by_key(Composition::order_index);
    out
}

/// All compositions that `c` refines (merging adjacent parts), `c` included,
/// in display order.
pub fn coarsenings(c: &Composition) -> Vec<Composition> {
    let n = c.weight();
    let mut out: Vec<Composition> = subsets(&c.descents())
        .into_iter()
        .map(|ds| Composition::from_descents(n, &ds))
        .collect();
    out.sort_by_key(Composition::order_index);
    out
}

/// The refinement interval between two comparable compositions, endpoints
/// included, in display order. Panics if neither refines the other.
pub fn lattice_interval(a: &Composition, b: &Composition) -> Vec<Composition> {
    let (coarse, fine) = if a.refines(b) {
        (b, a)
    } else if b.refines(a) {
        (a, b)
    } else {
        panic!("incomparable interval endpoints {a} and {b}");
    };
    let n = coarse.weight();
    let base = coarse.descents();
    let fine_ds = fine.descents();
    let free: Vec<usize> = fine_ds.iter().copied().filter(|d| !base.contains(d)).collect();
    let mut out: Vec<Composition> = subsets(&free)
        .into_iter()
        .map(|extra| {
            let mut ds = base.clone();
            ds.extend(extra);
            ds.sort_unstable();
            Composition::from_descents(n, &ds)
        })
        .collect();
    out.sort_by_key(Composition::order_index);
    out
}

fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(1 << items.len());
    for mask in 0..(1usize << items.len()) {
        out.push(
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &d)| d)
                .collect(),
        );
    }
    out
}

/// Cuts `j` at the boundaries of `along` (both compositions of the same `n`),
/// splitting any part of `j` that straddles a boundary. Returns one
/// composition per part of `along`, the k-th summing to that part.
pub fn i_decomposition(j: &Composition, along: &Composition) -> Vec<Composition> {
    assert_eq!(
        j.weight(),
        along.weight(),
        "block decomposition needs equal weights, got {j} and {along}"
    );
    let mut blocks = Vec::with_capacity(along.len());
    let mut block = Vec::new();
    let mut cuts = along.parts().iter().scan(0, |acc, &p| {
        *acc += p;
        Some(*acc)
    });
    let mut next_cut = match cuts.next() {
        Some(c) => c,
        None => return blocks,
    };
    let mut pos = 0;
    for &p in j.parts() {
        let mut rem = p;
        while rem > 0 {
            let take = rem.min(next_cut - pos);
            block.push(take);
            pos += take;
            rem -= take;
            if pos == next_cut {
                blocks.push(Composition::new(std::mem::take(&mut block)));
                if let Some(c) = cuts.next() {
                    next_cut = c;
                }
            }
        }
    }
    blocks
}

/// The q-exponent statistic of the pair `(i, j)`: decompose `j` along `i` and
/// sum, over the blocks, everything but each block's last part. Zero exactly
/// when every descent of `j` is a descent of `i`.
pub fn statistic_d(i: &Composition, j: &Composition) -> usize {
    let blocks = i_decomposition(j, i);
    let lasts: usize = blocks.iter().map(|b| b.last().unwrap_or(0)).sum();
    j.weight() - lasts
}
