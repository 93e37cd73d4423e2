//! The colored free quasi-symmetric algebra on biwords.
//!
//! A [`Biword`] is a color word over a permutation of the same length,
//! written `(colors / permutation)`. An [`Element`] is a finite
//! `Z[q]`-linear combination of biwords. The product concatenates color rows
//! and convolves permutation rows; restricting the convolution by the
//! position of the maximal letter splits it into the left and right
//! dendriform half-products, from which the q-bracket and q-pre-Lie
//! operations are built. A second, word-level dendriform pair acts on the
//! color rows instead and is used when biwords stand for letter-disjoint
//! fragments of a larger alphabet.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::compositions::Composition;
use crate::qpoly::QPoly;
use crate::words::{
    convolution, permutations_with_descents, word_left_dend, word_right_dend, Permutation, Word,
};

/// A color word over a permutation of the same length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Biword {
    sigma: Permutation,
    colors: Word,
}

impl Biword {
    /// Pairs a permutation with a color word of the same length.
    pub fn new(sigma: Permutation, colors: Word) -> Self {
        assert_eq!(
            sigma.len(),
            colors.len(),
            "biword rows must have equal length: {sigma} vs {colors}"
        );
        Biword { sigma, colors }
    }

    pub fn empty() -> Self {
        Biword {
            sigma: Permutation::empty(),
            colors: Word::empty(),
        }
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn colors(&self) -> &Word {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }
}

impl PartialOrd for Biword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Biword {
    /// Orders by length, then permutation, then colors; this is the term
    /// order used by every rendering.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.sigma.letters().cmp(other.sigma.letters()))
            .then_with(|| self.colors.letters().cmp(other.colors.letters()))
    }
}

impl fmt::Display for Biword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "(/)");
        }
        write!(f, "({}/{})", self.colors, self.sigma)
    }
}

/// One rendered term of an element, for JSON input and output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub sigma: Permutation,
    pub colors: Word,
    pub coeff: QPoly,
}

/// A `Z[q]`-linear combination of biwords; zero coefficients are never
/// stored, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<Biword, QPoly>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    /// The unit: the empty biword with coefficient one.
    pub fn unit() -> Self {
        Element::from_term(Biword::empty(), QPoly::one())
    }

    pub fn from_biword(bw: Biword) -> Self {
        Element::from_term(bw, QPoly::one())
    }

    pub fn from_term(bw: Biword, coeff: QPoly) -> Self {
        let mut e = Element::zero();
        e.add_term(bw, coeff);
        e
    }

    /// Adds `coeff * bw`, dropping the term if the total cancels.
    pub fn add_term(&mut self, bw: Biword, coeff: QPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(bw) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the canonical order (length, permutation, colors).
    pub fn terms(&self) -> impl Iterator<Item = (&Biword, &QPoly)> {
        self.terms.iter()
    }

    /// Coefficient of a biword, zero if absent.
    pub fn coeff(&self, bw: &Biword) -> QPoly {
        self.terms.get(bw).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &QPoly) -> Element {
        let mut out = Element::zero();
        for (bw, coeff) in &self.terms {
            out.add_term(bw.clone(), coeff * c);
        }
        out
    }

    /// Specializes `q` to an integer, keeping the surviving terms.
    pub fn eval_q(&self, v: i64) -> Element {
        let mut out = Element::zero();
        for (bw, coeff) in &self.terms {
            out.add_term(bw.clone(), QPoly::constant(coeff.eval(v)));
        }
        out
    }

    /// The common biword length, if every term has the same one. `None` for
    /// the zero element or mixed lengths.
    pub fn homogeneous_weight(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let n = it.next()?.len();
        it.all(|bw| bw.len() == n).then_some(n)
    }

    /// The algebra product: color rows concatenate, permutation rows
    /// convolve.
    pub fn product(&self, rhs: &Element) -> Element {
        let mut out = Element::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let coeff = ca * cb;
                let colors = a.colors.concat(&b.colors);
                for gamma in convolution(&a.sigma, &b.sigma) {
                    out.add_term(Biword::new(gamma, colors.clone()), coeff.clone());
                }
            }
        }
        out
    }

    fn dend_split(&self, rhs: &Element, keep_left: bool) -> Element {
        let mut out = Element::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                assert!(
                    !a.is_empty() && !b.is_empty(),
                    "dendriform half-products need nonempty biwords"
                );
                let coeff = ca * cb;
                let colors = a.colors.concat(&b.colors);
                let n = (a.len() + b.len()) as u8;
                for gamma in convolution(&a.sigma, &b.sigma) {
                    let max_pos = gamma.letters().iter().position(|&v| v == n).unwrap();
                    if (max_pos < a.len()) == keep_left {
                        out.add_term(Biword::new(gamma, colors.clone()), coeff.clone());
                    }
                }
            }
        }
        out
    }

    /// Left dendriform half of the product: convolution terms whose maximal
    /// letter lands in the left factor's positions. Panics if either operand
    /// contains the empty biword.
    pub fn left_dend(&self, rhs: &Element) -> Element {
        self.dend_split(rhs, true)
    }

    /// Right dendriform half: the complementary terms, maximal letter in the
    /// right factor's positions. Panics if either operand contains the empty
    /// biword.
    pub fn right_dend(&self, rhs: &Element) -> Element {
        self.dend_split(rhs, false)
    }

    /// The q-commutator `self * rhs - q * rhs * self`.
    pub fn q_bracket(&self, rhs: &Element) -> Element {
        &self.product(rhs) - &rhs.product(self).scale(&QPoly::q())
    }

    /// The q-pre-Lie operation `self > rhs - q * (rhs < self)` built from
    /// the dendriform halves.
    pub fn pre_lie_q(&self, rhs: &Element) -> Element {
        &self.right_dend(rhs) - &rhs.left_dend(self).scale(&QPoly::q())
    }

    fn biword_dend(&self, rhs: &Element, left: bool) -> Element {
        let mut out = Element::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                assert!(
                    !a.is_empty() && !b.is_empty(),
                    "dendriform half-products need nonempty biwords"
                );
                let gate = if left {
                    word_left_dend(&a.colors, &b.colors)
                } else {
                    word_right_dend(&a.colors, &b.colors)
                };
                let Some(colors) = gate else { continue };
                let coeff = ca * cb;
                for gamma in convolution(&a.sigma, &b.sigma) {
                    out.add_term(Biword::new(gamma, colors.clone()), coeff.clone());
                }
            }
        }
        out
    }

    /// Word-level left dendriform product: gates on the color rows' maxima
    /// and convolves the permutation rows. Intended for biwords whose color
    /// rows are letter-disjoint fragments; on equal color maxima both halves
    /// keep the term. Panics on empty-biword operands.
    pub fn biword_left(&self, rhs: &Element) -> Element {
        self.biword_dend(rhs, true)
    }

    /// Word-level right dendriform product; see [`Element::biword_left`].
    pub fn biword_right(&self, rhs: &Element) -> Element {
        self.biword_dend(rhs, false)
    }

    /// Canonical text rendering: terms in canonical order joined with signs,
    /// coefficients in their factored cell form.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (bw, coeff) in &self.terms {
            let t = term_string(coeff, bw);
            if out.is_empty() {
                out = t;
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }

    /// The terms as JSON-ready records, in canonical order.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(bw, coeff)| TermRecord {
                sigma: bw.sigma.clone(),
                colors: bw.colors.clone(),
                coeff: coeff.clone(),
            })
            .collect()
    }

    /// Rebuilds an element from records, summing duplicates.
    pub fn from_records(records: Vec<TermRecord>) -> Element {
        let mut out = Element::zero();
        for r in records {
            out.add_term(Biword::new(r.sigma, r.colors), r.coeff);
        }
        out
    }
}

fn term_string(coeff: &QPoly, bw: &Biword) -> String {
    if bw.is_empty() {
        return coeff.cell_string();
    }
    let cs = coeff.cell_string();
    if cs == "1" {
        return bw.to_string();
    }
    if cs == "-1" {
        return format!("-{bw}");
    }
    let cs = if needs_parens(&cs) { format!("({cs})") } else { cs };
    format!("{cs}·{bw}")
}

/// True when the rendered coefficient has a top-level sign after its head
/// and would be ambiguous as a bare factor (`1-q` yes, `-q(1-q)` no).
fn needs_parens(s: &str) -> bool {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if i > 0 && depth == 0 => return true,
            _ => {}
        }
    }
    false
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (bw, coeff) in &rhs.terms {
            out.add_term(bw.clone(), coeff.clone());
        }
        out
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        for (bw, coeff) in &rhs.terms {
            out.add_term(bw.clone(), -coeff);
        }
        out
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scale(&QPoly::constant(-1))
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.product(rhs)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// The generator of color `c`: the single biletter `(c / 1)`.
pub fn generator(c: u8) -> Element {
    Element::from_biword(Biword::new(Permutation::identity(1), Word::new(vec![c])))
}

/// The uncolored ribbon of `i`: the sum of the descent class of `i` with
/// every color fixed to the sentinel color 1.
pub fn ribbon(i: &Composition) -> Element {
    let colors = Word::new(vec![1; i.weight()]);
    let mut out = Element::zero();
    for p in permutations_with_descents(i) {
        out.add_term(Biword::new(p, colors.clone()), QPoly::one());
    }
    out
}

/// The degree-`n` power-sum analog: the alternating sum of hook ribbons
/// `(1^k, n-k)` with sign `(-1)^k`.
pub fn psi_ncsf(n: usize) -> Element {
    assert!(n >= 1, "power sums start at degree 1");
    let mut out = Element::zero();
    for k in 0..n {
        let mut parts = vec![1; k];
        parts.push(n - k);
        let sign = QPoly::constant(if k % 2 == 0 { 1 } else { -1 });
        out = &out + &ribbon(&Composition::new(parts)).scale(&sign);
    }
    out
}
