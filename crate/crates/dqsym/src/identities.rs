//! The q-bracketing elements and the colored ribbon and elementary bases.
//!
//! Every color word `u` of length `p` yields a bracketing element: nest the
//! q-commutator over the biletters `(u_1 / 1), .., (u_p / p)`, multiplying
//! biletters by concatenation of both rows. Expanding gives `2^(p-1)` biword
//! terms with coefficients `(-q)^(number of left insertions)`. A permutation
//! gets the product of the bracketing elements of its initially dominated
//! blocks, and summing those products over a saillance class, or over the
//! whole symmetric group, produces the elements whose basis expansions the
//! [`crate::verify`] suite checks.

use itertools::Itertools;

use crate::compositions::{compositions, finer_refinements, lattice_interval, Composition};
use crate::fqsym::{Biword, Element};
use crate::qpoly::QPoly;
use crate::words::{
    initially_dominated_factorization, permutations, permutations_with_descents,
    permutations_with_saillance, Permutation, Word,
};

/// The bracketing element of a color word: the expansion of the nested
/// q-commutator of its biletters. Letters may repeat. Panics on the empty
/// word.
pub fn psi_word(u: &Word) -> Element {
    assert!(!u.is_empty(), "bracketing element of the empty word");
    let letters = u.letters();
    // Terms as (coefficient, color row, position row); the k-th biletter
    // either appends (keeping the coefficient) or prepends (times -q).
    let mut terms = vec![(QPoly::one(), vec![letters[0]], vec![1u8])];
    for (k, &a) in letters.iter().enumerate().skip(1) {
        let pos = (k + 1) as u8;
        let mut next = Vec::with_capacity(terms.len() * 2);
        for (c, tops, bots) in terms {
            let mut tops_r = tops.clone();
            tops_r.push(a);
            let mut bots_r = bots.clone();
            bots_r.push(pos);
            next.push((c.clone(), tops_r, bots_r));

            let mut tops_l = vec![a];
            tops_l.extend(&tops);
            let mut bots_l = vec![pos];
            bots_l.extend(&bots);
            next.push((&c * &QPoly::monomial(-1, 1), tops_l, bots_l));
        }
        terms = next;
    }
    let mut out = Element::zero();
    for (c, tops, bots) in terms {
        out.add_term(Biword::new(Permutation::new(bots), Word::new(tops)), c);
    }
    out
}

/// The bracketing element of a permutation: the algebra product of the
/// bracketing elements of its initially dominated blocks.
pub fn psi_perm(s: &Permutation) -> Element {
    assert!(!s.is_empty(), "bracketing element of the empty permutation");
    initially_dominated_factorization(&s.word())
        .iter()
        .map(psi_word)
        .fold(Element::unit(), |acc, f| &acc * &f)
}

/// The sum of the bracketing elements of all permutations of `{1, .., n}`.
pub fn sigma_n(n: usize) -> Element {
    assert!(n >= 1, "the full sum starts at degree 1");
    let mut out = Element::zero();
    for s in permutations(n) {
        out = &out + &psi_perm(&s);
    }
    out
}

/// The sum of the bracketing elements over the saillance class of `l`.
pub fn p_class(l: &Composition) -> Element {
    assert!(!l.is_empty(), "class sum of the empty composition");
    let mut out = Element::zero();
    for s in permutations_with_saillance(l) {
        out = &out + &psi_perm(&s);
    }
    out
}

/// The colored ribbon basis element: all biwords with a permutation of
/// descent composition `i` on the bottom row and one of saillance
/// composition `j` as the color row, each with coefficient one.
pub fn ribbon_class(i: &Composition, j: &Composition) -> Element {
    assert_eq!(
        i.weight(),
        j.weight(),
        "ribbon class needs equal weights, got {i} and {j}"
    );
    assert!(!i.is_empty(), "ribbon class of the empty composition");
    let bottoms = permutations_with_descents(i);
    let tops = permutations_with_saillance(j);
    let mut out = Element::zero();
    for t in &bottoms {
        for s in &tops {
            out.add_term(Biword::new(t.clone(), s.word()), QPoly::one());
        }
    }
    out
}

/// The colored elementary basis element: the sum of the ribbon classes over
/// all refinements of the conjugate mirror of `i`, colors fixed to class `j`.
pub fn elementary_class(i: &Composition, j: &Composition) -> Element {
    let omega = i.mirror().conjugate();
    let mut out = Element::zero();
    for finer in finer_refinements(&omega) {
        out = &out + &ribbon_class(&finer, j);
    }
    out
}

/// The sum of elementary classes with color classes ranging over the
/// refinement interval between `lo` and `hi`.
pub fn elementary_interval(i: &Composition, lo: &Composition, hi: &Composition) -> Element {
    let mut out = Element::zero();
    for j in lattice_interval(lo, hi) {
        out = &out + &elementary_class(i, &j);
    }
    out
}

/// Closed ribbon form of the single-block class sum of degree `n`: over
/// `k = 1, .., n`, the hooks `(1^(n-k), k)` colored by every class `j · (k)`
/// with `j` a composition of `n - k`, weighted by `(-q)^(n-k)`.
pub fn pn_closed_ribbon(n: usize) -> Element {
    assert!(n >= 1, "closed form starts at degree 1");
    let mut out = Element::zero();
    for k in 1..=n {
        let coeff = QPoly::neg_q_power(n - k);
        let mut parts = vec![1; n - k];
        parts.push(k);
        let hook = Composition::new(parts);
        let block = Composition::new(vec![k]);
        for j in compositions(n - k) {
            let colors = j.concat(&block);
            out = &out + &ribbon_class(&hook, &colors).scale(&coeff);
        }
    }
    out
}

/// Renames color `c` to `into[c - 1]` in every term; `into` must be strictly
/// increasing so the renaming is order-preserving.
pub fn relabel_colors(e: &Element, into: &[u8]) -> Element {
    assert!(
        into.windows(2).all(|w| w[0] < w[1]),
        "color target must be strictly increasing, got {into:?}"
    );
    let mut out = Element::zero();
    for (bw, coeff) in e.terms() {
        let colors: Vec<u8> = bw
            .colors()
            .letters()
            .iter()
            .map(|&c| {
                assert!(
                    c as usize <= into.len(),
                    "color {c} outside the {}-letter alphabet",
                    into.len()
                );
                into[c as usize - 1]
            })
            .collect();
        out.add_term(Biword::new(bw.sigma().clone(), Word::new(colors)), coeff.clone());
    }
    out
}

/// The right dendriform product extended multilinearly over color alphabets:
/// both operands are homogeneous with colors in their own alphabets, and the
/// result sums the word-level right products over every order-preserving
/// splitting of the joint alphabet that sends the largest color to the right
/// factor.
pub fn colored_right_dend(a: &Element, b: &Element) -> Element {
    if a.is_zero() || b.is_zero() {
        return Element::zero();
    }
    let m = a.homogeneous_weight().expect("left operand must be homogeneous");
    let w = b.homogeneous_weight().expect("right operand must be homogeneous");
    assert!(m >= 1 && w >= 1, "dendriform halves need positive weights");
    let n = (m + w) as u8;
    let mut out = Element::zero();
    for mut right in (1..n).combinations(w - 1) {
        right.push(n);
        let left: Vec<u8> = (1..=n).filter(|v| !right.contains(v)).collect();
        let a_rel = relabel_colors(a, &left);
        let b_rel = relabel_colors(b, &right);
        out = &out + &a_rel.biword_right(&b_rel);
    }
    out
}
