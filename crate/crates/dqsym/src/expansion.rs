//! Expansion of homogeneous elements in the colored ribbon and elementary
//! bases, conversion between the two, and the closed-form predictions those
//! expansions are checked against.
//!
//! A homogeneous element lies in the span of the ribbon classes exactly when
//! its coefficient is constant on every double class (descent class on the
//! permutation row, saillance class on the color row). [`expand_in_ribbon`]
//! verifies that and reports a witness pair on failure. Conversion to the
//! elementary basis inverts the refinement-sum definition by inclusion and
//! exclusion over the boolean lattice of descent sets.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compositions::{
    compositions, descent_set_minus, finer_refinements, statistic_d, Composition,
};
use crate::fqsym::{Biword, Element};
use crate::identities::{elementary_class, ribbon_class};
use crate::qpoly::QPoly;
use crate::words::{descent_composition, permutations, saillance_composition, Permutation};

/// The two bases expansions are expressed in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "R")]
    Ribbon,
    #[serde(rename = "Lambda")]
    Elementary,
}

impl Basis {
    /// Short letter used in rendered sums.
    fn letter(self) -> &'static str {
        match self {
            Basis::Ribbon => "R",
            Basis::Elementary => "L",
        }
    }
}

/// One rendered term of an expansion, for JSON input and output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub i: Composition,
    pub j: Composition,
    pub coeff: QPoly,
}

/// An exact expansion `sum of coeff(i, j) * basis_class(i, j)` of a
/// homogeneous element of weight `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    n: usize,
    basis: Basis,
    coeffs: BTreeMap<(Composition, Composition), QPoly>,
}

impl Expansion {
    pub fn new(n: usize, basis: Basis) -> Self {
        Expansion { n, basis, coeffs: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Adds to the coefficient of the `(i, j)` class, dropping cancellations.
    pub fn add(&mut self, i: Composition, j: Composition, c: QPoly) {
        if c.is_zero() {
            return;
        }
        assert!(
            i.weight() == self.n && j.weight() == self.n,
            "class ({i}, {j}) does not have weight {}",
            self.n
        );
        let key = (i, j);
        let sum = &self.coeffs.get(&key).cloned().unwrap_or_else(QPoly::zero) + &c;
        if sum.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, sum);
        }
    }

    /// Coefficient of the `(i, j)` class, zero if absent.
    pub fn coeff(&self, i: &Composition, j: &Composition) -> QPoly {
        self.coeffs
            .get(&(i.clone(), j.clone()))
            .cloned()
            .unwrap_or_else(QPoly::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms sorted by the display order of both indices.
    pub fn entries(&self) -> Vec<(&Composition, &Composition, &QPoly)> {
        let mut out: Vec<_> = self.coeffs.iter().map(|((i, j), c)| (i, j, c)).collect();
        out.sort_by_key(|(i, j, _)| (i.order_index(), j.order_index()));
        out
    }

    /// Rebuilds the element the expansion stands for.
    pub fn to_element(&self) -> Element {
        let mut out = Element::zero();
        for (i, j, c) in self.entries() {
            let class = match self.basis {
                Basis::Ribbon => ribbon_class(i, j),
                Basis::Elementary => elementary_class(i, j),
            };
            out = &out + &class.scale(c);
        }
        out
    }

    /// Canonical text rendering, `R_211^(13)` style terms joined with signs.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let letter = self.basis.letter();
        let mut out = String::new();
        for (i, j, c) in self.entries() {
            let body = format!("{letter}_{i}^({j})");
            let cs = c.cell_string();
            let t = if cs == "1" {
                body
            } else if cs == "-1" {
                format!("-{body}")
            } else if cs.chars().skip(1).any(|ch| ch == '+') || has_interior_sign(&cs) {
                format!("({cs})·{body}")
            } else {
                format!("{cs}·{body}")
            };
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

    /// The terms as JSON-ready records in display order.
    pub fn to_records(&self) -> Vec<ExpansionRecord> {
        self.entries()
            .into_iter()
            .map(|(i, j, c)| ExpansionRecord { i: i.clone(), j: j.clone(), coeff: c.clone() })
            .collect()
    }

    /// Rebuilds an expansion from records, summing duplicates.
    pub fn from_records(n: usize, basis: Basis, records: Vec<ExpansionRecord>) -> Expansion {
        let mut out = Expansion::new(n, basis);
        for r in records {
            out.add(r.i, r.j, r.coeff);
        }
        out
    }
}

fn has_interior_sign(s: &str) -> bool {
    let mut depth = 0usize;
    for (idx, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if idx > 0 && depth == 0 => return true,
            _ => {}
        }
    }
    false
}

/// Why an element is not a ribbon-class combination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanFailure {
    /// A term's color row is not a permutation, so it lies in no class.
    NonPermutationColors { biword: Biword },
    /// Two biwords of the same double class carry different coefficients
    /// (a missing class member is reported with coefficient zero).
    UnevenClass {
        class: (Composition, Composition),
        first: (Biword, QPoly),
        second: (Biword, QPoly),
    },
}

impl fmt::Display for SpanFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpanFailure::NonPermutationColors { biword } => {
                write!(f, "term {biword} has a non-permutation color row")
            }
            SpanFailure::UnevenClass { class, first, second } => write!(
                f,
                "class ({}, {}) is uneven: {} has coefficient {} but {} has {}",
                class.0, class.1, first.0, first.1, second.0, second.1
            ),
        }
    }
}

impl std::error::Error for SpanFailure {}

/// Expands a homogeneous element in the ribbon classes, or explains why it
/// is not in their span. Panics on inhomogeneous input; the zero element
/// expands to the empty expansion.
pub fn expand_in_ribbon(e: &Element) -> Result<Expansion, SpanFailure> {
    if e.is_zero() {
        return Ok(Expansion::new(0, Basis::Ribbon));
    }
    let n = e
        .homogeneous_weight()
        .expect("ribbon expansion needs a homogeneous element");
    assert!(n >= 1, "ribbon expansion needs positive weight");

    // Group the full symmetric group by descent and saillance composition
    // once, to know every class size and enumerate missing members.
    let mut descent_classes: BTreeMap<Composition, Vec<Permutation>> = BTreeMap::new();
    let mut saillance_classes: BTreeMap<Composition, Vec<Permutation>> = BTreeMap::new();
    for p in permutations(n) {
        descent_classes.entry(descent_composition(&p)).or_default().push(p.clone());
        saillance_classes.entry(saillance_composition(&p)).or_default().push(p);
    }

    struct Seen {
        first: (Biword, QPoly),
        count: usize,
    }
    let mut seen: BTreeMap<(Composition, Composition), Seen> = BTreeMap::new();
    for (bw, c) in e.terms() {
        let Some(color_perm) = Permutation::try_new(bw.colors().letters().to_vec()) else {
            return Err(SpanFailure::NonPermutationColors { biword: bw.clone() });
        };
        let key = (descent_composition(bw.sigma()), saillance_composition(&color_perm));
        match seen.get_mut(&key) {
            None => {
                seen.insert(key, Seen { first: (bw.clone(), c.clone()), count: 1 });
            }
            Some(s) => {
                if &s.first.1 != c {
                    return Err(SpanFailure::UnevenClass {
                        class: key,
                        first: s.first.clone(),
                        second: (bw.clone(), c.clone()),
                    });
                }
                s.count += 1;
            }
        }
    }

    let mut out = Expansion::new(n, Basis::Ribbon);
    for ((i, j), s) in seen {
        let size = descent_classes[&i].len() * saillance_classes[&j].len();
        if s.count < size {
            // Some class member is absent, i.e. carries coefficient zero.
            let missing = descent_classes[&i]
                .iter()
                .flat_map(|t| {
                    saillance_classes[&j]
                        .iter()
                        .map(|sigma| Biword::new(t.clone(), sigma.word()))
                })
                .find(|bw| e.coeff(bw).is_zero())
                .expect("undersized class must have an absent member");
            return Err(SpanFailure::UnevenClass {
                class: (i, j),
                first: s.first,
                second: (missing, QPoly::zero()),
            });
        }
        out.add(i, j, s.first.1);
    }
    Ok(out)
}

/// The conjugate mirror: the reindexing under which elementary classes are
/// refinement sums of ribbon classes.
fn omega(i: &Composition) -> Composition {
    i.mirror().conjugate()
}

/// Rewrites a ribbon expansion in the elementary classes by inclusion and
/// exclusion over coarsenings.
pub fn ribbon_to_elementary(x: &Expansion) -> Expansion {
    assert_eq!(x.basis(), Basis::Ribbon, "input must be a ribbon expansion");
    let n = x.n();
    let mut out = Expansion::new(n, Basis::Elementary);
    if n == 0 {
        return out;
    }
    let js: Vec<Composition> =
        x.coeffs.keys().map(|(_, j)| j.clone()).collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
    for m in compositions(n) {
        let target = omega(&m);
        for j in &js {
            let mut c = QPoly::zero();
            for k in crate::compositions::coarsenings(&m) {
                let sign = if (m.len() - k.len()) % 2 == 0 { 1 } else { -1 };
                c = &c + &x.coeff(&k, j).scale(sign);
            }
            out.add(target.clone(), j.clone(), c);
        }
    }
    out
}

/// Expands each elementary class into ribbon classes over refinements.
pub fn elementary_to_ribbon(x: &Expansion) -> Expansion {
    assert_eq!(x.basis(), Basis::Elementary, "input must be an elementary expansion");
    let mut out = Expansion::new(x.n(), Basis::Ribbon);
    for (i, j, c) in x.entries() {
        for finer in finer_refinements(&omega(i)) {
            out.add(finer, j.clone(), c.clone());
        }
    }
    out
}

/// Closed form for the ribbon coefficient of the degree-`n` full sum on the
/// `(i, j)` class: zero unless the descents of `i` not preceded by another
/// descent all lie in `j`, else `(-q)` to the descents of `i` missed by `j`
/// times `(1-q)` to the shared descents.
pub fn sigma_ribbon_coefficient(i: &Composition, j: &Composition) -> QPoly {
    assert_eq!(i.weight(), j.weight(), "classes need equal weights");
    let des_i = i.descents();
    let minus = descent_set_minus(i);
    let des_j = j.descents();
    let fresh: Vec<usize> = des_i.iter().copied().filter(|d| !minus.contains(d)).collect();
    if !fresh.iter().all(|d| des_j.contains(d)) {
        return QPoly::zero();
    }
    let missed = des_i.iter().filter(|d| !des_j.contains(d)).count();
    let shared = des_i.iter().filter(|d| des_j.contains(d)).count();
    let mut out = QPoly::neg_q_power(missed);
    for _ in 0..shared {
        out = &out * &QPoly::from_coeffs(vec![1, -1]);
    }
    out
}

/// Predicted elementary expansion of the degree-`n` full sum: every class
/// `(i, j)` with coefficient `(-1)^(n - parts of i) * q^D(i, j)`.
pub fn sigma_elementary_prediction(n: usize) -> Expansion {
    assert!(n >= 1, "prediction starts at degree 1");
    let mut out = Expansion::new(n, Basis::Elementary);
    for i in compositions(n) {
        let sign = if (n - i.len()) % 2 == 0 { 1 } else { -1 };
        for j in compositions(n) {
            let c = QPoly::monomial(sign, statistic_d(&i, &j));
            out.add(i.clone(), j.clone(), c);
        }
    }
    out
}

/// Merges the parts of `i` across every junction whose following gap, up to
/// the next junction, contains no descent of `j`. The result names the class
/// sum the pair `(i, j)` contributes to.
pub fn glued_class(i: &Composition, j: &Composition) -> Composition {
    assert_eq!(i.weight(), j.weight(), "glue needs equal weights");
    let n = i.weight();
    let i_des = i.descents();
    let j_des = j.descents();
    let mut kept = Vec::new();
    for (idx, &d) in i_des.iter().enumerate() {
        let next = i_des.get(idx + 1).copied().unwrap_or(n);
        if (d..next).any(|x| j_des.contains(&x)) {
            kept.push(d);
        }
    }
    Composition::from_descents(n, &kept)
}

/// The class pairs supporting the elementary expansion of the class sum of
/// `l`: `i` refines `l`; every junction gap of `l` meets the descents of
/// `j`; and in each block of the decompositions along `l`, the first part of
/// `i`'s block plus the last part of `j`'s block exceeds the block weight.
pub fn p_class_pair_support(l: &Composition) -> Vec<(Composition, Composition)> {
    assert!(!l.is_empty(), "support of the empty composition");
    let n = l.weight();
    let cuts = l.descents();
    let mut out = Vec::new();
    for i in compositions(n) {
        if !i.refines(l) {
            continue;
        }
        let i_blocks = crate::compositions::i_decomposition(&i, l);
        'next_j: for j in compositions(n) {
            let j_des = j.descents();
            for (idx, &d) in cuts.iter().enumerate() {
                let next = cuts.get(idx + 1).copied().unwrap_or(n);
                if !(d..next).any(|x| j_des.contains(&x)) {
                    continue 'next_j;
                }
            }
            let j_blocks = crate::compositions::i_decomposition(&j, l);
            for ((ib, jb), &lk) in i_blocks.iter().zip(&j_blocks).zip(l.parts()) {
                if ib.first().unwrap() + jb.last().unwrap() <= lk {
                    continue 'next_j;
                }
            }
            out.push((i.clone(), j.clone()));
        }
    }
    out
}

/// Predicted elementary expansion of the class sum of `l`: the supported
/// pairs with the same sign and q-exponent as the full sum.
pub fn p_class_elementary_prediction(l: &Composition) -> Expansion {
    let n = l.weight();
    let mut out = Expansion::new(n, Basis::Elementary);
    for (i, j) in p_class_pair_support(l) {
        let sign = if (n - i.len()) % 2 == 0 { 1 } else { -1 };
        let c = QPoly::monomial(sign, statistic_d(&i, &j));
        out.add(i, j, c);
    }
    out
}
