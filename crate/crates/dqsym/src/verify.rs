//! Named verification suites that recompute the engine's identities from
//! scratch at a given degree and report one result per check.
//!
//! Every check compares two independent computations: a brute-force oracle
//! (expanding bracketing elements term by term) against a closed formula or
//! a structural recursion. Checks return witnesses on failure instead of
//! panicking, so a run always produces a full report.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::compositions::{compositions, Composition};
use crate::expansion::{
    expand_in_ribbon, glued_class, p_class_elementary_prediction, p_class_pair_support,
    ribbon_to_elementary, sigma_elementary_prediction, sigma_ribbon_coefficient, Expansion,
};
use crate::fqsym::{Biword, Element};
use crate::identities::{colored_right_dend, p_class, pn_closed_ribbon, relabel_colors, sigma_n};
use crate::words::{permutations, Permutation};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: Option<String>,
}

impl CheckResult {
    fn pass(name: &'static str) -> Self {
        CheckResult { name, passed: true, detail: None }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        CheckResult { name, passed: false, detail: Some(detail) }
    }

    fn of(name: &'static str, mismatch: Option<String>) -> Self {
        match mismatch {
            None => CheckResult::pass(name),
            Some(d) => CheckResult::fail(name, d),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "ok   {}", self.name)
        } else {
            write!(f, "FAIL {}: {}", self.name, self.detail.as_deref().unwrap_or(""))
        }
    }
}

/// The named groups of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Theorem1,
    Theorem2,
    Corollary,
    BohnenblustSpitzer,
    Recursion,
    ClosedForms,
}

impl Suite {
    pub const NAMES: [&'static str; 7] =
        ["all", "theorem1", "theorem2", "corollary", "bs", "recursion", "closed_forms"];
}

/// Error for an unrecognized suite name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseSuiteError(String);

impl fmt::Display for ParseSuiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite {:?}, expected one of {}", self.0, Suite::NAMES.join(", "))
    }
}

impl std::error::Error for ParseSuiteError {}

impl FromStr for Suite {
    type Err = ParseSuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Suite::All),
            "theorem1" => Ok(Suite::Theorem1),
            "theorem2" => Ok(Suite::Theorem2),
            "corollary" => Ok(Suite::Corollary),
            "bs" => Ok(Suite::BohnenblustSpitzer),
            "recursion" => Ok(Suite::Recursion),
            "closed_forms" => Ok(Suite::ClosedForms),
            other => Err(ParseSuiteError(other.to_string())),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::All => "all",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Corollary => "corollary",
            Suite::BohnenblustSpitzer => "bs",
            Suite::Recursion => "recursion",
            Suite::ClosedForms => "closed_forms",
        };
        f.write_str(name)
    }
}

/// Runs the checks of `suite` at degree `n` and reports each outcome.
pub fn run_suite(suite: Suite, n: usize) -> Vec<CheckResult> {
    assert!(n >= 1, "verification starts at degree 1");
    let all = suite == Suite::All;
    let mut out = Vec::new();

    let needs_sigma = all
        || matches!(suite, Suite::Theorem1 | Suite::Corollary | Suite::BohnenblustSpitzer);
    let sigma = if needs_sigma { Some(sigma_n(n)) } else { None };

    if all || suite == Suite::Theorem1 {
        out.push(check_class_sums_partition(n, sigma.as_ref().unwrap()));
    }

    let needs_expansion = all || matches!(suite, Suite::Theorem1 | Suite::Corollary);
    let mut expansion = None;
    if needs_expansion {
        match expand_in_ribbon(sigma.as_ref().unwrap()) {
            Ok(x) => {
                out.push(CheckResult::pass("ribbon-expansion"));
                expansion = Some(x);
            }
            Err(w) => out.push(CheckResult::fail("ribbon-expansion", w.to_string())),
        }
    }

    if all || suite == Suite::Corollary {
        match &expansion {
            Some(x) => {
                out.push(check_coefficients_factor(x));
                out.push(check_ribbon_formula(n, x));
            }
            None => {
                let blocked = "blocked by the failed ribbon expansion".to_string();
                out.push(CheckResult::fail("ribbon-coefficients-factor", blocked.clone()));
                out.push(CheckResult::fail("ribbon-coefficient-formula", blocked));
            }
        }
    }

    if all || suite == Suite::Theorem1 {
        match &expansion {
            Some(x) => out.push(check_elementary_prediction(n, x)),
            None => out.push(CheckResult::fail(
                "elementary-prediction",
                "blocked by the failed ribbon expansion".to_string(),
            )),
        }
    }

    if all || suite == Suite::Theorem2 {
        out.push(check_class_predictions(n));
        let (partition, glue) = check_pair_partition_and_glue(n);
        out.push(partition);
        out.push(glue);
    }

    if all || suite == Suite::ClosedForms {
        out.push(check_closed_ribbon_form(n));
        out.push(check_single_block_support(n));
    }

    if all || suite == Suite::Recursion {
        out.push(check_recursion(n));
    }

    if all || suite == Suite::BohnenblustSpitzer {
        out.push(check_q_one_collapse(n, sigma.as_ref().unwrap()));
    }

    out
}

/// First differing biword between two elements, rendered for a report.
fn first_element_mismatch(a: &Element, b: &Element) -> Option<String> {
    let diff = a - b;
    let (bw, _) = diff.terms().next()?;
    Some(format!("at {bw}: {} vs {}", a.coeff(bw), b.coeff(bw)))
}

/// First differing class between two expansions, rendered for a report.
fn first_expansion_mismatch(a: &Expansion, b: &Expansion) -> Option<String> {
    let mut keys: Vec<(Composition, Composition)> = a
        .entries()
        .into_iter()
        .chain(b.entries())
        .map(|(i, j, _)| (i.clone(), j.clone()))
        .collect();
    keys.sort_by_key(|(i, j)| (i.order_index(), j.order_index()));
    keys.dedup();
    for (i, j) in keys {
        let ca = a.coeff(&i, &j);
        let cb = b.coeff(&i, &j);
        if ca != cb {
            return Some(format!("at ({i}, {j}): {ca} vs {cb}"));
        }
    }
    None
}

/// The class sums over all compositions of `n` add up to the full sum.
fn check_class_sums_partition(n: usize, sigma: &Element) -> CheckResult {
    let mut total = Element::zero();
    for l in compositions(n) {
        total = &total + &p_class(&l);
    }
    CheckResult::of("class-sums-partition", first_element_mismatch(&total, sigma))
}

/// Every ribbon coefficient of the full sum factors as a signed power of q
/// times a power of (1 - q).
fn check_coefficients_factor(x: &Expansion) -> CheckResult {
    for (i, j, c) in x.entries() {
        if c.try_factor().is_none() {
            return CheckResult::fail(
                "ribbon-coefficients-factor",
                format!("coefficient {c} at ({i}, {j}) does not factor"),
            );
        }
    }
    CheckResult::pass("ribbon-coefficients-factor")
}

/// The expanded ribbon coefficients match the closed formula on every class.
fn check_ribbon_formula(n: usize, x: &Expansion) -> CheckResult {
    for i in compositions(n) {
        for j in compositions(n) {
            let oracle = x.coeff(&i, &j);
            let formula = sigma_ribbon_coefficient(&i, &j);
            if oracle != formula {
                return CheckResult::fail(
                    "ribbon-coefficient-formula",
                    format!("at ({i}, {j}): expanded {oracle} vs formula {formula}"),
                );
            }
        }
    }
    CheckResult::pass("ribbon-coefficient-formula")
}

/// The elementary expansion of the full sum matches the sign and q-power
/// prediction on the whole grid.
fn check_elementary_prediction(n: usize, x: &Expansion) -> CheckResult {
    let oracle = ribbon_to_elementary(x);
    let predicted = sigma_elementary_prediction(n);
    CheckResult::of("elementary-prediction", first_expansion_mismatch(&oracle, &predicted))
}

/// Each class sum's elementary expansion matches its predicted support and
/// coefficients.
fn check_class_predictions(n: usize) -> CheckResult {
    for l in compositions(n) {
        let expanded = match expand_in_ribbon(&p_class(&l)) {
            Ok(x) => x,
            Err(w) => {
                return CheckResult::fail(
                    "class-elementary-predictions",
                    format!("class sum of {l} does not expand: {w}"),
                )
            }
        };
        let oracle = ribbon_to_elementary(&expanded);
        let predicted = p_class_elementary_prediction(&l);
        if let Some(d) = first_expansion_mismatch(&oracle, &predicted) {
            return CheckResult::fail(
                "class-elementary-predictions",
                format!("class sum of {l}: {d}"),
            );
        }
    }
    CheckResult::pass("class-elementary-predictions")
}

/// The predicted supports partition the composition grid, and gluing sends
/// each pair to the unique class sum supporting it.
fn check_pair_partition_and_glue(n: usize) -> (CheckResult, CheckResult) {
    let mut owner: std::collections::BTreeMap<(Composition, Composition), Composition> =
        std::collections::BTreeMap::new();
    let mut partition = None;
    'build: for l in compositions(n) {
        for pair in p_class_pair_support(&l) {
            if let Some(other) = owner.insert(pair.clone(), l.clone()) {
                partition = Some(format!(
                    "pair ({}, {}) supports both {other} and {l}",
                    pair.0, pair.1
                ));
                break 'build;
            }
        }
    }
    if partition.is_none() {
        let total = compositions(n).len() * compositions(n).len();
        if owner.len() != total {
            let missing = compositions(n)
                .iter()
                .cartesian_product(compositions(n).iter())
                .find(|(i, j)| !owner.contains_key(&((*i).clone(), (*j).clone())))
                .map(|(i, j)| format!("pair ({i}, {j}) supports no class sum"))
                .unwrap();
            partition = Some(missing);
        }
    }
    let partition_result = CheckResult::of("pair-supports-partition", partition);

    let mut glue = None;
    for i in compositions(n) {
        for j in compositions(n) {
            let glued = glued_class(&i, &j);
            match owner.get(&(i.clone(), j.clone())) {
                Some(l) if *l == glued => {}
                Some(l) => {
                    glue = Some(format!(
                        "pair ({i}, {j}) glues to {glued} but supports {l}"
                    ));
                }
                None => {
                    glue = Some(format!("pair ({i}, {j}) supports no class sum"));
                }
            }
            if glue.is_some() {
                break;
            }
        }
        if glue.is_some() {
            break;
        }
    }
    (partition_result, CheckResult::of("glue-consistency", glue))
}

/// The single-block class sum matches its alternating hook-ribbon form.
fn check_closed_ribbon_form(n: usize) -> CheckResult {
    let oracle = p_class(&Composition::new(vec![n]));
    let closed = pn_closed_ribbon(n);
    CheckResult::of("closed-ribbon-form", first_element_mismatch(&closed, &oracle))
}

/// The single-block support is cut out by one inequality: the first part of
/// the row plus the last part of the column exceeds the degree.
fn check_single_block_support(n: usize) -> CheckResult {
    let l = Composition::new(vec![n]);
    let support = p_class_pair_support(&l);
    for i in compositions(n) {
        for j in compositions(n) {
            let inside = support.contains(&(i.clone(), j.clone()));
            let predicted = i.first().unwrap() + j.last().unwrap() > n;
            if inside != predicted {
                return CheckResult::fail(
                    "single-block-support",
                    format!("pair ({i}, {j}): in support {inside}, inequality {predicted}"),
                );
            }
        }
    }
    let expanded = match expand_in_ribbon(&p_class(&l)) {
        Ok(x) => x,
        Err(w) => {
            return CheckResult::fail("single-block-support", format!("no expansion: {w}"))
        }
    };
    let oracle = ribbon_to_elementary(&expanded);
    let predicted = p_class_elementary_prediction(&l);
    match first_expansion_mismatch(&oracle, &predicted) {
        None => CheckResult::pass("single-block-support"),
        Some(d) => CheckResult::fail("single-block-support", d),
    }
}

/// Every multi-part class sum is the colored right half-product of its
/// prefix and its last block, under both equivalent splitting forms.
fn check_recursion(n: usize) -> CheckResult {
    for l in compositions(n) {
        if l.len() < 2 {
            continue;
        }
        let parts = l.parts();
        let prefix = p_class(&Composition::new(parts[..l.len() - 1].to_vec()));
        let last = p_class(&Composition::new(vec![parts[l.len() - 1]]));
        let oracle = p_class(&l);

        let dend = colored_right_dend(&prefix, &last);
        if let Some(d) = first_element_mismatch(&dend, &oracle) {
            return CheckResult::fail(
                "class-sum-recursion",
                format!("half-product form for {l}: {d}"),
            );
        }

        // Same splitting sum, written with the plain product: the gate of
        // the word-level half-product is forced open by the max constraint,
        // so the two forms must agree on class sums.
        let w = parts[l.len() - 1];
        let total = n as u8;
        let mut alt = Element::zero();
        for mut right in (1..total).combinations(w - 1) {
            right.push(total);
            let left: Vec<u8> = (1..=total).filter(|v| !right.contains(v)).collect();
            alt = &alt + &(&relabel_colors(&prefix, &left) * &relabel_colors(&last, &right));
        }
        if let Some(d) = first_element_mismatch(&alt, &oracle) {
            return CheckResult::fail(
                "class-sum-recursion",
                format!("splitting-product form for {l}: {d}"),
            );
        }
    }
    CheckResult::pass("class-sum-recursion")
}

/// At q = 1 the full sum collapses to all permutation colorings of the
/// identity permutation.
fn check_q_one_collapse(n: usize, sigma: &Element) -> CheckResult {
    let collapsed = sigma.eval_q(1);
    let mut expected = Element::zero();
    for s in permutations(n) {
        expected.add_term(
            Biword::new(Permutation::identity(n), s.word()),
            crate::qpoly::QPoly::one(),
        );
    }
    CheckResult::of("q-one-collapse", first_element_mismatch(&collapsed, &expected))
}
