//! Ribbon and elementary class expansions: exhaustive round trips in low
//! degrees, random round trips through the basis conversion, and witness
//! quality when an element leaves the span.

use dqsym::compositions::compositions;
use dqsym::expansion::{
    elementary_to_ribbon, expand_in_ribbon, ribbon_to_elementary, Basis, Expansion, SpanFailure,
};
use dqsym::identities::{elementary_class, p_class, ribbon_class, sigma_n};
use dqsym::{Biword, Element, QPoly};
use proptest::prelude::*;

#[test]
fn every_ribbon_class_expands_to_itself() {
    for n in 1..=5 {
        for i in compositions(n) {
            for j in compositions(n) {
                let x = expand_in_ribbon(&ribbon_class(&i, &j)).unwrap();
                assert_eq!(x.num_terms(), 1, "class ({i}, {j})");
                assert_eq!(x.coeff(&i, &j), QPoly::one(), "class ({i}, {j})");
            }
        }
    }
}

#[test]
fn every_elementary_class_expands_to_itself() {
    for n in 1..=5 {
        for i in compositions(n) {
            for j in compositions(n) {
                let r = expand_in_ribbon(&elementary_class(&i, &j)).unwrap();
                let l = ribbon_to_elementary(&r);
                assert_eq!(l.num_terms(), 1, "class ({i}, {j})");
                assert_eq!(l.coeff(&i, &j), QPoly::one(), "class ({i}, {j})");
            }
        }
    }
}

#[test]
fn class_sums_expand_with_factorable_coefficients() {
    for n in 1..=5 {
        for l in compositions(n) {
            let x = expand_in_ribbon(&p_class(&l)).unwrap();
            for (i, j, c) in x.entries() {
                assert!(
                    c.try_factor().is_some(),
                    "class sum of {l}, coefficient {c} at ({i}, {j})"
                );
            }
        }
    }
}

/// A random elementary expansion in degree 4 over a small coefficient pool.
fn random_elementary() -> impl Strategy<Value = Expansion> {
    let pool = [
        QPoly::one(),
        QPoly::constant(-1),
        QPoly::q(),
        QPoly::from_coeffs(vec![1, -1]),
        QPoly::from_coeffs(vec![0, 0, 1]),
    ];
    prop::collection::vec((0usize..64, 0usize..pool.len()), 0..12).prop_map(move |picks| {
        let index = compositions(4);
        let mut x = Expansion::new(4, Basis::Elementary);
        for (cell, c) in picks {
            let i = index[cell / index.len()].clone();
            let j = index[cell % index.len()].clone();
            x.add(i, j, pool[c].clone());
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conversion_round_trips_on_random_expansions(l in random_elementary()) {
        let r = elementary_to_ribbon(&l);
        prop_assert_eq!(ribbon_to_elementary(&r), l.clone());
        // Both expansions rebuild the same element, and re-expanding the
        // element recovers the ribbon form.
        let e = l.to_element();
        prop_assert_eq!(r.to_element(), e.clone());
        if !e.is_zero() {
            prop_assert_eq!(expand_in_ribbon(&e).unwrap(), r);
        }
    }
}

#[test]
fn sigma_expansions_rebuild_the_element() {
    for n in 1..=5 {
        let sigma = sigma_n(n);
        let r = expand_in_ribbon(&sigma).unwrap();
        assert_eq!(r.to_element(), sigma);
        assert_eq!(ribbon_to_elementary(&r).to_element(), sigma);
    }
}

#[test]
fn uneven_coefficient_yields_a_two_sided_witness() {
    let i = "21".parse().unwrap();
    let j = "111".parse().unwrap();
    let mut e = ribbon_class(&i, &j);
    // Scale one class member away from the rest.
    let (bw, _) = e.terms().next().map(|(b, c)| (b.clone(), c.clone())).unwrap();
    e.add_term(bw.clone(), QPoly::q());
    match expand_in_ribbon(&e) {
        Err(SpanFailure::UnevenClass { class, first, second }) => {
            assert_eq!(class, (i, j));
            assert_ne!(first.1, second.1);
            let witnesses = [first.0, second.0];
            assert!(witnesses.contains(&bw));
        }
        other => panic!("expected an uneven class, got {other:?}"),
    }
}

#[test]
fn stray_term_outside_any_class_is_reported() {
    let e = Element::from_biword(Biword::new(
        "123".parse().unwrap(),
        "121".parse::<dqsym::Word>().unwrap(),
    ));
    match expand_in_ribbon(&e) {
        Err(SpanFailure::NonPermutationColors { biword }) => {
            assert_eq!(biword.colors().letters(), &[1, 2, 1]);
        }
        other => panic!("expected a color complaint, got {other:?}"),
    }
}

#[test]
fn bracketing_elements_of_repeated_colors_leave_the_span() {
    // Bracketing a non-permutation color word produces terms whose color
    // rows repeat letters; they expand in no ribbon class.
    let e = dqsym::identities::psi_word(&"212".parse::<dqsym::Word>().unwrap());
    assert!(matches!(
        expand_in_ribbon(&e),
        Err(SpanFailure::NonPermutationColors { .. })
    ));
}

#[test]
fn zero_expands_to_the_empty_expansion() {
    assert!(expand_in_ribbon(&Element::zero()).unwrap().is_zero());
}

#[test]
#[should_panic(expected = "homogeneous")]
fn inhomogeneous_input_is_refused() {
    let mixed = &sigma_n(1) + &sigma_n(2);
    let _ = expand_in_ribbon(&mixed);
}
