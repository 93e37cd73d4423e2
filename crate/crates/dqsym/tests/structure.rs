//! Structural laws of the biword algebra: associativity, the two dendriform
//! splittings, and the classical chains they collapse to.

use dqsym::fqsym::{generator, psi_ncsf};
use dqsym::identities::psi_word;
use dqsym::words::permutations;
use dqsym::{Biword, Element, Permutation, Word};
use itertools::Itertools;
use proptest::prelude::*;

/// A biword of length 1 to `max_len` with colors drawn from a small alphabet.
fn biword(max_len: usize) -> impl Strategy<Value = Biword> {
    (1..=max_len).prop_flat_map(|len| {
        let sigma = Just((1..=len as u8).collect::<Vec<u8>>()).prop_shuffle();
        let colors = prop::collection::vec(1u8..=4, len);
        (sigma, colors)
            .prop_map(|(s, c)| Biword::new(Permutation::new(s), Word::new(c)))
    })
}

/// Three biwords whose color rows partition the letters 1 to 9, so their
/// color maxima never tie and the word-level splitting is a true splitting.
fn disjoint_triple() -> impl Strategy<Value = (Biword, Biword, Biword)> {
    let letters = Just((1u8..=9).collect::<Vec<u8>>()).prop_shuffle();
    let cuts = prop::sample::subsequence((1usize..9).collect::<Vec<usize>>(), 2);
    (letters, cuts).prop_flat_map(|(letters, cuts)| {
        let (a, b) = (cuts[0], cuts[1]);
        let groups = [&letters[..a], &letters[a..b], &letters[b..]];
        let bottoms: Vec<_> = groups
            .iter()
            .map(|g| Just((1..=g.len() as u8).collect::<Vec<u8>>()).prop_shuffle())
            .collect();
        let colors: Vec<Vec<u8>> = groups.iter().map(|g| g.to_vec()).collect();
        (bottoms[0].clone(), bottoms[1].clone(), bottoms[2].clone()).prop_map(
            move |(s0, s1, s2)| {
                let make = |s: Vec<u8>, c: &[u8]| {
                    Biword::new(Permutation::new(s), Word::new(c.to_vec()))
                };
                (
                    make(s0, &colors[0]),
                    make(s1, &colors[1]),
                    make(s2, &colors[2]),
                )
            },
        )
    })
}

fn elem(bw: &Biword) -> Element {
    Element::from_biword(bw.clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn halves_split_the_product(x in biword(3), y in biword(3)) {
        let (x, y) = (elem(&x), elem(&y));
        let sum = &x.left_dend(&y) + &x.right_dend(&y);
        prop_assert_eq!(sum, &x * &y);
    }

    #[test]
    fn product_is_associative(x in biword(3), y in biword(3), z in biword(3)) {
        let (x, y, z) = (elem(&x), elem(&y), elem(&z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn position_splitting_is_dendriform(x in biword(3), y in biword(3), z in biword(3)) {
        let (x, y, z) = (elem(&x), elem(&y), elem(&z));
        prop_assert_eq!(x.left_dend(&y).left_dend(&z), x.left_dend(&(&y * &z)));
        prop_assert_eq!(x.right_dend(&y).left_dend(&z), x.right_dend(&y.left_dend(&z)));
        prop_assert_eq!((&x * &y).right_dend(&z), x.right_dend(&y.right_dend(&z)));
    }

    #[test]
    fn color_splitting_halves_the_product_on_disjoint_rows(t in disjoint_triple()) {
        let (x, y, _) = t;
        let (x, y) = (elem(&x), elem(&y));
        let sum = &x.biword_left(&y) + &x.biword_right(&y);
        prop_assert_eq!(sum, &x * &y);
    }

    #[test]
    fn color_splitting_is_dendriform(t in disjoint_triple()) {
        let (x, y, z) = t;
        let (x, y, z) = (elem(&x), elem(&y), elem(&z));
        prop_assert_eq!(x.biword_left(&y).biword_left(&z), x.biword_left(&(&y * &z)));
        prop_assert_eq!(x.biword_right(&y).biword_left(&z), x.biword_right(&y.biword_left(&z)));
        prop_assert_eq!((&x * &y).biword_right(&z), x.biword_right(&y.biword_right(&z)));
    }
}

#[test]
fn unit_is_neutral() {
    let u = Element::unit();
    let x = &dqsym::identities::sigma_n(3) + &generator(2);
    assert_eq!(&u * &x, x);
    assert_eq!(&x * &u, x);
}

#[test]
fn iterated_right_halves_build_the_identity_biword() {
    let x = generator(1);
    let mut chain = x.clone();
    for n in 2..=8 {
        chain = chain.right_dend(&x);
        let expected = Element::from_biword(Biword::new(
            Permutation::identity(n),
            Word::new(vec![1; n]),
        ));
        assert_eq!(chain, expected, "degree {n}");
    }
}

#[test]
fn pre_lie_step_advances_the_power_sum_at_q_one() {
    let x = generator(1);
    for n in 2..=8 {
        let stepped = psi_ncsf(n - 1).pre_lie_q(&x).eval_q(1);
        assert_eq!(stepped, psi_ncsf(n), "degree {n}");
    }
}

#[test]
fn power_sum_is_an_alternating_hook_sum() {
    // The hook expansion is the definition; pin its shape independently by
    // counting terms against binomial weights of descent classes.
    for n in 1..=6 {
        let e = psi_ncsf(n);
        let count: usize = e.terms().count();
        let expected: usize = permutations(n)
            .into_iter()
            .filter(|p| {
                let d = dqsym::words::descent_composition(p);
                let ds = d.descents();
                ds.iter().enumerate().all(|(i, &v)| v == i + 1)
            })
            .count();
        assert_eq!(count, expected, "degree {n}");
    }
}

#[test]
fn bracketing_is_an_iterated_pre_lie_chain() {
    // Nested q-bracketing of a color word agrees with folding the q-pre-Lie
    // operation over its letters.
    let mut words: Vec<Vec<u8>> = Vec::new();
    for len in 1..=4usize {
        words.extend((0..len).map(|_| 1..=4u8).multi_cartesian_product());
    }
    for p in permutations(5) {
        words.push(p.letters().to_vec());
    }
    for letters in words {
        let word = Word::new(letters.clone());
        let mut chain = generator(letters[0]);
        for &c in &letters[1..] {
            chain = chain.pre_lie_q(&generator(c));
        }
        assert_eq!(chain, psi_word(&word), "word {word}");
    }
}
