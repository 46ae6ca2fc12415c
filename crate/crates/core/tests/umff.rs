mod common;

use lyndon_order::umff::{
    check_co_lyndon_concat, check_intersection, check_lyndon_concat, enumerate_family,
    max_factorization_suite, standard_suites, verify_max_factorization, Family, WordFamily,
};
use lyndon_order::{Error, OrderedAlphabet};

fn order(s: &[u8]) -> OrderedAlphabet {
    OrderedAlphabet::from_ascending(s).unwrap()
}

#[test]
fn enumeration_matches_membership_filter() {
    for perm in common::permutations(b"abc") {
        let o = order(&perm);
        let mut lyndon: Vec<Vec<u8>> = common::words_up_to(b"abc", 6)
            .into_iter()
            .filter(|w| common::is_lyndon(w, &perm))
            .collect();
        let mut co: Vec<Vec<u8>> = common::words_up_to(b"abc", 6)
            .into_iter()
            .filter(|w| common::is_co_lyndon(w, &perm))
            .collect();
        let mut got_l = enumerate_family(Family::Lyndon, 6, &o).unwrap();
        let mut got_c = enumerate_family(Family::CoLyndon, 6, &o).unwrap();
        for v in [&mut lyndon, &mut co, &mut got_l, &mut got_c] {
            v.sort();
        }
        assert_eq!(got_l, lyndon);
        assert_eq!(got_c, co);
    }
}

#[test]
fn lyndon_counts_follow_necklace_formula() {
    // binary Lyndon words of length 1..=10
    let expected = [2, 1, 2, 3, 6, 9, 18, 30, 56, 99];
    let words = enumerate_family(Family::Lyndon, 10, &order(b"ab")).unwrap();
    for (len, &count) in (1..=10).zip(&expected) {
        assert_eq!(words.iter().filter(|w| w.len() == len).count(), count);
    }
}

#[test]
fn co_lyndon_words_are_reversed_lyndon_words() {
    let o = order(b"cab");
    let mut rev: Vec<Vec<u8>> = enumerate_family(Family::Lyndon, 5, &o)
        .unwrap()
        .into_iter()
        .map(|w| w.into_iter().rev().collect())
        .collect();
    let mut co = enumerate_family(Family::CoLyndon, 5, &o).unwrap();
    rev.sort();
    co.sort();
    assert_eq!(rev, co);
}

#[test]
fn concatenation_examples() {
    let o = order(b"ab");
    assert!(check_lyndon_concat(b"a", b"b", &o).unwrap());
    assert!(!check_lyndon_concat(b"b", b"a", &o).unwrap());
    assert!(check_lyndon_concat(b"aab", b"ab", &o).unwrap());
    assert!(check_co_lyndon_concat(b"b", b"a", &o).unwrap());
    assert!(!check_co_lyndon_concat(b"a", b"b", &o).unwrap());
    assert!(matches!(
        check_lyndon_concat(b"ba", b"b", &o),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn max_factorization_examples() {
    let wf = WordFamily::lyndon(order(b"abcd"));
    let good: [&[u8]; 4] = [b"abcabcd", b"abc", b"ab", b"a"];
    assert!(verify_max_factorization(&good, &wf).unwrap());
    let bad: [&[u8]; 4] = [b"abc", b"abcabcd", b"ab", b"a"];
    assert!(!verify_max_factorization(&bad, &wf).unwrap());
    assert!(matches!(
        verify_max_factorization(&[b"ba"], &wf),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn intersection_is_single_letters() {
    assert!(check_intersection(&order(b"ab"), 10));
    assert!(check_intersection(&order(b"bca"), 6));
}

#[test]
fn random_lists_are_reproducible() {
    let a = max_factorization_suite(Family::Lyndon, 500, 3);
    assert!(a.passed());
    assert_eq!(a, max_factorization_suite(Family::Lyndon, 500, 3));
}

#[test]
fn standard_suites_pass() {
    for outcome in standard_suites(1) {
        assert!(
            outcome.passed(),
            "{}: {:?}",
            outcome.law,
            outcome.violations
        );
        assert!(outcome.cases > 0);
    }
}
