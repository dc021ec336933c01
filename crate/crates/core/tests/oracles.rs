//! Frozen expected values, each checked against an independent brute-force
//! oracle before being compared with the library.

mod common;

use common::*;
use latcount_core::{
    count_by_dirichlet, count_by_enumeration, count_by_factorization_sum, count_by_gruber,
    count_by_recursion, enumerate_hnf, gauss_binomial, gauss_binomial_at, q_integer, QPolynomial,
};
use num_bigint::BigInt;

/// (n, m, f_n(m))
const FROZEN_COUNTS: [(u32, u64, u64); 8] = [
    (2, 2, 3),
    (3, 2, 7),
    (2, 4, 7),
    (2, 6, 12),
    (3, 4, 35),
    (3, 6, 91),
    (4, 2, 15),
    (2, 12, 28),
];

#[test]
fn frozen_counts_match_brute_force_and_every_method() {
    for (n, m, expected) in FROZEN_COUNTS {
        assert_eq!(
            brute_force_hnf(n as usize, m).len() as u64,
            expected,
            "oracle disagrees with frozen f_{n}({m})"
        );
        let m = big(m);
        let expected = big(expected);
        assert_eq!(count_by_factorization_sum(n, &m).unwrap().value, expected);
        assert_eq!(count_by_recursion(n, &m).unwrap().value, expected);
        assert_eq!(count_by_gruber(n, &m).unwrap().value, expected);
        assert_eq!(count_by_dirichlet(n, &m).unwrap().value, expected);
        assert_eq!(count_by_enumeration(n, &m, 1000).unwrap().value, expected);
    }
}

#[test]
fn n2_enumeration_equals_brute_force_scan() {
    for m in 1..=12 {
        let ours: Vec<String> = enumerate_hnf(2, &big(m))
            .unwrap()
            .map(|h| h.to_string())
            .collect();
        let mut brute = brute_force_hnf(2, m);
        let mut sorted = ours.clone();
        sorted.sort();
        brute.sort();
        assert_eq!(sorted, brute, "m = {m}");
    }
}

#[test]
fn n2_m2_enumeration_is_exact() {
    let brute = brute_force_hnf(2, 2);
    assert_eq!(brute.len(), 3);
    let ours: Vec<String> = enumerate_hnf(2, &big(2))
        .unwrap()
        .map(|h| h.to_string())
        .collect();
    assert_eq!(ours, ["1,0;0,2", "1,0;1,2", "2,0;0,1"]);
}

#[test]
fn sigma_oracle_for_n2() {
    let expected = [1, 3, 4, 7, 6, 12];
    for (i, &s) in expected.iter().enumerate() {
        assert_eq!(sigma(i as u64 + 1), s);
    }
}

#[test]
fn gauss_binomial_4_2_by_two_oracles() {
    let frozen = [1, 1, 2, 1, 1];
    assert_eq!(gauss_binomial_by_partitions(4, 2), frozen);
    let quotient = gauss_binomial_by_quotient(4, 2);
    assert_eq!(
        quotient,
        frozen.iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>()
    );
    assert_eq!(gauss_binomial(4, 2), QPolynomial::from_coeffs(frozen));
}

#[test]
fn q_integer_matches_quotient() {
    for m in 0..20 {
        assert_eq!(q_integer(m).coeffs(), q_integer_by_quotient(m).as_slice());
    }
}

#[test]
fn gauss_binomial_at_hand_values() {
    // [3]_2 = 1 + 2 + 4
    assert_eq!(gauss_binomial_at(3, 1, &big(2)), big(1 + 2 + 4));
    // [4]_2! / ([2]_2! [2]_2!) with [i]_2 = 2^i - 1
    let qint = |i: u32| 2u64.pow(i) - 1;
    let num: u64 = (1..=4).map(qint).product();
    let den: u64 = (1..=2).map(qint).product::<u64>().pow(2);
    assert_eq!(num % den, 0);
    assert_eq!(gauss_binomial_at(4, 2, &big(2)), big(num / den));
    assert_eq!(gauss_binomial_at(4, 2, &big(1)), binomial_naive(4, 2));
}
