//! Brute-force oracles shared by the integration tests. None of these call
//! into the library's algorithms.

#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

pub fn sigma(m: u64) -> u64 {
    (1..=m).filter(|&d| m.is_multiple_of(d)).sum()
}

pub fn is_prime_naive(p: u64) -> bool {
    p >= 2
        && (2..p)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

pub fn binomial_naive(m: u64, k: u64) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    // Pascal triangle row by row
    let mut row = vec![BigUint::one()];
    for _ in 0..m {
        let mut next = vec![BigUint::one(); row.len() + 1];
        for j in 1..row.len() {
            next[j] = &row[j - 1] + &row[j];
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Every lower-triangular `n × n` matrix with entries in `[0, m]`, diagonal
/// product `m`, and each row's sub-diagonal entries below that row's
/// diagonal entry, rendered as `a,b;c,d`.
pub fn brute_force_hnf(n: usize, m: u64) -> Vec<String> {
    let lower: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..=i).map(move |j| (i, j))).collect();
    let mut cells = vec![0u64; lower.len()];
    let mut out = Vec::new();
    loop {
        let mut mat = vec![vec![0u64; n]; n];
        for (&(i, j), &v) in lower.iter().zip(&cells) {
            mat[i][j] = v;
        }
        let det: u64 = (0..n).map(|i| mat[i][i]).product();
        let reduced = (0..n).all(|i| (0..i).all(|j| mat[i][j] < mat[i][i]));
        if det == m && reduced {
            let rows: Vec<String> = mat
                .iter()
                .map(|r| r.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
                .collect();
            out.push(rows.join(";"));
        }
        // odometer over all cells in [0, m]
        let mut k = cells.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cells[k] < m {
                cells[k] += 1;
                break;
            }
            cells[k] = 0;
        }
    }
}

/// Dense integer polynomial, lowest degree first, without trailing zeros.
pub type Poly = Vec<BigInt>;

pub fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Exact long division by a monic-up-to-unit divisor; panics on a remainder.
pub fn poly_div_exact(num: &Poly, den: &Poly) -> Poly {
    let num = trim(num.clone());
    let den = trim(den.clone());
    assert!(!den.is_empty(), "division by zero polynomial");
    let lead = den.last().unwrap().clone();
    assert!(lead == BigInt::one() || lead == -BigInt::one());
    if num.len() < den.len() {
        assert!(num.is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut rem = num.clone();
    let mut quot = vec![BigInt::zero(); num.len() - den.len() + 1];
    for shift in (0..quot.len()).rev() {
        let c = &rem[shift + den.len() - 1] * &lead;
        for (i, d) in den.iter().enumerate() {
            rem[shift + i] -= &c * d;
        }
        quot[shift] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    trim(quot)
}

/// `[m]_q` as the quotient `(1 - q^m) / (1 - q)`.
pub fn q_integer_by_quotient(m: usize) -> Poly {
    if m == 0 {
        return Vec::new();
    }
    let mut num = vec![BigInt::zero(); m + 1];
    num[0] = BigInt::one();
    num[m] = -BigInt::one();
    poly_div_exact(&num, &vec![BigInt::one(), -BigInt::one()])
}

pub fn q_factorial_by_quotient(m: usize) -> Poly {
    (1..=m).fold(vec![BigInt::one()], |acc, i| {
        poly_mul(&acc, &q_integer_by_quotient(i))
    })
}

/// `[m choose k]_q` as the quotient `[m]_q! / ([m-k]_q! [k]_q!)`.
pub fn gauss_binomial_by_quotient(m: usize, k: usize) -> Poly {
    let den = poly_mul(&q_factorial_by_quotient(m - k), &q_factorial_by_quotient(k));
    poly_div_exact(&q_factorial_by_quotient(m), &den)
}

/// Coefficients of `[m choose k]_q` by counting partitions that fit in a
/// `k × (m - k)` box, bucketed by size.
pub fn gauss_binomial_by_partitions(m: usize, k: usize) -> Vec<u64> {
    let width = m - k;
    let mut counts = vec![0u64; k * width + 1];
    // non-increasing sequences of k parts, each in [0, width]
    fn rec(parts_left: usize, max_part: usize, size: usize, counts: &mut [u64]) {
        if parts_left == 0 {
            counts[size] += 1;
            return;
        }
        for part in 0..=max_part {
            rec(parts_left - 1, part, size + part, counts);
        }
    }
    rec(k, width, 0, &mut counts);
    counts
}
