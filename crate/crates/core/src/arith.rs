//! Factorization, divisors and ordered factorizations of positive integers.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest trial divisor used unless configured otherwise.
pub const DEFAULT_TRIAL_DIVISION_BOUND: u64 = 10_000_000;

/// A positive integer together with its prime factorization.
///
/// Primes are strictly increasing and every exponent is at least one; the
/// factorization of 1 is empty. Only [`Factorizer`] constructs values, so
/// every listed prime has been confirmed by trial division.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    value: BigUint,
    factors: Vec<(BigUint, u32)>,
}

impl Factorization {
    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.factors.iter().map(|(_, e)| *e)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// `true` iff the value is a prime.
    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    /// Number of divisors, `∏ (r_i + 1)`.
    pub fn divisor_count(&self) -> usize {
        self.exponents().map(|e| e as usize + 1).product()
    }

    /// Number of ordered `n`-fold factorizations, `∏ C(r_i + n - 1, n - 1)`.
    pub fn ordered_factorization_count(&self, n: u32) -> BigUint {
        assert!(n >= 1, "ordered factorizations need at least one slot");
        self.exponents()
            .map(|r| num_integer::binomial(BigUint::from(r + n - 1), BigUint::from(n - 1)))
            .product()
    }

    /// All divisors in increasing order.
    pub fn divisors(&self) -> Vec<BigUint> {
        DivisorTable::new(self).divisors
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            match e {
                1 => write!(f, "{p}")?,
                _ => write!(f, "{p}^{e}")?,
            }
        }
        Ok(())
    }
}

/// Deterministic trial-division factorizer with an upper bound on the
/// divisors it will try.
///
/// Factoring fails with [`Error::FactorBound`] as soon as an unresolved
/// cofactor would need a trial divisor above the bound. A cofactor left over
/// once the trial divisor passes its square root is prime, so primes larger
/// than the bound are accepted as long as their square root is within it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Factorizer {
    bound: u64,
}

impl Default for Factorizer {
    fn default() -> Self {
        Factorizer {
            bound: DEFAULT_TRIAL_DIVISION_BOUND,
        }
    }
}

impl Factorizer {
    pub fn new(bound: u64) -> Self {
        Factorizer {
            bound: bound.max(2),
        }
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn factorize(&self, m: &BigUint) -> Result<Factorization> {
        if m.is_zero() {
            return Err(Error::Domain("cannot factor 0".into()));
        }
        let mut factors = Vec::new();
        let mut rem = m.clone();
        let mut d: u64 = 2;

        // Big cofactors are divided down with bignum arithmetic until they
        // fit in a machine word.
        while rem.to_u64().is_none() {
            if d > self.bound {
                return Err(self.bound_error(m));
            }
            let (q, r) = rem.div_rem(&BigUint::from(d));
            if r.is_zero() {
                let mut e = 1;
                rem = q;
                loop {
                    let (q, r) = rem.div_rem(&BigUint::from(d));
                    if !r.is_zero() {
                        break;
                    }
                    rem = q;
                    e += 1;
                }
                factors.push((BigUint::from(d), e));
            }
            d = next_trial(d);
        }

        let mut rem = rem.to_u64().expect("loop exits once the cofactor fits");
        while rem > 1 {
            if (d as u128) * (d as u128) > rem as u128 {
                factors.push((BigUint::from(rem), 1));
                break;
            }
            if d > self.bound {
                return Err(self.bound_error(m));
            }
            if rem.is_multiple_of(d) {
                let mut e = 0;
                while rem.is_multiple_of(d) {
                    rem /= d;
                    e += 1;
                }
                factors.push((BigUint::from(d), e));
            }
            d = next_trial(d);
        }

        Ok(Factorization {
            value: m.clone(),
            factors,
        })
    }

    pub fn is_prime(&self, p: &BigUint) -> Result<bool> {
        if p.is_zero() {
            return Ok(false);
        }
        Ok(self.factorize(p)?.is_prime())
    }

    pub fn divisors(&self, m: &BigUint) -> Result<Vec<BigUint>> {
        Ok(self.factorize(m)?.divisors())
    }

    pub fn ordered_factorizations(&self, m: &BigUint, n: u32) -> Result<OrderedFactorizations> {
        OrderedFactorizations::new(&self.factorize(m)?, n)
    }

    fn bound_error(&self, m: &BigUint) -> Error {
        Error::FactorBound {
            value: m.clone(),
            bound: self.bound,
        }
    }
}

fn next_trial(d: u64) -> u64 {
    if d == 2 {
        3
    } else {
        d + 2
    }
}

/// Factor `m` with the default trial-division bound.
pub fn factorize(m: &BigUint) -> Result<Factorization> {
    Factorizer::default().factorize(m)
}

/// Divisors of `m` in increasing order, with the default bound.
pub fn divisors(m: &BigUint) -> Result<Vec<BigUint>> {
    Factorizer::default().divisors(m)
}

/// Lazy stream of ordered `n`-fold factorizations of `m`, with the default bound.
pub fn ordered_factorizations(m: &BigUint, n: u32) -> Result<OrderedFactorizations> {
    Factorizer::default().ordered_factorizations(m, n)
}

/// The divisors of a number, sorted, with exponent vectors and an index for
/// exact quotients between divisors.
#[derive(Debug, Clone)]
pub(crate) struct DivisorTable {
    pub(crate) divisors: Vec<BigUint>,
    exponents: Vec<Vec<u32>>,
    codes: Vec<usize>,
    by_code: Vec<usize>,
}

impl DivisorTable {
    pub(crate) fn new(fact: &Factorization) -> Self {
        let radices: Vec<usize> = fact.exponents().map(|e| e as usize + 1).collect();
        let total: usize = radices.iter().product();

        let mut entries: Vec<(BigUint, Vec<u32>, usize)> = Vec::with_capacity(total);
        for code in 0..total {
            let mut c = code;
            let mut value = BigUint::one();
            let mut exps = Vec::with_capacity(radices.len());
            for ((p, _), &radix) in fact.factors.iter().zip(&radices) {
                let e = (c % radix) as u32;
                c /= radix;
                value *= p.pow(e);
                exps.push(e);
            }
            entries.push((value, exps, code));
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));

        let mut by_code = vec![0; total];
        let mut divisors = Vec::with_capacity(total);
        let mut exponents = Vec::with_capacity(total);
        let mut codes = Vec::with_capacity(total);
        for (idx, (value, exps, code)) in entries.into_iter().enumerate() {
            by_code[code] = idx;
            divisors.push(value);
            exponents.push(exps);
            codes.push(code);
        }
        DivisorTable {
            divisors,
            exponents,
            codes,
            by_code,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.divisors.len()
    }

    /// Index of the number itself.
    pub(crate) fn top(&self) -> usize {
        self.len() - 1
    }

    /// `true` iff divisor `a` divides divisor `b`.
    pub(crate) fn divides(&self, a: usize, b: usize) -> bool {
        self.exponents[a]
            .iter()
            .zip(&self.exponents[b])
            .all(|(x, y)| x <= y)
    }

    /// Index of `divisors[b] / divisors[a]`; requires `a | b`.
    pub(crate) fn quotient(&self, b: usize, a: usize) -> usize {
        debug_assert!(self.divides(a, b));
        self.by_code[self.codes[b] - self.codes[a]]
    }
}

/// Iterator over every tuple `(d_1, …, d_n)` of positive integers with
/// `d_1 ⋯ d_n = m`, in lexicographic order.
#[derive(Debug, Clone)]
pub struct OrderedFactorizations {
    table: DivisorTable,
    /// Divisor index chosen for each of the first `n - 1` slots.
    chosen: Vec<usize>,
    /// `rest[i]` is the index of the quotient left before slot `i` is filled.
    rest: Vec<usize>,
    started: bool,
    done: bool,
}

impl OrderedFactorizations {
    pub fn new(fact: &Factorization, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("need at least one factor slot".into()));
        }
        let table = DivisorTable::new(fact);
        let n = n as usize;
        let top = table.top();
        Ok(OrderedFactorizations {
            // divisor 1 sits at index 0, so every prefix slot starts at 1
            chosen: vec![0; n - 1],
            rest: vec![top; n],
            table,
            started: false,
            done: false,
        })
    }

    pub(crate) fn table(&self) -> &DivisorTable {
        &self.table
    }

    /// Advance to the next tuple, returning the divisor indices of all `n`
    /// slots.
    pub(crate) fn next_indices(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        let mut out = self.chosen.clone();
        out.push(*self.rest.last().expect("at least one slot"));
        Some(out)
    }

    fn advance(&mut self) -> bool {
        let slots = self.chosen.len();
        for i in (0..slots).rev() {
            let budget = self.rest[i];
            let next = (self.chosen[i] + 1..=budget).find(|&j| self.table.divides(j, budget));
            if let Some(j) = next {
                self.chosen[i] = j;
                self.rest[i + 1] = self.table.quotient(budget, j);
                for k in i + 1..slots {
                    self.chosen[k] = 0;
                    self.rest[k + 1] = self.rest[k];
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for OrderedFactorizations {
    type Item = Vec<BigUint>;

    fn next(&mut self) -> Option<Self::Item> {
        let idx = self.next_indices()?;
        Some(
            idx.into_iter()
                .map(|i| self.table.divisors[i].clone())
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    fn pairs(f: &Factorization) -> Vec<(u64, u32)> {
        f.factors()
            .iter()
            .map(|(p, e)| (p.to_u64().unwrap(), *e))
            .collect()
    }

    fn tuples(m: u64, n: u32) -> Vec<Vec<u64>> {
        ordered_factorizations(&big(m), n)
            .unwrap()
            .map(|t| t.iter().map(|d| d.to_u64().unwrap()).collect())
            .collect()
    }

    #[test]
    fn factorize_examples() {
        let one = factorize(&big(1)).unwrap();
        assert!(one.factors().is_empty());
        assert_eq!(one.value(), &big(1));
        assert_eq!(pairs(&factorize(&big(12)).unwrap()), vec![(2, 2), (3, 1)]);
        assert_eq!(pairs(&factorize(&big(9973)).unwrap()), vec![(9973, 1)]);
    }

    #[test]
    fn zero_is_a_domain_error() {
        assert!(matches!(factorize(&big(0)), Err(Error::Domain(_))));
    }

    #[test]
    fn bound_is_enforced() {
        let small = Factorizer::new(10);
        // 11 * 13: smallest prime factor above the bound
        let err = small.factorize(&big(143)).unwrap_err();
        assert!(matches!(err, Error::FactorBound { bound: 10, .. }));
        assert!(err.is_capacity());
        // a prime whose square root is within the bound is fine
        assert_eq!(pairs(&small.factorize(&big(97)).unwrap()), vec![(97, 1)]);
        assert_eq!(
            pairs(&small.factorize(&big(2 * 2 * 97)).unwrap()),
            vec![(2, 2), (97, 1)]
        );
    }

    #[test]
    fn factorize_beyond_u64() {
        let m = big(2).pow(70u32) * big(3).pow(5u32) * big(1_000_003);
        let f = factorize(&m).unwrap();
        assert_eq!(pairs(&f), vec![(2, 70), (3, 5), (1_000_003, 1)]);
        assert_eq!(f.to_string(), "2^70 * 3^5 * 1000003");
    }

    #[test]
    fn divisors_examples() {
        assert_eq!(divisors(&big(1)).unwrap(), vec![big(1)]);
        assert_eq!(
            divisors(&big(6)).unwrap(),
            vec![big(1), big(2), big(3), big(6)]
        );
        let brute: Vec<BigUint> = (1..=36u64).filter(|d| 36 % d == 0).map(big).collect();
        assert_eq!(brute.len(), 9);
        assert_eq!(divisors(&big(36)).unwrap(), brute);
    }

    #[test]
    fn ordered_factorization_examples() {
        assert_eq!(tuples(2, 2), vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(tuples(1, 3), vec![vec![1, 1, 1]]);
        assert_eq!(tuples(4, 2), vec![vec![1, 4], vec![2, 2], vec![4, 1]]);
        assert_eq!(tuples(30, 1), vec![vec![30]]);
    }

    #[test]
    fn ordered_factorizations_are_lexicographic() {
        let all = tuples(360, 3);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
        let f = factorize(&big(360)).unwrap();
        assert_eq!(big(all.len() as u64), f.ordered_factorization_count(3));
    }

    #[test]
    fn zero_slots_rejected() {
        assert!(matches!(
            ordered_factorizations(&big(6), 0),
            Err(Error::Domain(_))
        ));
    }
}
