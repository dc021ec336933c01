//! The independent ways of computing `f_n(m)`, and a harness that runs them
//! side by side.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{DivisorTable, Factorizer};
use crate::error::{Error, Result};
use crate::hnf::{check_args, count_by_enumeration_with};
use crate::series::{count_by_dirichlet_with, DEFAULT_DIRICHLET_LIMIT};

/// Enumerations predicted to yield more bases than this are skipped by the
/// cross-check harness.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// A way of computing `f_n(m)`.
///
/// Variants are declared in the alphabetical order of their names, which is
/// the order results are reported in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Coefficient of `m^-s` in `ζ(s) ζ(s-1) ⋯ ζ(s-n+1)`.
    Dirichlet,
    /// Sum of `d_2 d_3^2 ⋯ d_n^(n-1)` over ordered factorizations of `m`.
    FactorizationSum,
    /// Product over prime powers of quotients of `p^k - 1` terms.
    Gruber,
    /// Explicit enumeration of lower-triangular normal-form bases.
    HnfEnumeration,
    /// `f_n(m) = Σ_{d | m} d f_{n-1}(d)` with `f_1 = 1`.
    Recursion,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Dirichlet,
        Method::FactorizationSum,
        Method::Gruber,
        Method::HnfEnumeration,
        Method::Recursion,
    ];

    /// The methods that never enumerate bases.
    pub const FORMULAS: [Method; 4] = [
        Method::Dirichlet,
        Method::FactorizationSum,
        Method::Gruber,
        Method::Recursion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Dirichlet => "dirichlet",
            Method::FactorizationSum => "factorization-sum",
            Method::Gruber => "gruber",
            Method::HnfEnumeration => "hnf",
            Method::Recursion => "recursion",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown counting method {s:?}")))
    }
}

/// Diagnostics collected while counting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WorkStats {
    /// Ordered factorizations (or diagonal tuples) visited.
    pub tuples: u64,
    /// Divisor pairs visited by the recursion.
    pub divisors_visited: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountResult {
    pub value: BigUint,
    pub method: Method,
    pub stats: Option<WorkStats>,
}

impl CountResult {
    fn plain(value: BigUint, method: Method) -> Self {
        CountResult {
            value,
            method,
            stats: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRequest {
    pub n: u32,
    pub m: BigUint,
    pub method: Method,
}

impl CountRequest {
    pub fn new(n: u32, m: impl Into<BigUint>, method: Method) -> Self {
        CountRequest {
            n,
            m: m.into(),
            method,
        }
    }

    pub fn run(&self) -> Result<CountResult> {
        Counter::default().count(self.method, self.n, &self.m)
    }
}

/// Counting configuration: factorization bound and resource caps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counter {
    pub factorizer: Factorizer,
    /// Largest enumeration the cross-check harness will attempt.
    pub enumeration_cap: u64,
    /// Longest Dirichlet coefficient array that will be built.
    pub dirichlet_limit: usize,
}

impl Default for Counter {
    fn default() -> Self {
        Counter {
            factorizer: Factorizer::default(),
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            dirichlet_limit: DEFAULT_DIRICHLET_LIMIT,
        }
    }
}

impl Counter {
    pub fn count(&self, method: Method, n: u32, m: &BigUint) -> Result<CountResult> {
        match method {
            Method::Dirichlet => count_by_dirichlet_with(n, m, self.dirichlet_limit),
            Method::FactorizationSum => self.factorization_sum(n, m),
            Method::Gruber => self.gruber(n, m),
            Method::HnfEnumeration => {
                count_by_enumeration_with(n, m, self.enumeration_cap, &self.factorizer)
            }
            Method::Recursion => self.recursion(n, m),
        }
    }

    pub fn factorization_sum(&self, n: u32, m: &BigUint) -> Result<CountResult> {
        check_args(n, m)?;
        let mut tuples = self.factorizer.ordered_factorizations(m, n)?;
        let mut total = BigUint::zero();
        let mut visited = 0u64;
        while let Some(idx) = tuples.next_indices() {
            let divisors = &tuples.table().divisors;
            let term = idx
                .iter()
                .enumerate()
                .skip(1)
                .fold(BigUint::one(), |acc, (i, &d)| {
                    acc * divisors[d].pow(i as u32)
                });
            total += term;
            visited += 1;
        }
        Ok(CountResult {
            value: total,
            method: Method::FactorizationSum,
            stats: Some(WorkStats {
                tuples: visited,
                divisors_visited: 0,
            }),
        })
    }

    pub fn recursion(&self, n: u32, m: &BigUint) -> Result<CountResult> {
        check_args(n, m)?;
        let table = DivisorTable::new(&self.factorizer.factorize(m)?);
        let len = table.len();
        // level[j] holds f_level(divisors[j]); memo over (level, divisor)
        let mut level = vec![BigUint::one(); len];
        let mut visited = 0u64;
        for _ in 2..=n {
            let mut next = vec![BigUint::zero(); len];
            for (j, slot) in next.iter_mut().enumerate() {
                for (i, f) in level.iter().enumerate().take(j + 1) {
                    if table.divides(i, j) {
                        *slot += &table.divisors[i] * f;
                        visited += 1;
                    }
                }
            }
            level = next;
        }
        Ok(CountResult {
            value: level.swap_remove(table.top()),
            method: Method::Recursion,
            stats: Some(WorkStats {
                tuples: 0,
                divisors_visited: visited,
            }),
        })
    }

    /// Evaluates both prime-power product forms, checks that every division
    /// is exact and that the two agree.
    pub fn gruber(&self, n: u32, m: &BigUint) -> Result<CountResult> {
        check_args(n, m)?;
        let fact = self.factorizer.factorize(m)?;
        let mut first = BigUint::one();
        let mut second = BigUint::one();
        for (p, r) in fact.factors() {
            let r = *r;
            let one = BigUint::one();
            let ratio = |top: u32, bottom: u32| (p.pow(top) - &one, p.pow(bottom) - &one);
            // Running products are Gaussian binomials at q = p, hence integers.
            let mut local = BigUint::one();
            for j in 1..=r {
                let (num, den) = ratio(n + j - 1, j);
                local = exact_div(local * num, &den, "first product form")?;
            }
            first *= local;
            let mut local = BigUint::one();
            for j in 1..n {
                let (num, den) = ratio(r + j, j);
                local = exact_div(local * num, &den, "second product form")?;
            }
            second *= local;
        }
        if first != second {
            return Err(Error::Internal(format!(
                "product forms disagree for n={n}, m={m}: {first} != {second}"
            )));
        }
        Ok(CountResult::plain(first, Method::Gruber))
    }

    /// Run every method on `(n, m)` and require that they agree.
    ///
    /// The enumeration is skipped when `include_enumeration` is false or when
    /// the predicted count exceeds [`Counter::enumeration_cap`]. Results come
    /// back in [`Method`] order.
    pub fn all_methods(
        &self,
        n: u32,
        m: &BigUint,
        include_enumeration: bool,
    ) -> Result<Vec<CountResult>> {
        check_args(n, m)?;
        let predicted = self.gruber(n, m)?;
        let enumerate =
            include_enumeration && predicted.value <= BigUint::from(self.enumeration_cap);
        let mut results = Vec::with_capacity(Method::ALL.len());
        for method in Method::ALL {
            match method {
                Method::Gruber => results.push(predicted.clone()),
                Method::HnfEnumeration if !enumerate => {}
                _ => results.push(self.count(method, n, m)?),
            }
        }
        if results.iter().any(|r| r.value != results[0].value) {
            return Err(Error::Discrepancy(results));
        }
        Ok(results)
    }
}

fn exact_div(num: BigUint, den: &BigUint, what: &str) -> Result<BigUint> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "inexact division {num} / {den} in {what}"
        )));
    }
    Ok(q)
}

/// `f_n(m)` as a sum over ordered factorizations of `m`.
pub fn count_by_factorization_sum(n: u32, m: &BigUint) -> Result<CountResult> {
    Counter::default().factorization_sum(n, m)
}

/// `f_n(m)` by the divisor recursion.
pub fn count_by_recursion(n: u32, m: &BigUint) -> Result<CountResult> {
    Counter::default().recursion(n, m)
}

/// `f_n(m)` by the prime-power product formula, both forms.
pub fn count_by_gruber(n: u32, m: &BigUint) -> Result<CountResult> {
    Counter::default().gruber(n, m)
}

/// Run every applicable method with default settings.
pub fn count_all_methods(
    n: u32,
    m: &BigUint,
    include_enumeration: bool,
) -> Result<Vec<CountResult>> {
    Counter::default().all_methods(n, m, include_enumeration)
}
