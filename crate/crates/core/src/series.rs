//! Truncated power series in `t` over [`QPolynomial`], Euler factors, and
//! Dirichlet coefficients of `ζ(s) ζ(s-1) ⋯ ζ(s-n+1)`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::arith::Factorizer;
use crate::count::{CountResult, Method};
use crate::error::{Error, Result};
use crate::hnf::check_args;
use crate::qcalc::{gauss_binomial, gauss_binomial_at, QPolynomial};

/// Longest coefficient array [`count_by_dirichlet`] will build.
pub const DEFAULT_DIRICHLET_LIMIT: usize = 1_000_000;

/// Power series in `t` truncated after `t^order`, with polynomial
/// coefficients in `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TSeries {
    order: usize,
    coeffs: Vec<QPolynomial>,
}

impl TSeries {
    /// Coefficients past `order` are dropped; missing ones are zero.
    pub fn new(order: usize, coeffs: impl IntoIterator<Item = QPolynomial>) -> Self {
        let mut coeffs: Vec<QPolynomial> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, QPolynomial::zero());
        TSeries { order, coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, [QPolynomial::one()])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `t^k`, for `k <= order`.
    pub fn coeff(&self, k: usize) -> &QPolynomial {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[QPolynomial] {
        &self.coeffs
    }

    /// Drop every term above `t^order`; `order` must not exceed the current one.
    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot raise truncation order");
        Self::new(order, self.coeffs[..=order].iter().cloned())
    }
}

impl Add for &TSeries {
    type Output = TSeries;

    fn add(self, rhs: &TSeries) -> TSeries {
        let order = self.order.min(rhs.order);
        TSeries::new(
            order,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b),
        )
    }
}

impl Mul for &TSeries {
    type Output = TSeries;

    fn mul(self, rhs: &TSeries) -> TSeries {
        let order = self.order.min(rhs.order);
        let coeffs = (0..=order).map(|k| {
            (0..=k).fold(QPolynomial::zero(), |acc, i| {
                &acc + &(&self.coeffs[i] * &rhs.coeffs[k - i])
            })
        });
        TSeries::new(order, coeffs)
    }
}

/// One line per power of `t`: `t^k: <polynomial>`.
impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            writeln!(f, "t^{k}: {c}")?;
        }
        Ok(())
    }
}

/// `1 / (1 - q^k t) = Σ_j q^(kj) t^j`, truncated at `t^order`.
pub fn geometric_factor(k: usize, order: usize) -> TSeries {
    TSeries::new(order, (0..=order).map(|j| QPolynomial::monomial(1, k * j)))
}

/// `∏_{k=0}^{n-1} 1 / (1 - q^k t)`, truncated at `t^order`.
pub fn lhs_product(n: usize, order: usize) -> TSeries {
    (0..n).fold(TSeries::one(order), |acc, k| {
        &acc * &geometric_factor(k, order)
    })
}

/// `Σ_k [n+k-1 choose k]_q t^k`, truncated at `t^order`.
pub fn rhs_sum(n: usize, order: usize) -> TSeries {
    assert!(n >= 1, "need n >= 1");
    TSeries::new(order, (0..=order).map(|k| gauss_binomial(n + k - 1, k)))
}

/// `true` iff the product and the Gaussian-binomial sum agree through `t^order`.
pub fn verify_generating_identity(n: usize, order: usize) -> bool {
    lhs_product(n, order) == rhs_sum(n, order)
}

/// Local factor of `ζ(s) ⋯ ζ(s-n+1)` at the prime `p`: the coefficients of
/// `p^(-ks)` for `k = 0..=k_max`, i.e. `[n+k-1 choose k]_p`.
pub fn euler_factor(p: &BigUint, n: u32, k_max: usize) -> Result<Vec<BigUint>> {
    euler_factor_with(p, n, k_max, &Factorizer::default())
}

pub fn euler_factor_with(
    p: &BigUint,
    n: u32,
    k_max: usize,
    factorizer: &Factorizer,
) -> Result<Vec<BigUint>> {
    if n == 0 {
        return Err(Error::Domain("dimension n must be at least 1".into()));
    }
    if !factorizer.is_prime(p)? {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let n = n as usize;
    Ok((0..=k_max)
        .map(|k| gauss_binomial_at(n + k - 1, k, p))
        .collect())
}

/// Coefficients `a(1), …, a(limit)` of a Dirichlet series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirichletCoefficients {
    // values[0] is a(1)
    values: Vec<BigUint>,
}

impl DirichletCoefficients {
    pub fn limit(&self) -> usize {
        self.values.len()
    }

    /// `a(m)` for `1 <= m <= limit`.
    pub fn get(&self, m: usize) -> &BigUint {
        assert!(m >= 1 && m <= self.limit(), "index {m} out of range");
        &self.values[m - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &BigUint)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    pub fn into_values(self) -> Vec<BigUint> {
        self.values
    }
}

/// CSV rows `m,a(m)`, one per line.
impl fmt::Display for DirichletCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, v) in self.iter() {
            writeln!(f, "{m},{v}")?;
        }
        Ok(())
    }
}

/// Coefficients of `ζ(s) ζ(s-1) ⋯ ζ(s-n+1)` up to `limit`.
///
/// Starts from the all-ones stream of `ζ(s)` and convolves in `m ↦ m^i` for
/// `i = 1..n`.
pub fn dirichlet_coefficients(n: u32, limit: usize) -> Result<DirichletCoefficients> {
    if n == 0 {
        return Err(Error::Domain("dimension n must be at least 1".into()));
    }
    if limit == 0 {
        return Err(Error::Domain("coefficient limit must be at least 1".into()));
    }
    let mut values = vec![BigUint::from(1u32); limit];
    for i in 1..n {
        let shifted: Vec<BigUint> = (1..=limit).map(|k| BigUint::from(k).pow(i)).collect();
        values = convolve(&values, &shifted);
    }
    Ok(DirichletCoefficients { values })
}

/// Dirichlet convolution of two 1-based streams stored from index 0.
fn convolve(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let limit = a.len().min(b.len());
    let mut out = vec![BigUint::zero(); limit];
    for d in 1..=limit {
        let ad = &a[d - 1];
        if ad.is_zero() {
            continue;
        }
        for k in 1..=limit / d {
            out[d * k - 1] += ad * &b[k - 1];
        }
    }
    out
}

/// `f_n(m)` read off the Dirichlet coefficients.
pub fn count_by_dirichlet(n: u32, m: &BigUint) -> Result<CountResult> {
    count_by_dirichlet_with(n, m, DEFAULT_DIRICHLET_LIMIT)
}

pub(crate) fn count_by_dirichlet_with(n: u32, m: &BigUint, limit: usize) -> Result<CountResult> {
    check_args(n, m)?;
    let index = m
        .to_usize()
        .filter(|&i| i <= limit)
        .ok_or_else(|| Error::DirichletLimit {
            index: m.clone(),
            limit,
        })?;
    let coeffs = dirichlet_coefficients(n, index)?;
    Ok(CountResult {
        value: coeffs.values.into_iter().next_back().expect("limit >= 1"),
        method: Method::Dirichlet,
        stats: None,
    })
}
