//! Gaussian binomials as exact integer polynomials in `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial in `q` with integer coefficients.
///
/// Index `i` of the coefficient vector holds the coefficient of `q^i`. The
/// vector never ends in a zero, so the zero polynomial is empty and derived
/// equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// `c * q^power`
    pub fn monomial(c: impl Into<BigInt>, power: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c;
        QPolynomial { coeffs }
    }

    pub fn from_coeffs<I, T>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut p = QPolynomial {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.trim();
        p
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPolynomial { coeffs }
    }

    /// Value at an integer point, by Horner's rule.
    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        let mut out = QPolynomial { coeffs };
        out.trim();
        out
    }
}

impl Add for QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: QPolynomial) -> QPolynomial {
        &self + &rhs
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;

    fn neg(self) -> QPolynomial {
        QPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Sub for QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: QPolynomial) -> QPolynomial {
        &self - &rhs
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut out = QPolynomial { coeffs };
        out.trim();
        out
    }
}

impl Mul for QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: QPolynomial) -> QPolynomial {
        &self * &rhs
    }
}

/// Renders as `c0 + c1*q + c2*q^2 + …`, omitting zero terms and unit
/// coefficients. The zero polynomial renders as `0`.
impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = (c.sign(), c.magnitude());
            match (first, sign == Sign::Minus) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{mag}*q")?,
                _ if unit => write!(f, "q^{i}")?,
                _ => write!(f, "{mag}*q^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `[m]_q = 1 + q + ⋯ + q^(m-1)`; zero for `m = 0`.
pub fn q_integer(m: usize) -> QPolynomial {
    QPolynomial {
        coeffs: vec![BigInt::one(); m],
    }
}

/// `[m]_q! = [1]_q [2]_q ⋯ [m]_q`.
pub fn q_factorial(m: usize) -> QPolynomial {
    (1..=m).fold(QPolynomial::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial `[m choose k]_q`, built with the q-Pascal rule
/// `B(m, k) = B(m-1, k-1) + q^k B(m-1, k)` so no polynomial division is needed.
/// Vanishes for `k > m`.
pub fn gauss_binomial(m: usize, k: usize) -> QPolynomial {
    if k > m {
        return QPolynomial::zero();
    }
    let k = k.min(m - k);
    // row[j] = B(i, j) for j <= min(i, k)
    let mut row = vec![QPolynomial::one()];
    for i in 1..=m {
        let width = i.min(k);
        let mut next = Vec::with_capacity(width + 1);
        next.push(QPolynomial::one());
        for j in 1..=width {
            let diag = &row[j - 1];
            next.push(match row.get(j) {
                Some(up) => diag + &up.shift(j),
                None => diag.clone(),
            });
        }
        row = next;
    }
    row.pop().expect("row holds B(m, k)")
}

/// Exact value of `[m choose k]_q` at `q = q0`, by the integer q-Pascal rule.
/// At `q0 = 1` this is the ordinary binomial coefficient.
pub fn gauss_binomial_at(m: usize, k: usize, q0: &BigUint) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    let k = k.min(m - k);
    let powers: Vec<BigUint> = (0..=k).map(|j| q0.pow(j as u32)).collect();
    let mut row = vec![BigUint::one()];
    for i in 1..=m {
        let width = i.min(k);
        let mut next = Vec::with_capacity(width + 1);
        next.push(BigUint::one());
        for j in 1..=width {
            let mut v = row[j - 1].clone();
            if let Some(up) = row.get(j) {
                v += up * &powers[j];
            }
            next.push(v);
        }
        row = next;
    }
    row.pop().expect("row holds B(m, k)")
}
