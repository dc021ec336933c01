//! Lower-triangular normal-form bases of index-`m` sublattices.
//!
//! A basis is an `n × n` integer matrix `(r_ij)` with
//!
//! * `r_ij = 0` above the diagonal,
//! * `r_ii > r_ij >= 0` below it (each row reduced by its own diagonal entry),
//! * `r_11 r_22 ⋯ r_nn = m`.
//!
//! Each index-`m` sublattice has exactly one such basis, so enumerating them
//! counts `f_n(m)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::arith::{Factorizer, OrderedFactorizations};
use crate::count::{CountResult, Method, WorkStats};
use crate::error::{Error, Result};

/// Which diagonal entry bounds a sub-diagonal entry `r_ij` (`j < i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HnfConvention {
    /// `0 <= r_ij < r_ii`: reduced by the diagonal entry of the same row.
    #[default]
    RowBounded,
    /// `0 <= r_ij < r_jj`: reduced by the diagonal entry of the same column.
    ColumnBounded,
}

impl HnfConvention {
    fn bound(self, diag: &[BigUint], i: usize, j: usize) -> &BigUint {
        match self {
            HnfConvention::RowBounded => &diag[i],
            HnfConvention::ColumnBounded => &diag[j],
        }
    }
}

/// A square integer matrix stored row-major.
///
/// Matrices yielded by [`enumerate_hnf`] always satisfy the normal-form
/// conditions; [`validate_hnf`] checks an arbitrary one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HnfMatrix {
    n: usize,
    entries: Vec<BigUint>,
}

impl HnfMatrix {
    pub fn from_rows<R, T>(rows: R) -> Result<Self>
    where
        R: IntoIterator,
        R::Item: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let rows: Vec<Vec<BigUint>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(Into::into).collect())
            .collect();
        let n = rows.len();
        if n == 0 {
            return Err(Error::Domain("matrix must have at least one row".into()));
        }
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::Domain(format!(
                "row {} has {} entries, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(HnfMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at zero-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigUint]> {
        self.entries.chunks(self.n)
    }

    pub fn diagonal(&self) -> Vec<BigUint> {
        (0..self.n).map(|i| self.get(i, i).clone()).collect()
    }

    /// Product of the diagonal entries; the determinant when the matrix is
    /// lower triangular.
    pub fn diagonal_product(&self) -> BigUint {
        (0..self.n).map(|i| self.get(i, i)).product()
    }
}

/// Serializes as semicolon-separated rows of comma-separated entries, e.g.
/// `2,0;1,2`.
impl fmt::Display for HnfMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for HnfMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| {
                        x.trim()
                            .parse::<BigUint>()
                            .map_err(|e| Error::Domain(format!("bad matrix entry {x:?}: {e}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        HnfMatrix::from_rows(rows)
    }
}

/// `true` iff `matrix` is lower triangular, every row's sub-diagonal entries
/// lie in `[0, r_ii)`, and the diagonal product is `m`.
pub fn validate_hnf(matrix: &HnfMatrix, m: &BigUint) -> bool {
    validate_hnf_with(matrix, m, HnfConvention::RowBounded)
}

pub fn validate_hnf_with(matrix: &HnfMatrix, m: &BigUint, convention: HnfConvention) -> bool {
    let n = matrix.dim();
    let diag = matrix.diagonal();
    if diag.iter().any(Zero::is_zero) {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            if !matrix.get(i, j).is_zero() {
                return false;
            }
        }
        for j in 0..i {
            if matrix.get(i, j) >= convention.bound(&diag, i, j) {
                return false;
            }
        }
    }
    matrix.diagonal_product() == *m
}

/// Lazy stream of every normal-form basis with diagonal product `m`.
///
/// Diagonals are visited in lexicographic order of the tuple
/// `(r_11, …, r_nn)`; within a diagonal the sub-diagonal entries run as an
/// odometer in row-major order, last entry fastest.
#[derive(Debug, Clone)]
pub struct HnfEnumerator {
    n: usize,
    convention: HnfConvention,
    diagonals: OrderedFactorizations,
    diag: Vec<BigUint>,
    /// Row-major `(i, j)` positions strictly below the diagonal.
    slots: Vec<(usize, usize)>,
    values: Vec<BigUint>,
    fresh: bool,
    diagonals_seen: u64,
}

impl HnfEnumerator {
    fn new(
        n: u32,
        m: &BigUint,
        convention: HnfConvention,
        factorizer: &Factorizer,
    ) -> Result<Self> {
        let diagonals = factorizer.ordered_factorizations(m, n)?;
        let n = n as usize;
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).collect();
        Ok(HnfEnumerator {
            n,
            convention,
            diagonals,
            diag: Vec::new(),
            values: vec![BigUint::zero(); slots.len()],
            slots,
            fresh: true,
            diagonals_seen: 0,
        })
    }

    /// Number of diagonal tuples started so far.
    pub fn diagonals_seen(&self) -> u64 {
        self.diagonals_seen
    }

    fn next_diagonal(&mut self) -> bool {
        match self.diagonals.next() {
            Some(d) => {
                self.diag = d;
                self.values.iter_mut().for_each(|v| v.set_zero());
                self.diagonals_seen += 1;
                true
            }
            None => false,
        }
    }

    fn step_odometer(&mut self) -> bool {
        for k in (0..self.slots.len()).rev() {
            let (i, j) = self.slots[k];
            let bound = self.convention.bound(&self.diag, i, j);
            self.values[k] += 1u32;
            if self.values[k] < *bound {
                return true;
            }
            self.values[k].set_zero();
        }
        false
    }

    fn current(&self) -> HnfMatrix {
        let n = self.n;
        let mut entries = vec![BigUint::zero(); n * n];
        for (i, d) in self.diag.iter().enumerate() {
            entries[i * n + i] = d.clone();
        }
        for (&(i, j), v) in self.slots.iter().zip(&self.values) {
            entries[i * n + j] = v.clone();
        }
        HnfMatrix { n, entries }
    }
}

impl Iterator for HnfEnumerator {
    type Item = HnfMatrix;

    fn next(&mut self) -> Option<HnfMatrix> {
        let advanced = if self.fresh {
            self.fresh = false;
            self.next_diagonal()
        } else {
            self.step_odometer() || self.next_diagonal()
        };
        advanced.then(|| self.current())
    }
}

/// Every normal-form basis of an index-`m` sublattice of `Z^n`.
pub fn enumerate_hnf(n: u32, m: &BigUint) -> Result<HnfEnumerator> {
    enumerate_hnf_with(n, m, HnfConvention::RowBounded, &Factorizer::default())
}

pub fn enumerate_hnf_with(
    n: u32,
    m: &BigUint,
    convention: HnfConvention,
    factorizer: &Factorizer,
) -> Result<HnfEnumerator> {
    check_args(n, m)?;
    HnfEnumerator::new(n, m, convention, factorizer)
}

/// Count the bases from [`enumerate_hnf`], giving up once more than `cap`
/// have been produced.
pub fn count_by_enumeration(n: u32, m: &BigUint, cap: u64) -> Result<CountResult> {
    count_by_enumeration_with(n, m, cap, &Factorizer::default())
}

pub(crate) fn count_by_enumeration_with(
    n: u32,
    m: &BigUint,
    cap: u64,
    factorizer: &Factorizer,
) -> Result<CountResult> {
    let mut stream = enumerate_hnf_with(n, m, HnfConvention::RowBounded, factorizer)?;
    let mut count = 0u64;
    while stream.next().is_some() {
        count += 1;
        if count > cap {
            return Err(Error::EnumerationCap {
                cap,
                partial: count,
            });
        }
    }
    Ok(CountResult {
        value: BigUint::from(count),
        method: Method::HnfEnumeration,
        stats: Some(WorkStats {
            tuples: stream.diagonals_seen(),
            divisors_visited: 0,
        }),
    })
}

pub(crate) fn check_args(n: u32, m: &BigUint) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("dimension n must be at least 1".into()));
    }
    if m.is_zero() {
        return Err(Error::Domain("index m must be at least 1".into()));
    }
    Ok(())
}

/// Number of bases with the given diagonal: `∏ r_ii^(i-1)` for rows counted
/// from one under [`HnfConvention::RowBounded`], `∏ r_jj^(n-j)` under
/// [`HnfConvention::ColumnBounded`].
pub fn bases_per_diagonal(diag: &[BigUint], convention: HnfConvention) -> BigUint {
    let n = diag.len();
    diag.iter()
        .enumerate()
        .map(|(i, d)| match convention {
            HnfConvention::RowBounded => d.pow(i as u32),
            HnfConvention::ColumnBounded => d.pow((n - 1 - i) as u32),
        })
        .fold(BigUint::one(), |acc, x| acc * x)
}
