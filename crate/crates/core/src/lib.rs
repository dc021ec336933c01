//! Exact counting of the index-`m` sublattices of an `n`-dimensional lattice.
//!
//! The number `f_n(m)` is computed four independent ways (a sum over ordered
//! factorizations, a divisor recursion, a product over prime powers, and
//! Dirichlet convolution of shifted zeta coefficient streams) and by explicit
//! enumeration of lower-triangular normal-form bases. Supporting modules
//! provide Gaussian binomials over exact integer polynomials and truncated
//! power series in `t` with polynomial coefficients.
//!
//! All arithmetic is exact; values are [`num_bigint::BigUint`] throughout.

pub mod arith;
pub mod count;
pub mod error;
pub mod hnf;
pub mod qcalc;
pub mod series;

pub use arith::{divisors, factorize, ordered_factorizations, Factorization, Factorizer};
pub use count::{
    count_all_methods, count_by_factorization_sum, count_by_gruber, count_by_recursion,
    CountRequest, CountResult, Counter, Method, WorkStats,
};
pub use error::{Error, Result};
pub use hnf::{count_by_enumeration, enumerate_hnf, validate_hnf, HnfConvention, HnfMatrix};
pub use qcalc::{gauss_binomial, gauss_binomial_at, q_factorial, q_integer, QPolynomial};
pub use series::{
    count_by_dirichlet, dirichlet_coefficients, euler_factor, geometric_factor, lhs_product,
    rhs_sum, verify_generating_identity, DirichletCoefficients, TSeries,
};

pub use num_bigint::BigUint;
