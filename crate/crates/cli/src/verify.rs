//! The `verify` property suite.
//!
//! Every family walks its parameter space in increasing order and stops at
//! the first failure, so the reported counterexample is the smallest one.

use std::collections::HashSet;

use latcount_core::hnf::enumerate_hnf_with;
use latcount_core::series::euler_factor_with;
use latcount_core::{
    dirichlet_coefficients, gauss_binomial, lhs_product, q_factorial, rhs_sum, validate_hnf,
    BigUint, Counter, HnfConvention, Method, Result,
};
use num_integer::Integer;

/// Enumerations larger than this are left out of the completeness check.
const ENUMERATION_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub name: &'static str,
    pub scope: String,
    pub counterexample: Option<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

pub struct Params {
    pub n_max: u32,
    pub m_max: u64,
    pub t_order: usize,
    /// Add one to the product-formula value at this index.
    pub fault: Option<u64>,
}

/// `values[method][n - 1][m - 1] = f_n(m)` for the formula methods.
struct Tables {
    values: Vec<Vec<Vec<BigUint>>>,
}

impl Tables {
    fn get(&self, method: usize, n: u32, m: u64) -> &BigUint {
        &self.values[method][n as usize - 1][m as usize - 1]
    }
}

fn build_tables(counter: &Counter, params: &Params) -> Result<Tables> {
    let mut values = Vec::new();
    for method in Method::FORMULAS {
        let mut per_n = Vec::new();
        for n in 1..=params.n_max {
            let row = if method == Method::Dirichlet {
                let limit = usize::try_from(params.m_max)
                    .ok()
                    .filter(|&l| l <= counter.dirichlet_limit)
                    .ok_or_else(|| latcount_core::Error::DirichletLimit {
                        index: params.m_max.into(),
                        limit: counter.dirichlet_limit,
                    })?;
                dirichlet_coefficients(n, limit)?.into_values()
            } else {
                let mut row = Vec::with_capacity(params.m_max as usize);
                for m in 1..=params.m_max {
                    let mut v = counter.count(method, n, &m.into())?.value;
                    if method == Method::Gruber && params.fault == Some(m) {
                        v += 1u32;
                    }
                    row.push(v);
                }
                row
            };
            per_n.push(row);
        }
        values.push(per_n);
    }
    Ok(Tables { values })
}

pub fn run(counter: &Counter, params: &Params) -> Result<Vec<Outcome>> {
    let tables = build_tables(counter, params)?;
    let (n_max, m_max) = (params.n_max, params.m_max);
    let q_max = (n_max as usize - 1 + params.t_order).max(1);

    Ok(vec![
        Outcome {
            name: "cross-method agreement",
            scope: format!("n<={n_max}, m<={m_max}"),
            counterexample: cross_method(&tables, n_max, m_max),
        },
        Outcome {
            name: "multiplicativity",
            scope: format!("n<={n_max}, ab<={m_max}"),
            counterexample: multiplicativity(&tables, n_max, m_max),
        },
        Outcome {
            name: "enumeration completeness",
            scope: format!("n<={n_max}, m<={m_max}, f<={ENUMERATION_LIMIT}"),
            counterexample: enumeration(counter, &tables, n_max, m_max)?,
        },
        Outcome {
            name: "q-binomial symmetry",
            scope: format!("0<=k<=m<={q_max}"),
            counterexample: q_symmetry(q_max),
        },
        Outcome {
            name: "q-binomial definition",
            scope: format!("0<=k<=m<={q_max}"),
            counterexample: q_definition(q_max),
        },
        Outcome {
            name: "generating identity",
            scope: format!("n<={n_max}, K={}", params.t_order),
            counterexample: generating_identity(n_max, params.t_order),
        },
        Outcome {
            name: "euler factor consistency",
            scope: format!("n<={n_max}, p^k<={m_max}"),
            counterexample: euler_consistency(counter, &tables, n_max, m_max)?,
        },
    ])
}

fn cross_method(tables: &Tables, n_max: u32, m_max: u64) -> Option<String> {
    for m in 1..=m_max {
        for n in 1..=n_max {
            let first = tables.get(0, n, m);
            if (1..Method::FORMULAS.len()).any(|i| tables.get(i, n, m) != first) {
                let values: Vec<String> = Method::FORMULAS
                    .iter()
                    .enumerate()
                    .map(|(i, method)| format!("{method}={}", tables.get(i, n, m)))
                    .collect();
                return Some(format!("n={n} m={m}: {}", values.join(" ")));
            }
        }
    }
    None
}

fn multiplicativity(tables: &Tables, n_max: u32, m_max: u64) -> Option<String> {
    for c in 1..=m_max {
        for a in (2..c).filter(|&a| c % a == 0 && a * a < c) {
            let b = c / a;
            if a.gcd(&b) != 1 {
                continue;
            }
            for n in 1..=n_max {
                for (i, method) in Method::FORMULAS.iter().enumerate() {
                    let product = tables.get(i, n, a) * tables.get(i, n, b);
                    if *tables.get(i, n, c) != product {
                        return Some(format!(
                            "{method} n={n} a={a} b={b}: f(ab)={} f(a)f(b)={product}",
                            tables.get(i, n, c)
                        ));
                    }
                }
            }
        }
    }
    None
}

fn enumeration(
    counter: &Counter,
    tables: &Tables,
    n_max: u32,
    m_max: u64,
) -> Result<Option<String>> {
    let recursion = Method::FORMULAS
        .iter()
        .position(|&m| m == Method::Recursion)
        .expect("recursion is a formula method");
    for m in 1..=m_max {
        for n in 1..=n_max {
            let expected = tables.get(recursion, n, m);
            if *expected > BigUint::from(ENUMERATION_LIMIT) {
                continue;
            }
            let m_big = BigUint::from(m);
            let mut seen = HashSet::new();
            for h in enumerate_hnf_with(n, &m_big, HnfConvention::RowBounded, &counter.factorizer)?
            {
                if !validate_hnf(&h, &m_big) {
                    return Ok(Some(format!("n={n} m={m}: invalid basis {h}")));
                }
                if !seen.insert(h.clone()) {
                    return Ok(Some(format!("n={n} m={m}: duplicate basis {h}")));
                }
            }
            if BigUint::from(seen.len()) != *expected {
                return Ok(Some(format!(
                    "n={n} m={m}: enumerated {} expected {expected}",
                    seen.len()
                )));
            }
        }
    }
    Ok(None)
}

fn q_symmetry(q_max: usize) -> Option<String> {
    for m in 0..=q_max {
        for k in 0..=m {
            if gauss_binomial(m, k) != gauss_binomial(m, m - k) {
                return Some(format!("m={m} k={k}"));
            }
        }
    }
    None
}

fn q_definition(q_max: usize) -> Option<String> {
    for m in 0..=q_max {
        let full = q_factorial(m);
        for k in 0..=m {
            let b = gauss_binomial(m, k);
            let rebuilt = &(&b * &q_factorial(m - k)) * &q_factorial(k);
            if rebuilt != full || b.degree() != Some(k * (m - k)) || !b.has_nonnegative_coeffs() {
                return Some(format!("m={m} k={k}"));
            }
        }
    }
    None
}

fn generating_identity(n_max: u32, order: usize) -> Option<String> {
    for n in 1..=n_max as usize {
        let (lhs, rhs) = (lhs_product(n, order), rhs_sum(n, order));
        if let Some(k) = (0..=order).find(|&k| lhs.coeff(k) != rhs.coeff(k)) {
            return Some(format!(
                "n={n} t^{k}: lhs {} rhs {}",
                lhs.coeff(k),
                rhs.coeff(k)
            ));
        }
    }
    None
}

fn euler_consistency(
    counter: &Counter,
    tables: &Tables,
    n_max: u32,
    m_max: u64,
) -> Result<Option<String>> {
    let gruber = Method::FORMULAS
        .iter()
        .position(|&m| m == Method::Gruber)
        .expect("gruber is a formula method");
    for p in 2..=m_max {
        if !counter.factorizer.is_prime(&p.into())? {
            continue;
        }
        let k_max = (1..)
            .take_while(|&k| p.checked_pow(k).is_some_and(|pk| pk <= m_max))
            .count();
        for n in 1..=n_max {
            let local = euler_factor_with(&p.into(), n, k_max, &counter.factorizer)?;
            let mut pk = 1u64;
            for (k, c) in local.iter().enumerate() {
                if k > 0 {
                    pk *= p;
                }
                if c != tables.get(gruber, n, pk) {
                    return Ok(Some(format!(
                        "p={p} n={n} k={k}: local {c} global {}",
                        tables.get(gruber, n, pk)
                    )));
                }
            }
        }
    }
    Ok(None)
}
