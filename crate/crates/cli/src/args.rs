use clap::{Parser, Subcommand, ValueEnum};
use latcount_core::{BigUint, Method};
use num_traits::Zero;

/// Count, enumerate and cross-check sublattices of a given index.
#[derive(Debug, Parser)]
#[command(name = "latcount", version)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    JsonLines,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute f_n(m), the number of index-m sublattices of Z^n.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = parse_positive)]
        m: BigUint,
        /// Counting method.
        #[arg(long, value_parser = parse_method, conflicts_with = "all")]
        method: Option<Method>,
        /// Run every method and fail if any two disagree.
        #[arg(long)]
        all: bool,
        /// Leave the basis enumeration out of --all.
        #[arg(long, requires = "all")]
        no_enumeration: bool,
        /// Largest enumeration attempted.
        #[arg(long, default_value_t = latcount_core::count::DEFAULT_ENUMERATION_CAP)]
        enumeration_cap: u64,
    },
    /// Stream the lower-triangular normal-form bases of index m.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = parse_positive)]
        m: BigUint,
        /// Stop after this many bases.
        #[arg(long)]
        limit: Option<u64>,
        /// Refuse to start an unlimited enumeration larger than this.
        #[arg(long, default_value_t = latcount_core::count::DEFAULT_ENUMERATION_CAP)]
        cap: u64,
    },
    /// Tabulate f_n(m) for m = 1..=max-m.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_m: u64,
        #[arg(long, value_parser = parse_method, default_value = "gruber")]
        method: Method,
    },
    /// Check the counting identities over a range of parameters.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n_max: u32,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m_max: u64,
        #[arg(long)]
        t_order: usize,
        /// Corrupt the product-formula value at this index (exercises the
        /// failure path).
        #[arg(long, hide = true)]
        inject_fault: Option<u64>,
    },
    /// Expand both sides of the Gaussian-binomial generating identity.
    Series {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        t_order: usize,
    },
    /// Coefficients of the local factor at a prime p.
    EulerFactor {
        #[arg(long)]
        p: BigUint,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long)]
        k_max: usize,
    },
}

fn parse_positive(s: &str) -> Result<BigUint, String> {
    let v: BigUint = s
        .parse()
        .map_err(|_| format!("{s:?} is not a non-negative integer"))?;
    if v.is_zero() {
        return Err("must be at least 1".into());
    }
    Ok(v)
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|_| {
        let names: Vec<&str> = Method::ALL.iter().map(|m| m.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}
