mod args;
mod output;
mod verify;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use latcount_core::arith::{Factorizer, DEFAULT_TRIAL_DIVISION_BOUND};
use latcount_core::hnf::enumerate_hnf_with;
use latcount_core::series::euler_factor_with;
use latcount_core::{
    dirichlet_coefficients, lhs_product, rhs_sum, BigUint, Counter, Error, HnfConvention, Method,
};

use args::{Cli, Command};
use output::Printer;

const BOUND_VAR: &str = "LATCOUNT_TRIAL_DIVISION_BOUND";

const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

#[derive(Debug)]
enum Failure {
    Core(Error),
    Io(io::Error),
    Usage(String),
    Capacity(String),
    /// Output is already written; only the exit status is left.
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(e) if e.is_capacity() => EXIT_CAPACITY,
            Failure::Capacity(_) => EXIT_CAPACITY,
            Failure::Core(Error::Domain(_)) | Failure::Usage(_) => EXIT_USAGE,
            Failure::Core(Error::Discrepancy(_)) | Failure::Mismatch(_) => EXIT_MISMATCH,
            Failure::Core(_) | Failure::Io(_) => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Core(e) => eprintln!("latcount: {e}"),
                Failure::Io(e) => eprintln!("latcount: write failed: {e}"),
                Failure::Usage(msg) | Failure::Capacity(msg) | Failure::Mismatch(msg) => {
                    eprintln!("latcount: {msg}")
                }
            }
            ExitCode::from(failure.exit_code())
        }
    }
}

fn factorizer_from_env() -> Result<Factorizer, Failure> {
    match std::env::var(BOUND_VAR) {
        Ok(raw) => {
            raw.trim().parse::<u64>().map(Factorizer::new).map_err(|_| {
                Failure::Usage(format!("{BOUND_VAR}={raw:?} is not a positive integer"))
            })
        }
        Err(std::env::VarError::NotPresent) => Ok(Factorizer::new(DEFAULT_TRIAL_DIVISION_BOUND)),
        Err(e) => Err(Failure::Usage(format!("{BOUND_VAR}: {e}"))),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let counter = Counter {
        factorizer: factorizer_from_env()?,
        ..Counter::default()
    };
    let stdout = io::stdout().lock();
    let mut out = Printer::new(BufWriter::new(stdout), cli.format);
    let result = dispatch(cli.command, counter, &mut out);
    out.flush()?;
    result
}

fn dispatch<W: Write>(
    command: Command,
    counter: Counter,
    out: &mut Printer<W>,
) -> Result<(), Failure> {
    match command {
        Command::Count {
            n,
            m,
            method,
            all,
            no_enumeration,
            enumeration_cap,
        } => {
            let counter = Counter {
                enumeration_cap,
                ..counter
            };
            if all {
                let results = match counter.all_methods(n, &m, !no_enumeration) {
                    Ok(r) => r,
                    Err(Error::Discrepancy(r)) => {
                        for c in &r {
                            out.count(n, &m, c.method, &c.value, true)?;
                        }
                        return Err(Error::Discrepancy(r).into());
                    }
                    Err(e) => return Err(e.into()),
                };
                for c in &results {
                    out.count(n, &m, c.method, &c.value, true)?;
                }
                if !results.iter().any(|c| c.method == Method::HnfEnumeration) && !no_enumeration {
                    eprintln!(
                        "latcount: hnf enumeration skipped (count exceeds cap {enumeration_cap})"
                    );
                }
            } else {
                let method = method.unwrap_or(Method::Gruber);
                let result = counter.count(method, n, &m)?;
                out.count(n, &m, method, &result.value, false)?;
            }
            Ok(())
        }
        Command::Enumerate { n, m, limit, cap } => {
            if limit.is_none() {
                let predicted = counter.gruber(n, &m)?.value;
                if predicted > BigUint::from(cap) {
                    return Err(Failure::Capacity(format!(
                        "{predicted} bases exceed the enumeration cap {cap}; pass --limit or raise --cap"
                    )));
                }
            }
            let stream = enumerate_hnf_with(n, &m, HnfConvention::RowBounded, &counter.factorizer)?;
            let mut count = 0u64;
            for h in stream.take(limit.map_or(usize::MAX, |l| l as usize)) {
                out.matrix(&h)?;
                count += 1;
            }
            Ok(out.total(count)?)
        }
        Command::Table { n, max_m, method } => {
            if method == Method::Dirichlet {
                let limit = usize::try_from(max_m)
                    .ok()
                    .filter(|&l| l <= counter.dirichlet_limit)
                    .ok_or(Error::DirichletLimit {
                        index: max_m.into(),
                        limit: counter.dirichlet_limit,
                    })?;
                for (m, v) in dirichlet_coefficients(n, limit)?.iter() {
                    out.table_row(n, m as u64, method, v)?;
                }
            } else {
                for m in 1..=max_m {
                    let v = counter.count(method, n, &m.into())?.value;
                    out.table_row(n, m, method, &v)?;
                }
            }
            Ok(())
        }
        Command::Verify {
            n_max,
            m_max,
            t_order,
            inject_fault,
        } => {
            let params = verify::Params {
                n_max,
                m_max,
                t_order,
                fault: inject_fault,
            };
            let outcomes = verify::run(&counter, &params)?;
            for o in &outcomes {
                out.check(o.name, &o.scope, o.counterexample.as_deref())?;
            }
            let failed = outcomes.iter().filter(|o| !o.passed()).count();
            if failed > 0 {
                return Err(Failure::Mismatch(format!(
                    "{failed} property families failed"
                )));
            }
            Ok(())
        }
        Command::Series { n, t_order } => {
            let n = n as usize;
            let lhs = lhs_product(n, t_order);
            let rhs = rhs_sum(n, t_order);
            for (side, series) in [("lhs", &lhs), ("rhs", &rhs)] {
                out.series_side(side)?;
                for (k, c) in series.coeffs().iter().enumerate() {
                    out.series_coeff(side, k, c)?;
                }
            }
            if lhs == rhs {
                out.verdict("match")?;
                Ok(())
            } else {
                out.verdict("mismatch")?;
                Err(Failure::Mismatch("series sides differ".into()))
            }
        }
        Command::EulerFactor { p, n, k_max } => {
            let coeffs = euler_factor_with(&p, n, k_max, &counter.factorizer)?;
            for (k, c) in coeffs.iter().enumerate() {
                out.euler_row(&p, n, k, c)?;
            }
            Ok(())
        }
    }
}
