//! Line-oriented record rendering for every output format.

use std::io::{self, Write};

use latcount_core::{BigUint, HnfMatrix, Method, QPolynomial};
use serde_json::json;

use crate::args::Format;

pub struct Printer<W: Write> {
    out: W,
    format: Format,
}

impl<W: Write> Printer<W> {
    pub fn new(out: W, format: Format) -> Self {
        Printer { out, format }
    }

    fn json(&mut self, value: serde_json::Value) -> io::Result<()> {
        writeln!(self.out, "{value}")
    }

    /// One counting result. `labelled` prefixes plain output with the method
    /// name, for listings of several methods.
    pub fn count(
        &mut self,
        n: u32,
        m: &BigUint,
        method: Method,
        value: &BigUint,
        labelled: bool,
    ) -> io::Result<()> {
        match self.format {
            Format::Plain if labelled => writeln!(self.out, "{method}: {value}"),
            Format::Plain => writeln!(self.out, "{value}"),
            Format::Csv => writeln!(self.out, "{n},{m},{method},{value}"),
            Format::JsonLines => self.json(json!({
                "n": n,
                "m": m.to_string(),
                "method": method.name(),
                "value": value.to_string(),
            })),
        }
    }

    /// A row of a table of f_n(m).
    pub fn table_row(&mut self, n: u32, m: u64, method: Method, value: &BigUint) -> io::Result<()> {
        match self.format {
            Format::Plain => writeln!(self.out, "{m} {value}"),
            Format::Csv => writeln!(self.out, "{m},{value}"),
            Format::JsonLines => self.json(json!({
                "n": n,
                "m": m.to_string(),
                "method": method.name(),
                "value": value.to_string(),
            })),
        }
    }

    pub fn matrix(&mut self, h: &HnfMatrix) -> io::Result<()> {
        match self.format {
            Format::Plain => writeln!(self.out, "{h}"),
            Format::Csv => writeln!(self.out, "\"{h}\""),
            Format::JsonLines => self.json(json!({ "matrix": h.to_string() })),
        }
    }

    pub fn total(&mut self, count: u64) -> io::Result<()> {
        match self.format {
            Format::Plain => writeln!(self.out, "count: {count}"),
            Format::Csv => writeln!(self.out, "count,{count}"),
            Format::JsonLines => self.json(json!({ "count": count.to_string() })),
        }
    }

    pub fn euler_row(&mut self, p: &BigUint, n: u32, k: usize, value: &BigUint) -> io::Result<()> {
        match self.format {
            Format::Plain => writeln!(self.out, "{k} {value}"),
            Format::Csv => writeln!(self.out, "{k},{value}"),
            Format::JsonLines => self.json(json!({
                "p": p.to_string(),
                "n": n,
                "k": k,
                "value": value.to_string(),
            })),
        }
    }

    /// Heading before the coefficients of one side of the series identity.
    pub fn series_side(&mut self, side: &str) -> io::Result<()> {
        match self.format {
            Format::Plain => writeln!(self.out, "{side}:"),
            Format::Csv | Format::JsonLines => Ok(()),
        }
    }

    pub fn series_coeff(&mut self, side: &str, k: usize, c: &QPolynomial) -> io::Result<()> {
        match self.format {
            Format::Plain => writeln!(self.out, "t^{k}: {c}"),
            Format::Csv => writeln!(self.out, "{side},{k},{c}"),
            Format::JsonLines => self.json(json!({
                "side": side,
                "k": k,
                "coefficient": c.to_string(),
            })),
        }
    }

    pub fn verdict(&mut self, verdict: &str) -> io::Result<()> {
        match self.format {
            Format::Plain => writeln!(self.out, "verdict: {verdict}"),
            Format::Csv => writeln!(self.out, "verdict,{verdict}"),
            Format::JsonLines => self.json(json!({ "verdict": verdict })),
        }
    }

    /// Outcome of one property family in `verify`.
    pub fn check(&mut self, name: &str, scope: &str, failure: Option<&str>) -> io::Result<()> {
        let status = if failure.is_some() { "FAIL" } else { "PASS" };
        match self.format {
            Format::Plain => match failure {
                None => writeln!(self.out, "{status} {name} ({scope})"),
                Some(c) => writeln!(self.out, "{status} {name} ({scope}): counterexample {c}"),
            },
            Format::Csv => writeln!(
                self.out,
                "{status},{name},\"{scope}\",\"{}\"",
                failure.unwrap_or_default()
            ),
            Format::JsonLines => self.json(json!({
                "property": name,
                "scope": scope,
                "status": status,
                "counterexample": failure,
            })),
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}
