//! Command-line frontend: argument handling, dispatch and report output.
//!
//! Exit codes: 0 completed as expected, 1 internal failure, 2 invalid
//! arguments, 3 a result departing from the expected reducibility pattern.

pub mod report;
pub mod text;

use std::ffi::OsString;
use std::time::Instant;

use clap::{Parser, Subcommand};
use cunningham::chains::{self, ChainKind, FamilyParams};
use cunningham::conjecture::{self, DEFAULT_EXTRA};
use cunningham::intchains::{self, MillerRabin};
use cunningham::{decide_irreducible, factor_over_rationals, Error, Polynomial};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use report::{factor_strings, Entry, Format, RunReport};
pub use text::{format_polynomial, parse_polynomial, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FINDING: i32 = 3;

/// Environment variable holding the seed for random Miller–Rabin witnesses.
pub const SEED_VAR: &str = "CUNNINGHAM_SEED";

#[derive(Debug, Parser)]
#[command(
    name = "cunningham",
    version,
    about = "Polynomial Cunningham chain toolkit"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Factor a polynomial over the rationals.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Decide irreducibility, with a certificate or a factorization.
    Verdict {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Report the chain f_{i+1} = x f_i + eps from a seed.
    Chain {
        #[arg(long, value_parser = parse_eps, allow_hyphen_values = true)]
        eps: ChainKind,
        #[arg(long, allow_hyphen_values = true)]
        seed: String,
        #[arg(long)]
        through: usize,
    },
    /// Report a family chain, expected to be reducible only at i = k + 1.
    Family {
        #[arg(long, value_parser = parse_kind)]
        kind: ChainKind,
        #[arg(short = 'm')]
        m: u64,
        #[arg(short = 'k')]
        k: u64,
        #[arg(long)]
        through: usize,
    },
    /// Scan x^j + ... + x + m for j from t - k to t + extra.
    Conjecture {
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_EXTRA)]
        extra: usize,
    },
    /// Follow an integer chain from a prime, or search for chains of a given length.
    Intchain {
        #[arg(long, value_parser = parse_eps, allow_hyphen_values = true)]
        eps: ChainKind,
        #[arg(long, required_unless_present = "length", conflicts_with_all = ["length", "bound"])]
        start: Option<BigInt>,
        #[arg(long, requires = "bound")]
        length: Option<usize>,
        #[arg(long, requires = "length")]
        bound: Option<u64>,
    },
}

fn parse_eps(s: &str) -> Result<ChainKind, String> {
    match s.trim().replace('\u{2212}', "-").as_str() {
        "+1" | "1" => Ok(ChainKind::First),
        "-1" => Ok(ChainKind::Second),
        other => Err(format!("expected +1 or -1, got '{other}'")),
    }
}

fn parse_kind(s: &str) -> Result<ChainKind, String> {
    match s.trim() {
        "1" => Ok(ChainKind::First),
        "2" => Ok(ChainKind::Second),
        other => Err(format!("expected 1 or 2, got '{other}'")),
    }
}

/// Exit status with everything the process would print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoConvergence { .. } | Error::FactorMismatch(_) | Error::NotCoprime(_) => {
                Failure::Internal(e.to_string())
            }
            Error::NonPositiveLeading => Failure::Usage(format!(
                "{e}; negate the seed and flip eps to get the mirrored chain"
            )),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn poly_arg(text: &str) -> Result<Polynomial, Failure> {
    parse_polynomial(text).map_err(|e| Failure::Usage(format!("cannot parse '{text}': {e}")))
}

fn seed_from_env() -> Result<u64, Failure> {
    match std::env::var(SEED_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!("{SEED_VAR} must be an unsigned integer, got '{v}'"))
        }),
        Err(_) => Ok(0),
    }
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

fn eps_value(kind: ChainKind) -> Value {
    json!(if kind == ChainKind::First { "+1" } else { "-1" })
}

fn factor(text: &str) -> Result<RunReport, Failure> {
    let f = poly_arg(text)?;
    let fact = factor_over_rationals(&f)?;
    let mut r = RunReport::new("factor", params(&[("poly", json!(f.to_string()))]));
    let status = match (f.degree(), fact.is_irreducible()) {
        (Some(0), _) => "constant",
        (_, true) => "irreducible",
        _ => "reducible",
    };
    r.entries.push(Entry {
        i: 1,
        poly: f.to_string(),
        status: status.to_string(),
        certificate: None,
        witness_factors: Some(factor_strings(&fact)),
    });
    Ok(r)
}

fn verdict(text: &str) -> Result<RunReport, Failure> {
    let f = poly_arg(text)?;
    let v = decide_irreducible(&f)?;
    let mut r = RunReport::new("verdict", params(&[("poly", json!(f.to_string()))]));
    r.entries.push(Entry::from_verdict(1, &f, &v));
    Ok(r)
}

fn chain_entries(report: &chains::ChainReport) -> Vec<Entry> {
    report
        .entries
        .iter()
        .map(|e| Entry::from_verdict(e.index, &e.poly, &e.verdict))
        .collect()
}

fn chain(kind: ChainKind, seed: &str, through: usize) -> Result<RunReport, Failure> {
    let f = poly_arg(seed)?;
    let report = chains::chain_report(&f, kind, through)?;
    let mut r = RunReport::new(
        "chain",
        params(&[
            ("eps", eps_value(kind)),
            ("seed", json!(f.to_string())),
            ("through", json!(through)),
        ]),
    );
    r.entries = chain_entries(&report);
    Ok(r)
}

fn family(kind: ChainKind, m: u64, k: u64, through: usize) -> Result<RunReport, Failure> {
    let p = FamilyParams::new(kind, m, k)?;
    let report = chains::family_report(&p, through)?;
    let mut r = RunReport::new(
        "family",
        params(&[
            ("kind", json!(kind.to_string())),
            ("m", json!(m)),
            ("k", json!(k)),
            ("through", json!(through)),
        ]),
    );
    r.entries = chain_entries(&report);
    let expected: Vec<usize> = Some(p.reducible_index())
        .filter(|&i| i <= through)
        .into_iter()
        .collect();
    let got = report.reducible_indices();
    if got != expected {
        r.findings
            .push(format!("reducible at {got:?}, expected {expected:?}"));
    }
    if kind == ChainKind::First && through >= p.reducible_index() {
        let (a, b) = chains::product_formula_kind1(m, k)?;
        if &a * &b != report.entries[p.reducible_index() - 1].poly {
            r.findings
                .push(format!("term {} is not ({a})({b})", p.reducible_index()));
        }
    }
    Ok(r)
}

fn conjecture_cmd(k: usize, extra: usize) -> Result<RunReport, Failure> {
    let scan = conjecture::conjecture_scan(k, extra)?;
    let t = scan.params.t;
    let mut r = RunReport::new(
        "conjecture",
        params(&[
            ("k", json!(k)),
            ("extra", json!(extra)),
            ("t", json!(t)),
            ("m", json!(scan.params.m.to_string())),
        ]),
    );
    r.entries = scan
        .entries
        .iter()
        .map(|e| Entry::from_verdict(e.j, &e.poly, &e.verdict))
        .collect();
    for e in scan.deviations() {
        r.findings.push(format!(
            "j = {} is {}, departing from the pattern at t = {t}",
            e.j,
            e.verdict.status()
        ));
    }
    let x_plus_2 = Polynomial::from_i64(&[2, 1]);
    let at_t = scan.entries.iter().find(|e| e.j == t);
    if at_t.is_some_and(|e| {
        !e.verdict
            .witness()
            .is_some_and(|w| w.factors.iter().any(|(g, _)| g == &x_plus_2))
    }) {
        r.findings
            .push(format!("x + 2 does not divide the term at j = {t}"));
    }
    Ok(r)
}

fn intchain(
    kind: ChainKind,
    start: Option<BigInt>,
    length: Option<usize>,
    bound: Option<u64>,
) -> Result<RunReport, Failure> {
    let mr = MillerRabin::new(seed_from_env()?);
    if let Some(p) = start {
        let c = intchains::int_chain_length_with(&p, kind, &mr)?;
        let mut r = RunReport::new(
            "intchain",
            params(&[
                ("eps", eps_value(kind)),
                ("start", json!(p.to_string())),
                ("length", json!(c.length())),
            ]),
        );
        r.entries = c
            .primes
            .iter()
            .enumerate()
            .map(|(i, p)| Entry {
                i: i + 1,
                poly: p.to_string(),
                status: "prime".into(),
                certificate: None,
                witness_factors: None,
            })
            .collect();
        r.entries.push(Entry {
            i: c.length() + 1,
            poly: c.terminator().to_string(),
            status: "composite".into(),
            certificate: None,
            witness_factors: None,
        });
        return Ok(r);
    }
    let (k, bound) = (
        length.expect("clap enforces"),
        bound.expect("clap enforces"),
    );
    let found = intchains::search_int_chains_with(k, kind, bound, &mr)?;
    if let Some(bad) = found.iter().find(|c| !c.revalidate(&mr)) {
        return Err(Failure::Internal(format!(
            "chain {bad} failed revalidation"
        )));
    }
    let mut r = RunReport::new(
        "intchain",
        params(&[
            ("eps", eps_value(kind)),
            ("length", json!(k)),
            ("bound", json!(bound)),
            ("found", json!(found.len())),
        ]),
    );
    r.entries = found
        .iter()
        .enumerate()
        .map(|(i, c)| Entry {
            i: i + 1,
            poly: c.to_string(),
            status: "chain".into(),
            certificate: None,
            witness_factors: None,
        })
        .collect();
    Ok(r)
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit status and rendered output.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.exit_code() {
                0 => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome::usage(text),
            };
        }
    };
    let started = Instant::now();
    let result = match cli.command {
        Command::Factor { poly } => factor(&poly),
        Command::Verdict { poly } => verdict(&poly),
        Command::Chain { eps, seed, through } => chain(eps, &seed, through),
        Command::Family {
            kind,
            m,
            k,
            through,
        } => family(kind, m, k, through),
        Command::Conjecture { k, extra } => conjecture_cmd(k, extra),
        Command::Intchain {
            eps,
            start,
            length,
            bound,
        } => intchain(eps, start, length, bound),
    };
    match result {
        Ok(mut r) => {
            r.elapsed_ms = started.elapsed().as_millis() as u64;
            let code = if r.findings.is_empty() {
                EXIT_OK
            } else {
                EXIT_FINDING
            };
            Outcome {
                code,
                stdout: r.render(cli.format),
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => Outcome::usage(format!("error: {msg}\n")),
        Err(Failure::Internal(msg)) => Outcome {
            code: EXIT_INTERNAL,
            stdout: String::new(),
            stderr: format!("internal error: {msg}\n"),
        },
    }
}
