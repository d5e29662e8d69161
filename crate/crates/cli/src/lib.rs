//! Command implementations behind the `dccodes` binary. Each command returns
//! its stdout bytes and an exit status so it can be driven from tests.

pub mod config;

use std::fmt;

use dccodes::bordered::{self, complement_lift};
use dccodes::circulant::explain_orthogonal;
use dccodes::search::{classify_dc, emit, OracleMode, OutputFormat};
use dccodes::tables::{reproduce_tables, TablesConfig};
use dccodes::text::to_hex;
use dccodes::{
    parse_ring, search, BorderedDescriptor, DcDescriptor, Enumerator, Error, PredicateUsed,
    RingElement, SearchConfig,
};
use serde::Serialize;

/// Exit status: 1 for a mismatch or counterexample, 2 for bad input.
#[derive(Debug)]
pub enum Failure {
    Mismatch(String),
    Usage(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch(s) | Failure::Usage(s) => f.write_str(s),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Counterexample(_) => Failure::Mismatch(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// What a command printed and whether it succeeded.
#[derive(Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: Vec<u8>,
    pub exit_code: u8,
}

impl Output {
    fn ok(stdout: impl Into<Vec<u8>>) -> Self {
        Output {
            stdout: stdout.into(),
            exit_code: 0,
        }
    }
}

pub type CmdResult = Result<Output, Failure>;

fn json_line<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(value).expect("plain data serializes");
    out.push(b'\n');
    out
}

pub fn parse_poly(m: usize, f: &str) -> Result<RingElement, Failure> {
    Ok(parse_ring(f, Some(m))?)
}

pub fn run_search(cfg: &SearchConfig, format: OutputFormat) -> CmdResult {
    Ok(Output::ok(emit(&search(cfg)?, format)))
}

pub fn run_tables(workers: usize, oracle: OracleMode) -> CmdResult {
    let outcome = reproduce_tables(&TablesConfig { workers, oracle })?;
    Ok(Output {
        stdout: outcome.to_string().into_bytes(),
        exit_code: if outcome.passed() { 0 } else { 1 },
    })
}

pub fn run_verify(m: usize, f: &str, bordered: bool, alpha: bool) -> CmdResult {
    let f = parse_poly(m, f)?;
    let code = if bordered {
        BorderedDescriptor::new(f, alpha).build()
    } else {
        DcDescriptor::new(f).build()
    };
    Ok(Output::ok(json_line(
        &Enumerator::default().metrics(&code)?,
    )))
}

pub fn run_count_orthogonal(m: usize, explain: bool) -> CmdResult {
    let count = explain_orthogonal(m)?;
    Ok(Output::ok(if explain {
        count.to_string()
    } else {
        format!("{}\n", count.count)
    }))
}

#[derive(Serialize)]
struct DcClassification {
    self_dual: bool,
    weight: usize,
    predicate_used: PredicateUsed,
    extremal: bool,
    oracle_d: Option<usize>,
}

pub fn run_dc_classify(m: usize, f: &str) -> CmdResult {
    let r = classify_dc(&parse_poly(m, f)?, 1, true)?;
    Ok(Output::ok(json_line(&DcClassification {
        self_dual: r.self_dual,
        weight: r.weight,
        predicate_used: r.predicate,
        extremal: r.extremal,
        oracle_d: r.d,
    })))
}

pub fn run_dc_canonical(m: usize, f: &str) -> CmdResult {
    let canon = DcDescriptor::new(parse_poly(m, f)?).canonical_form()?;
    Ok(Output::ok(format!("{canon}\n")))
}

pub fn run_bordered_classify(m: usize, f: &str, alpha: bool) -> CmdResult {
    let b = BorderedDescriptor::new(parse_poly(m, f)?, alpha);
    Ok(Output::ok(json_line(&bordered::classify(
        &b,
        &Enumerator::default(),
    )?)))
}

#[derive(Serialize)]
struct Lifted {
    m: usize,
    f: String,
    hex: String,
    alpha: u8,
    self_dual: bool,
}

pub fn run_bordered_lift(m: usize, f: &str) -> CmdResult {
    let b = complement_lift(&parse_poly(m, f)?)?;
    Ok(Output::ok(json_line(&Lifted {
        m,
        f: b.poly().to_string(),
        hex: to_hex(b.poly()),
        alpha: b.alpha() as u8,
        self_dual: b.is_self_dual(),
    })))
}
