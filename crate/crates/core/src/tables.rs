//! Reproduction of the published tables of extremal self-dual DC codes.

use std::fmt;

use crate::dc::{canonical_u64, DcDescriptor};
use crate::error::{Error, Result};
use crate::linear_code::Enumerator;
use crate::search::{search_pinned, OracleMode, Pinned, SearchConfig, SearchKind};
use crate::text::parse_ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedRow {
    pub table: u8,
    pub m: usize,
    pub f: &'static str,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// The dimension as printed, when it differs from `k`.
    pub printed_k: Option<usize>,
}

const fn row(table: u8, m: usize, f: &'static str, d: usize) -> ExpectedRow {
    ExpectedRow {
        table,
        m,
        f,
        n: 2 * m,
        k: m,
        d,
        printed_k: None,
    }
}

pub const TABLE_1: [ExpectedRow; 8] = [
    row(1, 4, "x^2+x+1", 4),
    row(1, 6, "x^4+x^3+x^2+x+1", 4),
    row(1, 8, "x^4+x^2+1", 4),
    row(1, 8, "x^6+x^5+x^4+x^2+1", 4),
    row(1, 8, "x^6+x^5+x^4+x^3+x^2+x+1", 4),
    row(1, 9, "x^6+x^4+x^3+x+1", 4),
    row(1, 10, "x^9+x^7+x^5+x^4+1", 4),
    row(1, 10, "x^8+x^7+x^6+x^5+x^4+x^3+x^2+x+1", 4),
];

/// Moduli where no extremal self-dual DC code exists.
pub const TABLE_1_EMPTY: [usize; 2] = [5, 7];

pub const TABLE_2: [ExpectedRow; 3] = [
    row(2, 12, "x^8+x^6+x^5+x^4+x^3+x+1", 8),
    // printed as [32, 12, 8]; a length-32 DC code has dimension 16
    ExpectedRow {
        printed_k: Some(12),
        ..row(2, 16, "x^9+x^8+x^7+x^6+x^5+x^3+1", 8)
    },
    row(2, 20, "x^10+x^9+x^8+x^4+x^3+x+1", 8),
];

#[derive(Clone, Copy, Debug)]
pub struct TablesConfig {
    pub workers: usize,
    pub oracle: OracleMode,
}

impl Default for TablesConfig {
    fn default() -> Self {
        TablesConfig {
            workers: 1,
            oracle: OracleMode::Always,
        }
    }
}

#[derive(Clone, Debug)]
pub struct RowOutcome {
    pub expected: ExpectedRow,
    pub found_in_search: bool,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub self_dual: bool,
    pub extremal: bool,
}

impl RowOutcome {
    pub fn ok(&self) -> bool {
        let e = &self.expected;
        self.found_in_search
            && self.self_dual
            && self.extremal
            && (self.n, self.k, self.d) == (e.n, e.k, e.d)
    }
}

#[derive(Clone, Debug)]
pub struct TablesOutcome {
    pub rows: Vec<RowOutcome>,
    /// `(m, number of extremal classes found)` for the moduli expected empty.
    pub empty_checks: Vec<(usize, usize)>,
    /// Extremal classes found by the sweep that no expected row covers.
    pub extra_classes: Vec<(usize, String)>,
}

impl TablesOutcome {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(RowOutcome::ok) && self.empty_checks.iter().all(|&(_, n)| n == 0)
    }
}

pub fn reproduce_tables(cfg: &TablesConfig) -> Result<TablesOutcome> {
    if cfg.oracle == OracleMode::Off {
        return Err(Error::precondition(
            "reproduce_tables",
            "table reproduction requires the oracle",
        ));
    }
    let mut pinned = Pinned::new();
    for r in TABLE_1.iter() {
        let f = parse_ring(r.f, Some(r.m))?;
        pinned.insert((r.m, canonical_u64(f.as_u64().unwrap(), r.m)));
    }
    let mut sweep = SearchConfig::new(SearchKind::ExtremalDc, 4, 10);
    sweep.workers = cfg.workers;
    sweep.oracle = Some(cfg.oracle);
    let found = search_pinned(&sweep, &pinned)?;

    let enumerator = Enumerator::default();
    let mut rows = Vec::new();
    for e in TABLE_1.iter().chain(TABLE_2.iter()) {
        let f = parse_ring(e.f, Some(e.m))?;
        let desc = DcDescriptor::new(f.clone());
        let canon = desc.canonical_form()?.to_string();
        let found_in_search = if e.table == 1 {
            found
                .iter()
                .any(|r| r.m == e.m && r.f == canon && r.extremal)
        } else {
            // beyond the sweep: the weight-7 rule must accept it
            desc.is_self_dual() && desc.extremal_24_44()?
        };
        let code = desc.build();
        let self_dual = code.is_self_dual();
        let d = enumerator.min_distance(&code)?;
        rows.push(RowOutcome {
            expected: *e,
            found_in_search,
            n: code.length(),
            k: code.dimension(),
            d,
            self_dual,
            extremal: self_dual && d == crate::linear_code::extremal_bound(code.length())?,
        });
    }

    let empty_checks = TABLE_1_EMPTY
        .iter()
        .map(|&m| (m, found.iter().filter(|r| r.m == m).count()))
        .collect();
    let extra_classes = found
        .iter()
        .filter(|r| {
            !TABLE_1.iter().any(|e| {
                e.m == r.m
                    && parse_ring(e.f, Some(e.m))
                        .and_then(|f| DcDescriptor::new(f).canonical_form())
                        .is_ok_and(|c| c.to_string() == r.f)
            })
        })
        .map(|r| (r.m, r.f.clone()))
        .collect();
    Ok(TablesOutcome {
        rows,
        empty_checks,
        extra_classes,
    })
}

impl fmt::Display for TablesOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let e = &r.expected;
            write!(
                f,
                "{} table {} m={:<2} {:<34} expected [{}, {}, {}]",
                if r.ok() { "ok  " } else { "FAIL" },
                e.table,
                e.m,
                e.f,
                e.n,
                e.k,
                e.d
            )?;
            if !r.ok() {
                write!(
                    f,
                    " got [{}, {}, {}] self_dual={} extremal={} found={}",
                    r.n, r.k, r.d, r.self_dual, r.extremal, r.found_in_search
                )?;
            }
            if let Some(pk) = e.printed_k {
                write!(f, " (printed dimension {pk})")?;
            }
            writeln!(f)?;
        }
        for &(m, n) in &self.empty_checks {
            writeln!(
                f,
                "{} table 1 m={m:<2} no extremal codes of length {} (found {n})",
                if n == 0 { "ok  " } else { "FAIL" },
                2 * m
            )?;
        }
        for (m, poly) in &self.extra_classes {
            writeln!(f, "note table 1 m={m:<2} additional extremal class {poly}")?;
        }
        writeln!(f, "{}", if self.passed() { "PASS" } else { "MISMATCH" })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expected_rows_parse() {
        for e in TABLE_1.iter().chain(TABLE_2.iter()) {
            let f = parse_ring(e.f, Some(e.m)).unwrap();
            assert_eq!(f.to_string(), e.f);
        }
    }

    #[test]
    fn oracle_off_is_rejected() {
        let cfg = TablesConfig {
            workers: 1,
            oracle: OracleMode::Off,
        };
        assert!(reproduce_tables(&cfg).is_err());
    }
}
