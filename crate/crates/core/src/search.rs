//! Exhaustive search over generator polynomials.
//!
//! For each modulus the `2^m` coefficient patterns are split into shards by
//! their top bits. Shards filter candidates with a cheap ring-level predicate,
//! the survivors are merged in pattern order, grouped by canonical form, and
//! each class representative is classified (and, per the oracle policy,
//! cross-checked against full codeword enumeration).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bordered::{dc_is_lcd, BorderedDescriptor};
use crate::dc::{canonical_u64, DcDescriptor, PredicateUsed};
use crate::error::{Error, Result};
use crate::gf2ring::{word, RingElement};
use crate::linear_code::{extremal_bound, Enumerator};
use crate::text::parse_ring;

/// Largest modulus searched for DC kinds (dimension 22 enumeration).
pub const MAX_DC_MODULUS: usize = 22;
/// Largest modulus searched for bordered kinds.
pub const MAX_BORDERED_MODULUS: usize = 13;
/// Above this modulus the default oracle policy is `spot`.
pub const ALWAYS_ORACLE_UP_TO: usize = 16;
/// Under `spot`, every this-many-th class is cross-checked.
pub const SPOT_INTERVAL: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchKind {
    SelfdualDc,
    ExtremalDc,
    LcdDc,
    BorderedSelfdual,
    BorderedLcd,
}

impl SearchKind {
    pub fn is_bordered(self) -> bool {
        matches!(self, SearchKind::BorderedSelfdual | SearchKind::BorderedLcd)
    }

    pub fn max_modulus(self) -> usize {
        if self.is_bordered() {
            MAX_BORDERED_MODULUS
        } else {
            MAX_DC_MODULUS
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            SearchKind::SelfdualDc => "selfdual_dc",
            SearchKind::ExtremalDc => "extremal_dc",
            SearchKind::LcdDc => "lcd_dc",
            SearchKind::BorderedSelfdual => "bordered_selfdual",
            SearchKind::BorderedLcd => "bordered_lcd",
        }
    }
}

impl FromStr for SearchKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.replace('-', "_").as_str() {
            "selfdual_dc" => SearchKind::SelfdualDc,
            "extremal_dc" => SearchKind::ExtremalDc,
            "lcd_dc" => SearchKind::LcdDc,
            "bordered_selfdual" => SearchKind::BorderedSelfdual,
            "bordered_lcd" => SearchKind::BorderedLcd,
            _ => return Err(Error::Parse(format!("unknown search kind {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMode {
    Always,
    Spot,
    Off,
}

impl FromStr for OracleMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "always" => Ok(OracleMode::Always),
            "spot" => Ok(OracleMode::Spot),
            "off" => Ok(OracleMode::Off),
            _ => Err(Error::Parse(format!("unknown oracle mode {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(Error::Parse(format!("unknown output format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchConfig {
    pub m_min: usize,
    pub m_max: usize,
    pub kind: SearchKind,
    #[serde(default)]
    pub weight_filter: Option<BTreeSet<usize>>,
    #[serde(default = "default_workers")]
    pub workers: usize,
    #[serde(default)]
    pub output_format: OutputFormat,
    /// `None` selects `always` up to [`ALWAYS_ORACLE_UP_TO`] and `spot` above.
    #[serde(default)]
    pub oracle: Option<OracleMode>,
}

fn default_workers() -> usize {
    1
}

impl SearchConfig {
    pub fn new(kind: SearchKind, m_min: usize, m_max: usize) -> Self {
        SearchConfig {
            m_min,
            m_max,
            kind,
            weight_filter: None,
            workers: 1,
            output_format: OutputFormat::Csv,
            oracle: None,
        }
    }

    pub fn single(kind: SearchKind, m: usize) -> Self {
        Self::new(kind, m, m)
    }

    pub fn oracle_for(&self, m: usize) -> OracleMode {
        self.oracle.unwrap_or(if m <= ALWAYS_ORACLE_UP_TO {
            OracleMode::Always
        } else {
            OracleMode::Spot
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.m_min == 0 || self.m_min > self.m_max {
            return Err(Error::precondition(
                "search",
                format!("invalid modulus range {}..={}", self.m_min, self.m_max),
            ));
        }
        if self.m_max > self.kind.max_modulus() {
            return Err(Error::EnumerationTooLarge {
                k: self.m_max,
                limit: self.kind.max_modulus(),
            });
        }
        if self.workers == 0 {
            return Err(Error::precondition("search", "workers must be positive"));
        }
        Ok(())
    }
}

/// One equivalence class found by a search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchReport {
    pub m: usize,
    /// Canonical representative in sparse text.
    pub f: String,
    pub weight: usize,
    pub n: usize,
    pub k: usize,
    /// Minimum distance, when it was enumerated.
    pub d: Option<usize>,
    pub self_dual: bool,
    pub extremal: bool,
    pub lcd: bool,
    pub predicate: PredicateUsed,
    pub oracle_confirmed: bool,
    /// Number of accepted coefficient patterns in this class.
    pub class_size: u64,
}

impl SearchReport {
    pub fn poly(&self) -> Result<RingElement> {
        parse_ring(&self.f, Some(self.m))
    }
}

/// Canonical forms of polynomials that are always cross-checked under `spot`.
pub type Pinned = BTreeSet<(usize, u64)>;

pub fn search(cfg: &SearchConfig) -> Result<Vec<SearchReport>> {
    search_pinned(cfg, &Pinned::new())
}

/// Like [`search`], additionally forcing the oracle on the given
/// `(m, canonical pattern)` classes.
pub fn search_pinned(cfg: &SearchConfig, pinned: &Pinned) -> Result<Vec<SearchReport>> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::precondition("search", e.to_string()))?;
    pool.install(|| {
        let mut out = Vec::new();
        for m in cfg.m_min..=cfg.m_max {
            out.extend(search_modulus(cfg, m, pinned)?);
        }
        Ok(out)
    })
}

fn shard_bits(m: usize, workers: usize) -> usize {
    let w = usize::BITS - (workers.max(1) - 1).leading_zeros();
    (w as usize + 3).min(m)
}

fn accepts(kind: SearchKind, bits: u64, m: usize) -> bool {
    match kind {
        SearchKind::SelfdualDc | SearchKind::ExtremalDc => {
            word::mul(bits, word::conjugate(bits, m), m) == 1
        }
        SearchKind::LcdDc => dc_is_lcd(&RingElement::from_u64(m, bits).expect("fits")),
        SearchKind::BorderedSelfdual => {
            bits.count_ones().is_multiple_of(2)
                && m % 2 == 1
                && word::mul(bits, word::conjugate(bits, m), m) == word::mask(m) & !1
        }
        SearchKind::BorderedLcd => bits.count_ones() as usize % 2 == m % 2,
    }
}

fn search_modulus(cfg: &SearchConfig, m: usize, pinned: &Pinned) -> Result<Vec<SearchReport>> {
    let split = shard_bits(m, cfg.workers);
    let low = m - split;
    let survivors: Vec<Vec<u64>> = (0..1u64 << split)
        .into_par_iter()
        .map(|hi| {
            let base = hi << low;
            (0..1u64 << low)
                .map(|lo| base | lo)
                .filter(|&bits| {
                    cfg.weight_filter
                        .as_ref()
                        .is_none_or(|w| w.contains(&(bits.count_ones() as usize)))
                })
                .filter(|&bits| accepts(cfg.kind, bits, m))
                .collect()
        })
        .collect();

    let mut classes: BTreeMap<u64, u64> = BTreeMap::new();
    for bits in survivors.into_iter().flatten() {
        *classes.entry(canonical_u64(bits, m)).or_default() += 1;
    }

    let mode = cfg.oracle_for(m);
    let classes: Vec<(usize, u64, u64)> = classes
        .into_iter()
        .enumerate()
        .map(|(i, (rep, size))| (i, rep, size))
        .collect();
    let reports: Vec<Option<SearchReport>> = classes
        .par_iter()
        .map(|&(idx, rep, size)| {
            let check = match mode {
                OracleMode::Always => true,
                OracleMode::Spot => idx % SPOT_INTERVAL == 0 || pinned.contains(&(m, rep)),
                OracleMode::Off => false,
            };
            let f = RingElement::from_u64(m, rep)?;
            let report = if cfg.kind.is_bordered() {
                classify_bordered(&f, size, check)?
            } else {
                classify_dc(&f, size, check)?
            };
            let keep = match cfg.kind {
                SearchKind::ExtremalDc => report.extremal,
                SearchKind::BorderedLcd => report.lcd,
                _ => true,
            };
            Ok(keep.then_some(report))
        })
        .collect::<Result<_>>()?;
    Ok(reports.into_iter().flatten().collect())
}

/// Classifies one DC generator; with `check`, every theorem-level answer is
/// compared against the matrix-level oracle and any disagreement is an error.
pub fn classify_dc(f: &RingElement, class_size: u64, check: bool) -> Result<SearchReport> {
    let m = f.modulus();
    let desc = DcDescriptor::new(f.clone());
    let code = desc.build();
    let self_dual = desc.is_self_dual();
    let lcd = dc_is_lcd(f);
    let enumerator = Enumerator::default();
    if check {
        if self_dual != code.is_self_dual() {
            return Err(counterexample(m, f, "ring self-duality vs G G^T"));
        }
        if lcd != code.is_lcd() {
            return Err(counterexample(m, f, "gcd LCD criterion vs hull rank"));
        }
    }
    let (predicate, verdict) = if self_dual {
        desc.extremal_by_theorem()?
    } else {
        (PredicateUsed::OracleOnly, Some(false))
    };
    let mut d = None;
    let extremal = if verdict.is_none() || check {
        let dist = enumerator.min_distance(&code)?;
        d = Some(dist);
        let oracle = self_dual && dist == extremal_bound(2 * m)?;
        if let Some(v) = verdict {
            if v != oracle {
                return Err(counterexample(
                    m,
                    f,
                    &format!(
                        "{} says extremal={v}, enumeration gives d={dist}",
                        predicate.as_str()
                    ),
                ));
            }
        }
        oracle
    } else {
        verdict.unwrap_or(false)
    };
    Ok(SearchReport {
        m,
        f: f.to_string(),
        weight: f.weight(),
        n: 2 * m,
        k: m,
        d,
        self_dual,
        extremal,
        lcd,
        predicate,
        oracle_confirmed: check,
        class_size,
    })
}

/// Classifies the `alpha = 0` bordered code on `f`. Extremality has no
/// closed-form rule here, so self-dual candidates are always enumerated.
pub fn classify_bordered(f: &RingElement, class_size: u64, check: bool) -> Result<SearchReport> {
    let m = f.modulus();
    let desc = BorderedDescriptor::new(f.clone(), false);
    let code = desc.build();
    let self_dual = desc.is_self_dual();
    if check && self_dual != code.is_self_dual() {
        return Err(counterexample(m, f, "bordered self-duality vs G G^T"));
    }
    let lcd = code.is_lcd();
    let d = if self_dual || check {
        Some(Enumerator::default().min_distance(&code)?)
    } else {
        None
    };
    let extremal = self_dual && d == Some(extremal_bound(2 * m + 2)?);
    Ok(SearchReport {
        m,
        f: f.to_string(),
        weight: f.weight(),
        n: 2 * m + 2,
        k: m + 1,
        d,
        self_dual,
        extremal,
        lcd,
        predicate: PredicateUsed::OracleOnly,
        oracle_confirmed: check,
        class_size,
    })
}

fn counterexample(m: usize, f: &RingElement, what: &str) -> Error {
    Error::Counterexample(format!("m={m}, f={f}: {what}"))
}

pub const CSV_HEADER: &str = "m,f,weight,n,k,d,self_dual,extremal,lcd,predicate";

pub fn emit(reports: &[SearchReport], format: OutputFormat) -> Vec<u8> {
    match format {
        OutputFormat::Csv => emit_csv(reports).into_bytes(),
        OutputFormat::Json => {
            let mut out = serde_json::to_vec_pretty(reports).expect("reports always serialize");
            out.push(b'\n');
            out
        }
    }
}

fn emit_csv(reports: &[SearchReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.m,
            r.f,
            r.weight,
            r.n,
            r.k,
            r.d.map(|d| d.to_string()).unwrap_or_default(),
            r.self_dual,
            r.extremal,
            r.lcd,
            r.predicate.as_str()
        ));
    }
    out
}

/// Parses a JSON report array, checking each polynomial against its modulus.
pub fn parse_reports_json(bytes: &[u8]) -> Result<Vec<SearchReport>> {
    let reports: Vec<SearchReport> =
        serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    for r in &reports {
        let f = r.poly()?;
        if f.weight() != r.weight {
            return Err(Error::Parse(format!(
                "report for {} claims weight {}",
                r.f, r.weight
            )));
        }
    }
    Ok(reports)
}

impl fmt::Display for SearchKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}
