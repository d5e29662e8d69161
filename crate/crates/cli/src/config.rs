//! Search settings from an optional TOML file, the environment and flags.
//!
//! Precedence, highest first: command-line flag, config file,
//! `DCCODES_WORKERS` (workers only), built-in default.

use std::collections::BTreeSet;

use dccodes::search::{OracleMode, OutputFormat};
use dccodes::{Error, SearchConfig, SearchKind};
use serde::Deserialize;

pub const WORKERS_ENV: &str = "DCCODES_WORKERS";

/// Contents of a `--config` file. Every key is optional.
#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub kind: Option<SearchKind>,
    pub m: Option<usize>,
    pub m_max: Option<usize>,
    pub weights: Option<Vec<usize>>,
    pub workers: Option<usize>,
    pub format: Option<OutputFormat>,
    pub oracle: Option<OracleMode>,
}

/// The same settings as given on the command line.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SearchFlags {
    pub kind: Option<SearchKind>,
    pub m: Option<usize>,
    pub m_max: Option<usize>,
    pub weights: Option<Vec<usize>>,
    pub workers: Option<usize>,
    pub format: Option<OutputFormat>,
    pub oracle: Option<OracleMode>,
}

pub fn parse_config(text: &str) -> Result<FileConfig, Error> {
    toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Reads `DCCODES_WORKERS`-style text; empty means unset.
pub fn parse_workers_env(value: Option<&str>) -> Result<Option<usize>, Error> {
    match value.map(str::trim) {
        None | Some("") => Ok(None),
        Some(v) => v
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("{WORKERS_ENV}={v:?} is not a worker count"))),
    }
}

pub fn resolve(
    flags: &SearchFlags,
    file: &FileConfig,
    env_workers: Option<usize>,
) -> Result<(SearchConfig, OutputFormat), Error> {
    let kind = flags
        .kind
        .or(file.kind)
        .ok_or_else(|| Error::Parse("no search kind given (--kind or `kind` in config)".into()))?;
    let m = flags
        .m
        .or(file.m)
        .ok_or_else(|| Error::Parse("no modulus given (--m or `m` in config)".into()))?;
    let m_max = flags.m_max.or(file.m_max).unwrap_or(m);
    let mut cfg = SearchConfig::new(kind, m, m_max);
    cfg.weight_filter = flags
        .weights
        .as_ref()
        .or(file.weights.as_ref())
        .map(|w| w.iter().copied().collect::<BTreeSet<_>>());
    cfg.workers = flags.workers.or(file.workers).or(env_workers).unwrap_or(1);
    let format = flags.format.or(file.format).unwrap_or_default();
    cfg.output_format = format;
    cfg.oracle = flags.oracle.or(file.oracle);
    cfg.validate()?;
    Ok((cfg, format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_override_file_and_env() {
        let file = parse_config("kind = \"extremal_dc\"\nm = 4\nm_max = 8\nworkers = 3\n").unwrap();
        let flags = SearchFlags {
            m_max: Some(6),
            ..Default::default()
        };
        let (cfg, format) = resolve(&flags, &file, Some(9)).unwrap();
        assert_eq!(
            (cfg.kind, cfg.m_min, cfg.m_max, cfg.workers),
            (SearchKind::ExtremalDc, 4, 6, 3)
        );
        assert_eq!(format, OutputFormat::Csv);

        let (cfg, _) = resolve(
            &flags,
            &FileConfig {
                workers: None,
                ..file
            },
            Some(9),
        )
        .unwrap();
        assert_eq!(cfg.workers, 9);
    }

    #[test]
    fn missing_kind_is_an_error() {
        let flags = SearchFlags {
            m: Some(3),
            ..Default::default()
        };
        assert!(resolve(&flags, &FileConfig::default(), None).is_err());
    }

    #[test]
    fn config_rejects_unknown_keys() {
        assert!(parse_config("kind = \"lcd_dc\"\nthreads = 2\n").is_err());
        assert!(parse_config("kind = \"nonsense\"").is_err());
        assert_eq!(parse_config("").unwrap(), FileConfig::default());
    }

    #[test]
    fn workers_env() {
        assert_eq!(parse_workers_env(None).unwrap(), None);
        assert_eq!(parse_workers_env(Some(" ")).unwrap(), None);
        assert_eq!(parse_workers_env(Some("4")).unwrap(), Some(4));
        assert!(parse_workers_env(Some("four")).is_err());
    }
}
