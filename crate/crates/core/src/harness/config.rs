use std::collections::BTreeMap;

use serde::Deserialize;

use crate::{Result, RingError};

/// The instance sets shipped with the crate.
pub const DEFAULT_CONFIG: &str = include_str!("../../config/default-suite.toml");

/// Suite configuration: global seed and cap, then one table per theorem id.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    #[serde(default)]
    pub seed: u64,
    /// Default order cap for every theorem without its own.
    pub cap: Option<usize>,
    /// Run only these ids; all registered ids when absent.
    pub only: Option<Vec<String>>,
    #[serde(default)]
    pub theorems: BTreeMap<String, TheoremConfig>,
}

/// Instance parameters. Which fields a theorem reads is listed in the
/// shipped config next to its table.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TheoremConfig {
    pub cap: Option<usize>,
    /// Ring expressions.
    #[serde(default)]
    pub rings: Vec<String>,
    /// Base ring expressions, combined with `groups`, `n` or `s`.
    #[serde(default)]
    pub bases: Vec<String>,
    /// Group expressions (`C(2) x C(2)`, `S3`) or abelian specs
    /// (`C(4)+C(2)`), depending on the theorem.
    #[serde(default)]
    pub groups: Vec<String>,
    /// `[p, max_order]`: every abelian p-group up to that order.
    #[serde(default)]
    pub p_groups: Vec<(u64, u64)>,
    #[serde(default)]
    pub n: Vec<usize>,
    #[serde(default)]
    pub s: Vec<i64>,
    /// Inclusive range `"a..b"`.
    pub m: Option<String>,
}

impl SuiteConfig {
    pub fn parse(text: &str) -> Result<SuiteConfig> {
        toml::from_str(text).map_err(|e| RingError::Config(e.to_string()))
    }

    pub fn load(path: &str) -> Result<SuiteConfig> {
        let text = std::fs::read_to_string(path).map_err(|source| RingError::Io {
            path: path.to_string(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn default_suite() -> SuiteConfig {
        Self::parse(DEFAULT_CONFIG).expect("shipped config parses")
    }

    pub fn theorem(&self, id: &str) -> TheoremConfig {
        self.theorems.get(id).cloned().unwrap_or_default()
    }
}

/// Parses `"a..b"` (inclusive) or a single integer.
pub fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<u64>> {
    let bad = || RingError::Config(format!("bad range `{text}`, expected `a..b`"));
    let (a, b) = match text.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim().trim_start_matches('=')),
        None => (text.trim(), text.trim()),
    };
    let a: u64 = a.parse().map_err(|_| bad())?;
    let b: u64 = b.parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}
