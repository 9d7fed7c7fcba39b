//! Registry of executable theorem checks, the suite runner, and bounded
//! counterexample search over construction families.
//!
//! Statements that are trivially true on finite carriers are replaced by
//! their finite content (radical structure, explicit exponents, criteria
//! against brute-force oracles); each registry entry says which.

mod checks;
mod config;
mod registry;
mod search;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::{Result, RingError};

pub use config::{parse_range, SuiteConfig, TheoremConfig, DEFAULT_CONFIG};
pub use registry::{entry, registry, Entry};
pub use search::{search_property, SearchReport, SearchVerdict, SEARCHABLE};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    /// Criterion and oracle disagree in a way that is reported, not failed.
    Finding,
    /// Above the cap or outside the statement's hypotheses.
    Skipped,
}

/// One instance of a theorem check. `instance` is a ring expression, or a
/// ring expression with parameters, that reproduces it.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceRecord {
    pub instance: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
}

impl InstanceRecord {
    pub fn new(instance: impl Into<String>, outcome: Outcome, data: Value) -> Self {
        InstanceRecord {
            instance: instance.into(),
            outcome,
            note: None,
            data,
        }
    }

    pub fn pass(instance: impl Into<String>, data: Value) -> Self {
        Self::new(instance, Outcome::Pass, data)
    }

    pub fn fail(instance: impl Into<String>, note: impl Into<String>, data: Value) -> Self {
        Self::new(instance, Outcome::Fail, data).with_note(note)
    }

    pub fn finding(instance: impl Into<String>, note: impl Into<String>, data: Value) -> Self {
        Self::new(instance, Outcome::Finding, data).with_note(note)
    }

    pub fn skipped(instance: impl Into<String>, note: impl Into<String>) -> Self {
        Self::new(instance, Outcome::Skipped, Value::Null).with_note(note)
    }

    /// Pass when `ok`, otherwise fail with `note`.
    pub fn verdict(instance: impl Into<String>, ok: bool, note: &str, data: Value) -> Self {
        if ok {
            Self::pass(instance, data)
        } else {
            Self::fail(instance, note, data)
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremStatus {
    Pass,
    Fail,
    /// Every instance was skipped.
    Skipped,
    NotFinitelyInstantiable,
}

#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub statement: String,
    /// What is actually checked on finite instances.
    pub checks: String,
    pub status: TheoremStatus,
    pub cap: usize,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    pub findings: usize,
    pub skipped: usize,
    pub records: Vec<InstanceRecord>,
}

impl TheoremReport {
    fn from_records(e: &Entry, cap: usize, records: Option<Vec<InstanceRecord>>) -> Self {
        let recs = records.clone().unwrap_or_default();
        let count = |o: Outcome| recs.iter().filter(|r| r.outcome == o).count();
        let (passed, failed, findings, skipped) = (
            count(Outcome::Pass),
            count(Outcome::Fail),
            count(Outcome::Finding),
            count(Outcome::Skipped),
        );
        let status = match records {
            None => TheoremStatus::NotFinitelyInstantiable,
            Some(_) if failed > 0 => TheoremStatus::Fail,
            Some(_) if passed + findings == 0 => TheoremStatus::Skipped,
            Some(_) => TheoremStatus::Pass,
        };
        TheoremReport {
            id: e.id.to_string(),
            statement: e.statement.to_string(),
            checks: e.checks.to_string(),
            status,
            cap,
            instances: recs.len(),
            passed,
            failed,
            findings,
            skipped,
            records: recs,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceRecord> {
        self.records.iter().filter(|r| r.outcome == Outcome::Fail)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteTotals {
    pub theorems: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub not_finitely_instantiable: usize,
    pub instances: usize,
    pub findings: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub passed: bool,
    pub totals: SuiteTotals,
    pub theorems: Vec<TheoremReport>,
}

/// Cap used for one theorem: its own cap, else the suite cap, else
/// [`crate::ring::DEFAULT_CAP`]; an override always wins.
pub fn effective_cap(suite: &SuiteConfig, theorem: &TheoremConfig, over: Option<usize>) -> usize {
    over.or(theorem.cap)
        .or(suite.cap)
        .unwrap_or(crate::ring::DEFAULT_CAP)
}

fn run_entry(e: &Entry, suite: &SuiteConfig, over: Option<usize>) -> TheoremReport {
    let tc = suite.theorem(e.id);
    let cap = effective_cap(suite, &tc, over);
    let ctx = checks::Ctx {
        cfg: &tc,
        cap,
        seed: suite.seed,
    };
    let records = e.run.map(|f| f(&ctx));
    TheoremReport::from_records(e, cap, records)
}

/// Runs one registered check on its configured instances.
pub fn verify_theorem(id: &str, suite: &SuiteConfig, cap: Option<usize>) -> Result<TheoremReport> {
    let e = entry(id).ok_or_else(|| RingError::UnknownTheorem(id.to_string()))?;
    Ok(run_entry(e, suite, cap))
}

/// Runs every registered check (or those in `only`, else the config's
/// `only`) in parallel and merges the reports in registry order. The suite
/// passes when no instance fails; findings are reported but do not fail.
pub fn run_suite(
    suite: &SuiteConfig,
    only: Option<&[String]>,
    cap: Option<usize>,
) -> Result<SuiteReport> {
    for id in suite.theorems.keys() {
        if entry(id).is_none() {
            return Err(RingError::Config(format!("unknown theorem id `{id}`")));
        }
    }
    let only = only.or(suite.only.as_deref());
    if let Some(ids) = only {
        if let Some(bad) = ids.iter().find(|id| entry(id).is_none()) {
            return Err(RingError::UnknownTheorem(bad.clone()));
        }
    }
    let selected: Vec<&Entry> = registry()
        .iter()
        .filter(|e| only.is_none_or(|ids| ids.iter().any(|i| i == e.id)))
        .collect();
    let theorems: Vec<TheoremReport> = selected
        .par_iter()
        .map(|e| run_entry(e, suite, cap))
        .collect();
    let mut t = SuiteTotals {
        theorems: theorems.len(),
        ..Default::default()
    };
    for r in &theorems {
        match r.status {
            TheoremStatus::Pass => t.passed += 1,
            TheoremStatus::Fail => t.failed += 1,
            TheoremStatus::Skipped => t.skipped += 1,
            TheoremStatus::NotFinitelyInstantiable => t.not_finitely_instantiable += 1,
        }
        t.instances += r.instances;
        t.findings += r.findings;
    }
    Ok(SuiteReport {
        seed: suite.seed,
        passed: t.failed == 0,
        totals: t,
        theorems,
    })
}
