//! The per-theorem checks. Each takes the instance parameters from its
//! config table and returns one record per instance.

pub(crate) mod context;
pub(crate) mod endo;
pub(crate) mod group;
pub(crate) mod periodic;
pub(crate) mod weak;

use std::ops::RangeInclusive;

use serde_json::{json, Value};

use super::{parse_range, InstanceRecord, TheoremConfig};
use crate::cli::expr::parse_expr;
use crate::ring::{validate_ring_axioms_with, Elem, FiniteRing, Subset};
use crate::RingError;

/// Orders up to this are axiom-checked exhaustively, larger ones by seeded
/// sampling.
const AXIOM_EXHAUSTIVE: usize = 48;

pub struct Ctx<'a> {
    pub cfg: &'a TheoremConfig,
    pub cap: usize,
    pub seed: u64,
}

pub(crate) type Built = std::result::Result<FiniteRing, InstanceRecord>;

/// Unwraps a built ring or pushes the skip/fail record and continues.
macro_rules! built {
    ($built:expr, $out:expr) => {
        match $built {
            Ok(r) => r,
            Err(rec) => {
                $out.push(rec);
                continue;
            }
        }
    };
}
pub(crate) use built;

impl Ctx<'_> {
    /// Builds an instance under the cap and validates its axioms. Cap
    /// overruns become skipped records, anything else a failure.
    pub fn build(&self, text: &str) -> Built {
        let ring = match parse_expr(text).and_then(|e| e.build(self.cap)) {
            Ok(r) => r,
            Err(e @ (RingError::CapExceeded { .. } | RingError::SizeOverflow(_))) => {
                return Err(InstanceRecord::skipped(text, e.to_string()))
            }
            Err(e) => return Err(InstanceRecord::fail(text, e.to_string(), Value::Null)),
        };
        let ax = validate_ring_axioms_with(&ring, AXIOM_EXHAUSTIVE, self.seed);
        match ax.violation {
            None => Ok(ring),
            Some(v) => Err(InstanceRecord::fail(
                text,
                format!("axiom check: {v}"),
                Value::Null,
            )),
        }
    }

    pub fn m_range(
        &self,
        default: RangeInclusive<u64>,
    ) -> Result<RangeInclusive<u64>, InstanceRecord> {
        match &self.cfg.m {
            None => Ok(default),
            Some(text) => parse_range(text)
                .map_err(|e| InstanceRecord::fail("config", e.to_string(), Value::Null)),
        }
    }

    /// `GR(base, group)` for every configured base and group.
    pub fn group_rings(&self) -> Vec<(String, String, String)> {
        let mut out = Vec::new();
        for b in &self.cfg.bases {
            for g in &self.cfg.groups {
                out.push((b.clone(), g.clone(), format!("GR({b}, {g})")));
            }
        }
        out
    }
}

/// Element labels for a witness payload.
pub(crate) fn labels(ring: &FiniteRing, xs: &[Elem]) -> Value {
    json!(ring.labels(xs))
}

/// Brute-force and structural radicals agree, when a structural one exists.
pub(crate) fn radical_paths_agree(ring: &FiniteRing) -> (bool, Value) {
    let brute = ring.jacobson_radical_brute();
    match ring.jacobson_radical_structural() {
        None => (
            true,
            json!({"radical_size": brute.set.len(), "structural": false}),
        ),
        Some(s) => (
            s.set == brute.set,
            json!({
                "radical_size": brute.set.len(),
                "structural_size": s.set.len(),
                "structural": true,
            }),
        ),
    }
}

/// Largest nilpotency index over a set of nilpotent elements.
pub(crate) fn max_nil_index(ring: &FiniteRing, set: &Subset) -> Option<u32> {
    set.members()
        .iter()
        .map(|&x| ring.nil_index(x))
        .try_fold(1, |acc, i| i.map(|i| acc.max(i)))
}
