use serde::Serialize;

use crate::classify::{classify_ring, ProfileOptions, Witness, TRIVIAL_FLAGS};
use crate::cli::expr::parse_expr;
use crate::{Result, RingError};

/// Predicates that can fail on a finite ring.
pub const SEARCHABLE: [&str; 16] = [
    "potent",
    "boolean",
    "m_potent_uniform",
    "nil_clean",
    "strongly_nil_clean",
    "m_nil_clean",
    "strongly_m_nil_clean",
    "weakly_nil_clean",
    "UU",
    "abelian",
    "local",
    "NI",
    "two_primal",
    "quasi_duo",
    "reduced",
    "commutative",
];

#[derive(Clone, Debug, Serialize)]
pub struct SearchVerdict {
    pub n: u64,
    pub ring: String,
    /// `None` when the instance could not be built under the cap.
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub predicate: String,
    pub family: String,
    pub m: u64,
    pub from: u64,
    pub bound: u64,
    pub instances: Vec<SearchVerdict>,
    /// Parameter of the first instance where the predicate fails.
    pub first_counterexample: Option<u64>,
    /// No instance failed; skipped instances are listed in `instances`.
    pub exhausted: bool,
}

/// Replaces every standalone `n` in the family template.
fn instantiate(template: &str, n: u64) -> String {
    let chars: Vec<char> = template.chars().collect();
    let ident = |c: Option<&char>| c.is_some_and(|c| c.is_alphanumeric() || *c == '_');
    let mut out = String::new();
    for (i, &c) in chars.iter().enumerate() {
        let prev = i.checked_sub(1).and_then(|j| chars.get(j));
        if c == 'n' && !ident(prev) && !ident(chars.get(i + 1)) {
            out.push_str(&n.to_string());
        } else {
            out.push(c);
        }
    }
    out
}

/// Evaluates `predicate` on the family for `n = from..=bound` in order.
pub fn search_property(
    predicate: &str,
    family: &str,
    from: u64,
    bound: u64,
    m: u64,
    cap: usize,
) -> Result<SearchReport> {
    if TRIVIAL_FLAGS.contains(&predicate) {
        return Err(RingError::Precondition(format!(
            "`{predicate}` holds on every finite ring; nothing to search"
        )));
    }
    if !SEARCHABLE.contains(&predicate) {
        return Err(RingError::InvalidParameter(format!(
            "unknown predicate `{predicate}`; expected one of {}",
            SEARCHABLE.join(", ")
        )));
    }
    if instantiate(family, 0) == family {
        return Err(RingError::InvalidParameter(format!(
            "family `{family}` has no parameter `n`"
        )));
    }
    let mut instances = Vec::new();
    for n in from..=bound {
        let text = instantiate(family, n);
        let built = parse_expr(&text).and_then(|e| e.build(cap));
        let v = match built {
            Ok(r) => {
                let p = classify_ring(&r, ProfileOptions { m, cap });
                let f = p.flag(predicate);
                SearchVerdict {
                    n,
                    ring: text,
                    holds: f.status.holds(),
                    witness: f.witness.clone(),
                    note: f.reason.clone(),
                }
            }
            Err(e @ (RingError::CapExceeded { .. } | RingError::SizeOverflow(_))) => {
                SearchVerdict {
                    n,
                    ring: text,
                    holds: None,
                    witness: None,
                    note: Some(e.to_string()),
                }
            }
            Err(e) => return Err(e),
        };
        instances.push(v);
    }
    let first = instances
        .iter()
        .find(|v| v.holds == Some(false))
        .map(|v| v.n);
    Ok(SearchReport {
        predicate: predicate.to_string(),
        family: family.to_string(),
        m,
        from,
        bound,
        instances,
        first_counterexample: first,
        exhausted: first.is_none(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn templates() {
        assert_eq!(instantiate("M(2, Z(n))", 5), "M(2, Z(5))");
        assert_eq!(instantiate("GR(Z(3), C(n))", 4), "GR(Z(3), C(4))");
        assert_eq!(instantiate("END(C(n)+C(2))", 4), "END(C(4)+C(2))");
    }

    #[test]
    fn trivial_predicates_are_rejected() {
        assert!(matches!(
            search_property("periodic", "Z(n)", 2, 4, 3, 1000),
            Err(RingError::Precondition(_))
        ));
        assert!(search_property("potent", "Z(4)", 2, 4, 3, 1000).is_err());
    }
}
