use std::collections::BTreeSet;

use ringlab::harness::{
    effective_cap, registry, run_suite, search_property, verify_theorem, Outcome, SuiteConfig,
    TheoremConfig, TheoremStatus,
};
use ringlab::ring::DEFAULT_CAP;
use ringlab::RingError;

fn ids(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

#[test]
fn registry_ids_are_unique_and_documented() {
    let mut seen = BTreeSet::new();
    for e in registry() {
        assert!(seen.insert(e.id), "duplicate id {}", e.id);
        assert!(!e.statement.trim().is_empty(), "{} has no statement", e.id);
        assert!(
            !e.checks.trim().is_empty(),
            "{} has no check description",
            e.id
        );
    }
    assert!(seen.len() >= 30);
}

#[test]
fn every_runnable_entry_has_instances_in_the_default_config() {
    let suite = SuiteConfig::default_suite();
    // cap 1 keeps this cheap: instances are enumerated and then skipped
    for e in registry().iter().filter(|e| e.run.is_some()) {
        let r = verify_theorem(e.id, &suite, Some(1)).unwrap();
        assert!(r.instances > 0, "{} ran no instances", e.id);
        assert_ne!(r.status, TheoremStatus::NotFinitelyInstantiable, "{}", e.id);
    }
    for e in registry().iter().filter(|e| e.run.is_none()) {
        let r = verify_theorem(e.id, &suite, Some(1)).unwrap();
        assert_eq!(r.status, TheoremStatus::NotFinitelyInstantiable, "{}", e.id);
    }
}

#[test]
fn subset_runs_in_registry_order() {
    let suite = SuiteConfig::default_suite();
    let only = ids(&["rem-2.2", "thm-3.4", "prop-2.2"]);
    let rep = run_suite(&suite, Some(&only), None).unwrap();
    let got: Vec<&str> = rep.theorems.iter().map(|t| t.id.as_str()).collect();
    let order: Vec<&str> = registry()
        .iter()
        .map(|e| e.id)
        .filter(|id| only.iter().any(|o| o == id))
        .collect();
    assert_eq!(got, order);
    assert!(rep.passed);
    assert_eq!(rep.totals.theorems, 3);
    assert_eq!(rep.totals.failed, 0);
}

#[test]
fn config_only_applies_when_no_explicit_subset() {
    let mut suite = SuiteConfig::default_suite();
    suite.only = Some(ids(&["rem-2.2"]));
    let rep = run_suite(&suite, None, None).unwrap();
    assert_eq!(rep.theorems.len(), 1);
    let rep = run_suite(&suite, Some(&ids(&["prop-2.2"])), None).unwrap();
    assert_eq!(rep.theorems[0].id, "prop-2.2");
}

#[test]
fn unknown_ids_are_rejected() {
    let suite = SuiteConfig::default_suite();
    let err = run_suite(&suite, Some(&ids(&["thm-9.99"])), None).unwrap_err();
    assert!(matches!(err, RingError::UnknownTheorem(ref id) if id == "thm-9.99"));
    assert!(matches!(
        verify_theorem("nope", &suite, None),
        Err(RingError::UnknownTheorem(_))
    ));

    let cfg = SuiteConfig::parse("[theorems.\"thm-0.0\"]\nrings = [\"Z(2)\"]\n").unwrap();
    assert!(matches!(
        run_suite(&cfg, None, None),
        Err(RingError::Config(_))
    ));
}

#[test]
fn config_rejects_unknown_fields() {
    assert!(matches!(
        SuiteConfig::parse("sed = 1\n"),
        Err(RingError::Config(_))
    ));
    let err = SuiteConfig::parse("[theorems.\"prop-2.2\"]\nring = [\"Z(4)\"]\n").unwrap_err();
    assert!(err.to_string().contains("ring"), "{err}");
}

#[test]
fn cap_precedence() {
    let mut suite = SuiteConfig::parse("").unwrap();
    let mut t = TheoremConfig::default();
    assert_eq!(effective_cap(&suite, &t, None), DEFAULT_CAP);
    suite.cap = Some(500);
    assert_eq!(effective_cap(&suite, &t, None), 500);
    t.cap = Some(70);
    assert_eq!(effective_cap(&suite, &t, None), 70);
    assert_eq!(effective_cap(&suite, &t, Some(9)), 9);
}

#[test]
fn tiny_cap_skips_instead_of_failing() {
    let suite = SuiteConfig::default_suite();
    let r = verify_theorem("prop-2.2", &suite, Some(10)).unwrap();
    assert_eq!(r.cap, 10);
    assert_eq!(r.failed, 0);
    // Z(4), Z(6) and GF(2,2) fit under 10, the rest do not
    assert_eq!(r.passed, 3);
    assert_eq!(r.skipped, r.instances - 3);
    for rec in r.records.iter().filter(|x| x.outcome == Outcome::Skipped) {
        assert!(
            rec.note.as_deref().unwrap_or("").contains("cap"),
            "{:?}",
            rec.note
        );
    }
}

#[test]
fn verify_on_custom_rings() {
    let mut suite = SuiteConfig::default_suite();
    let rings = ids(&["Z(4)", "Z(6)", "Z(12)", "GF(2,2)"]);
    suite.theorems.get_mut("prop-2.2").unwrap().rings = rings.clone();
    let r = verify_theorem("prop-2.2", &suite, None).unwrap();
    assert_eq!(r.status, TheoremStatus::Pass);
    assert_eq!(r.instances, 4);
    let got: Vec<&str> = r.records.iter().map(|x| x.instance.as_str()).collect();
    assert_eq!(got, rings);
}

#[test]
fn findings_do_not_fail_the_suite() {
    let suite = SuiteConfig::default_suite();
    let rep = run_suite(&suite, Some(&ids(&["cor-3.13-even"])), None).unwrap();
    let t = &rep.theorems[0];
    assert!(t.findings > 0);
    assert_eq!(t.failed, 0);
    assert_eq!(t.status, TheoremStatus::Pass);
    assert!(rep.passed);
    assert_eq!(rep.totals.findings, t.findings);
    for rec in t.records.iter().filter(|x| x.outcome == Outcome::Finding) {
        assert!(rec.note.is_some());
    }
}

#[test]
fn search_errors() {
    assert!(matches!(
        search_property("periodic", "Z(n)", 2, 5, 3, DEFAULT_CAP),
        Err(RingError::Precondition(_))
    ));
    assert!(matches!(
        search_property("potent", "Z(4)", 2, 5, 3, DEFAULT_CAP),
        Err(RingError::InvalidParameter(_))
    ));
    assert!(matches!(
        search_property("no_such_flag", "Z(n)", 2, 5, 3, DEFAULT_CAP),
        Err(RingError::InvalidParameter(_))
    ));
}

#[test]
fn search_reports_cap_overruns_without_stopping() {
    let rep = search_property("nil_clean", "M(2, Z(n))", 2, 5, 3, 100).unwrap();
    let holds: Vec<Option<bool>> = rep.instances.iter().map(|v| v.holds).collect();
    // 2^4 and 3^4 fit under 100, 4^4 and 5^4 do not
    assert_eq!(holds, vec![Some(true), Some(false), None, None]);
    assert_eq!(rep.first_counterexample, Some(3));
    assert!(rep.instances[2].note.as_deref().unwrap().contains("cap"));
}
