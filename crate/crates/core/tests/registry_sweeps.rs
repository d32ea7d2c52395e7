//! The full theorem registry at the default prime range: the same sweep
//! the `verify --all` command runs, which must come back all green.

use qsym_core::congruence::{check_all, theorem_ids, CheckConfig, TableSet};
use qsym_core::modp::primes_in_range;

#[test]
fn full_registry_passes_at_default_primes() {
    let tables = TableSet::builtin();
    let primes = primes_in_range(11, 101);
    let reports = check_all(&primes, CheckConfig::default(), &tables).unwrap();
    assert_eq!(reports.len(), theorem_ids().len());
    for report in &reports {
        assert!(report.passed(), "{}", report.render_text());
        assert!(report.total > 0, "{} ran no instances", report.id);
    }
}

#[test]
fn registry_flags_failures_with_reproduction_data() {
    // A deliberately wrong table must produce failing instances carrying
    // both residues.
    let bad = TableSet::parse(
        "5; GENERATORS; S(4,1); 6\n5; S(3,2); 7*S(4,1); 6\n",
    )
    .unwrap();
    let report =
        qsym_core::congruence::verify_weight_table(5, &[11, 13], &bad).unwrap();
    assert!(!report.passed());
    let failing = report
        .issues
        .iter()
        .find(|inst| inst.is_fail())
        .expect("a failing instance");
    assert!(failing.prime.is_some());
    match &failing.status {
        qsym_core::congruence::Status::Fail { lhs, rhs } => assert_ne!(lhs, rhs),
        other => panic!("expected Fail, got {other:?}"),
    }
}
