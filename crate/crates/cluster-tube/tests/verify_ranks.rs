//! The full verification harness must come back green at every desk-scale
//! rank. Small ranks are covered by unit tests; these run the heavier ones.

use cluster_tube::verify::check_all;

#[test]
fn test_check_all_rank5() {
    let report = check_all(5);
    for check in &report.checks {
        assert!(check.pass, "rank 5, {}: {}", check.name, check.detail);
    }
}

#[test]
fn test_check_all_rank6() {
    let report = check_all(6);
    for check in &report.checks {
        assert!(check.pass, "rank 6, {}: {}", check.name, check.detail);
    }
}
