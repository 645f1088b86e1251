use std::time::Instant;

use perimeter::verify::{check, check_all, CheckParams, Status};

#[test]
fn full_grid_fails_only_on_residue_description() {
    let start = Instant::now();
    let reports = check_all(14, 4, 14).unwrap();
    let elapsed = start.elapsed();
    let failing: Vec<(String, usize, usize)> = reports
        .iter()
        .filter(|r| r.status == Status::Fail)
        .map(|r| (r.theorem.clone(), r.params["n"], r.params["d"]))
        .collect();
    let expected: Vec<(String, usize, usize)> = (7..=14)
        .map(|n| ("xi-complement".to_string(), n, 3))
        .chain((8..=14).map(|n| ("xi-complement".to_string(), n, 4)))
        .collect();
    let mut failing_sorted = failing.clone();
    failing_sorted.sort_by_key(|(_, n, d)| (*d, *n));
    assert_eq!(failing_sorted, expected);
    for r in &reports {
        assert_eq!(r.passed(), r.witness.is_none());
    }
    assert!(elapsed.as_secs() < 120, "grid took {elapsed:?}");
}

#[test]
fn injection_holds_where_description_fails() {
    for (n, d) in [(7, 3), (14, 3), (8, 4), (14, 4)] {
        let report = check("xi", &CheckParams::new(n, d, 0)).unwrap();
        assert!(report.passed(), "xi at n={n} d={d}: {:?}", report.witness);
        let description = check("xi-complement", &CheckParams::new(n, d, 0)).unwrap();
        assert!(!description.passed());
    }
    let first = check("xi-complement", &CheckParams::new(7, 3, 0)).unwrap();
    assert_eq!(first.witness.as_deref(), Some("6,4*"));
}

#[test]
fn identical_runs_serialize_identically() {
    let a = serde_json::to_string(&check_all(8, 3, 8).unwrap()).unwrap();
    let b = serde_json::to_string(&check_all(8, 3, 8).unwrap()).unwrap();
    assert_eq!(a, b);
}
