//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! and enforcing its runtime budget. Run with `cargo test --test acceptance`
//! (add `-- --nocapture` to see the per-criterion summaries).

use std::time::{Duration, Instant};

use terminalg::catalog::{catalog, reconstruction_specs};
use terminalg::cohomology;
use terminalg::exactnum::GaussRat;
use terminalg::harness::{run, HarnessConfig, Status};

fn group(only: &str) -> (terminalg::harness::Report, Duration) {
    let config = HarnessConfig {
        only: Some(only.to_string()),
        ..HarnessConfig::default()
    };
    let t0 = Instant::now();
    let report = run(&config);
    (report, t0.elapsed())
}

fn assert_clean(
    criterion: &str,
    report: &terminalg::harness::Report,
    elapsed: Duration,
    budget: Duration,
) {
    let failures: Vec<String> = report
        .failures()
        .map(|r| format!("{} {} {} : {}", r.check_id, r.subject, r.params, r.detail))
        .collect();
    println!(
        "[{criterion}] {} : {} pass, {} fail, {} skip, {} inconclusive in {:.2?}",
        if failures.is_empty() { "PASS" } else { "FAIL" },
        report.pass,
        report.fail,
        report.skip,
        report.inconclusive,
        elapsed
    );
    assert!(
        failures.is_empty(),
        "{criterion} failures:\n{}",
        failures.join("\n")
    );
    assert!(
        elapsed <= budget,
        "{criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_1_identity_flags() {
    let (report, elapsed) = group("flags");
    // Every entry at every sample: nilpotent, terminal, and the expected
    // Leibniz flag (including the lambda = 0 coincidences).
    assert!(report.pass >= 600, "expected hundreds of flag checks");
    assert_clean(
        "criterion 1: identity flags",
        &report,
        elapsed,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_2_cohomology_table() {
    let (report, elapsed) = group("h2");
    assert_clean(
        "criterion 2: cohomology table",
        &report,
        elapsed,
        Duration::from_secs(10),
    );
    // The headline dimensions, asserted directly.
    let cat = catalog();
    let q = GaussRat::from_int;
    let h2t = |name: &str, params: &[GaussRat]| {
        cohomology::cohomology(&cat.build(name, params).unwrap()).dim_h2t()
    };
    let h2l = |name: &str, params: &[GaussRat]| {
        cohomology::cohomology(&cat.build(name, params).unwrap()).dim_h2l()
    };
    assert_eq!(h2t("T3*_01", &[]), 7);
    assert_eq!(h2t("T3*_02", &[]), 7);
    assert_eq!(h2t("T3*_03", &[]), 7);
    assert_eq!(h2t("T3*_04", &[q(2)]), 7);
    assert_eq!(h2t("T3*_05", &[]), 3);
    assert_eq!(h2t("T3_01", &[q(0)]), 4);
    assert_eq!(h2t("T3_01", &[q(3)]), 3);
    assert_eq!(h2l("T3*_01", &[]), 4);
    assert_eq!(h2l("T3*_02", &[]), 3);
    assert_eq!(h2l("T3*_03", &[]), 5);
    assert_eq!(h2l("T3*_04", &[q(2)]), 3);
    assert_eq!(h2l("T3*_04", &[q(0)]), 4);
    assert_eq!(h2l("T3*_05", &[]), 1);
}

#[test]
fn criterion_3_extension_reconstruction() {
    let (report, elapsed) = group("recon");
    // At least 60 printed (base, representative, target) triples, each
    // checked at every sampled parameter point.
    let distinct_targets: std::collections::BTreeSet<&str> =
        reconstruction_specs().iter().map(|s| s.target).collect();
    assert!(
        distinct_targets.len() >= 60,
        "expected >= 60 reconstruction triples, got {}",
        distinct_targets.len()
    );
    assert!(report.pass >= distinct_targets.len());
    assert_clean(
        "criterion 3: extension reconstruction",
        &report,
        elapsed,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_4_orbit_action_formulas() {
    let (report, elapsed) = group("action");
    assert_clean(
        "criterion 4: orbit-action formulas",
        &report,
        elapsed,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_5_lemma_suite() {
    let (report, elapsed) = group("lemma");
    assert_clean(
        "criterion 5: lemma suite",
        &report,
        elapsed,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_6_geometry() {
    let (report, elapsed) = group("geom");
    // Orbit-closure dimensions 17 / 15 / 15 and the trivial witnesses for
    // every catalog entry.
    let trivial = report
        .records
        .iter()
        .filter(|r| r.check_id == "geom.trivial_witness")
        .count();
    assert!(
        trivial >= 83,
        "expected >= 83 trivial-witness checks, got {trivial}"
    );
    assert_clean(
        "criterion 6: geometry",
        &report,
        elapsed,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_7_isomorphism_exceptions() {
    let (report, elapsed) = group("iso");
    let witnesses = report
        .records
        .iter()
        .filter(|r| r.check_id == "iso.exception" && r.status == Status::Pass)
        .count();
    let separations = report
        .records
        .iter()
        .filter(|r| r.check_id == "iso.separation" && r.status == Status::Pass)
        .count();
    assert!(
        witnesses >= 8,
        "expected >= 8 verified witnesses, got {witnesses}"
    );
    assert!(
        separations >= 20,
        "expected >= 20 separations, got {separations}"
    );
    // 60 s per pair.
    let budget = Duration::from_secs(60 * witnesses.max(1) as u64);
    assert_clean(
        "criterion 7: isomorphism exceptions",
        &report,
        elapsed,
        budget,
    );
}

#[test]
fn criterion_8_jordan_remark() {
    let (report, elapsed) = group("jordan");
    assert_clean(
        "criterion 8: Jordan comparison",
        &report,
        elapsed,
        Duration::from_secs(30),
    );
}
