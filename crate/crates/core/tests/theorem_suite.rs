use sdke::decomposition::SdKePartition;
use sdke::verification::{
    matchable_corpus, run_theorem_suite, run_theorem_suite_with, Counterexample, SuiteConfig,
};
use sdke::{fixtures, partition, Graph};

fn failed_checks(g: &Graph, p: &SdKePartition) -> Vec<(String, Counterexample)> {
    let report = run_theorem_suite_with(g, p, &SuiteConfig::default()).unwrap();
    report
        .failures()
        .map(|c| (c.name.clone(), c.counterexample.clone().expect("failures carry a counterexample")))
        .collect()
}

fn assert_genuine(g: &Graph, p: &SdKePartition, failures: &[(String, Counterexample)]) {
    assert!(!failures.is_empty(), "the wrong partition went unnoticed");
    for (name, c) in failures {
        assert!(c.reverify(g, p), "{name}: counterexample {c:?} does not re-verify");
    }
}

#[test]
fn suite_passes_on_corpus() {
    let corpus = matchable_corpus(60, &[2, 4, 6, 8, 10], 7_000).unwrap();
    for e in &corpus {
        let report = run_theorem_suite(&e.graph, &SuiteConfig::default()).unwrap();
        let failed: Vec<_> = report.failures().collect();
        assert!(failed.is_empty(), "seed {}: {failed:?}", e.seed);
    }
}

#[test]
fn moving_a_pair_to_the_ke_side_is_caught() {
    let g = fixtures::jposy12();
    let m = fixtures::jposy12_matching(&g);
    let sd: Vec<usize> = g.vertices(&[0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
    let p = SdKePartition::from_claimed_sd(&g, &m, &sd).unwrap();
    let failures = failed_checks(&g, &p);
    assert_genuine(&g, &p, &failures);
    let names: Vec<&str> = failures.iter().map(|(n, _)| n.as_str()).collect();
    assert!(names.contains(&"cut_edges_unmatched"), "{names:?}");
    assert!(names.contains(&"sachs_cut_disjointness"), "{names:?}");
    assert!(names.contains(&"partition_order_independence"), "{names:?}");
}

#[test]
fn claiming_everything_is_sd_is_caught() {
    let g = fixtures::jposy12();
    let m = fixtures::jposy12_matching(&g);
    let all: Vec<usize> = (0..g.order()).collect();
    let p = SdKePartition::from_claimed_sd(&g, &m, &all).unwrap();
    let failures = failed_checks(&g, &p);
    assert_genuine(&g, &p, &failures);
    assert!(failures
        .iter()
        .any(|(_, c)| matches!(c, Counterexample::MissingWitness { .. })));
}

#[test]
fn claiming_nothing_is_sd_is_caught() {
    let g = fixtures::octet();
    let m = fixtures::octet_matching_a(&g);
    let p = SdKePartition::from_claimed_sd(&g, &m, &[]).unwrap();
    let failures = failed_checks(&g, &p);
    assert_genuine(&g, &p, &failures);
    assert!(failures.iter().any(|(n, _)| n == "ke_part_is_ke"));
}

#[test]
fn splitting_a_matched_pair_is_caught() {
    let g = fixtures::octet();
    let m = fixtures::octet_matching_a(&g);
    let one = g.vertices(&[1]).unwrap();
    let p = SdKePartition::from_claimed_sd(&g, &m, &one).unwrap();
    let failures = failed_checks(&g, &p);
    assert_genuine(&g, &p, &failures);
    assert!(failures
        .iter()
        .any(|(_, c)| matches!(c, Counterexample::UnpairedSd { .. })));
}

#[test]
fn report_serializes() {
    let g = fixtures::jposy12();
    let report = run_theorem_suite(&g, &SuiteConfig::default()).unwrap();
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["checks"].as_array().unwrap().len(), report.checks.len());
    assert!(json["checks"][0].get("counterexample").is_none());
}

#[test]
fn partner_rule_matters() {
    // Adding a pendant at the exposed vertex of `unmatchable9` makes it
    // matchable. Vertex 7 then has an mm-closed walk while its partner 6 has
    // none, so the pair {6, 7} must go to the KE side together.
    let g = fixtures::unmatchable9();
    let five = g.vertex(5).unwrap();
    let h = g.extend(1, &[(five, g.order())]).unwrap();
    let p = partition(&h).unwrap();
    let six = h.vertex(6).unwrap();
    let seven = h.vertex(7).unwrap();
    assert!(sdke::has_mm_closed_walk(&h, &p.matching, seven).unwrap());
    assert!(!sdke::has_mm_closed_walk(&h, &p.matching, six).unwrap());
    assert!(p.is_ke(six) && p.is_ke(seven));
    let report = run_theorem_suite_with(&h, &p, &SuiteConfig::default()).unwrap();
    assert!(report.all_pass(), "{:?}", report.failures().collect::<Vec<_>>());
}
