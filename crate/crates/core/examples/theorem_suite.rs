//! Every theorem check on a batch of random matchable graphs, then on a
//! deliberately wrong partition.
//!
//! Run with `cargo run --release --example theorem_suite [count]`.

use sdke::decomposition::SdKePartition;
use sdke::verification::{matchable_corpus, run_theorem_suite, run_theorem_suite_with, SuiteConfig};
use sdke::fixtures;

fn main() {
    let count = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(40);
    let config = SuiteConfig::default();
    let mut failures = 0;
    for e in matchable_corpus(count, &[4, 6, 8, 10, 12], 1).unwrap() {
        let report = run_theorem_suite(&e.graph, &config).unwrap();
        if !report.all_pass() {
            failures += 1;
            println!("seed {}: {:?}", e.seed, report.failures().collect::<Vec<_>>());
        }
    }
    println!("{count} graphs, {failures} with a failing check");

    let g = fixtures::jposy12();
    let m = fixtures::jposy12_matching(&g);
    let claimed = g.vertices(&[0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
    let wrong = SdKePartition::from_claimed_sd(&g, &m, &claimed).unwrap();
    let report = run_theorem_suite_with(&g, &wrong, &config).unwrap();
    println!("\nwrong partition of the 12-vertex fixture:");
    for c in &report.checks {
        let status = if c.pass { "pass" } else { "FAIL" };
        let genuine = c.counterexample.as_ref().map(|x| x.reverify(&g, &wrong));
        println!("  {status} {:<38} counterexample re-verifies: {genuine:?}", c.name);
    }
}
