//! V_SD before and after deleting a KE edge, on a graph without a perfect
//! matching.
//!
//! Run with `cargo run --example stability`.

use sdke::decomposition::{check_stability_under_deletion, ke_vertices_general};
use sdke::matching::DEFAULT_ENUMERATION_BOUND;
use sdke::fixtures;

fn main() {
    let g = fixtures::unmatchable9();
    let bound = DEFAULT_ENUMERATION_BOUND;
    let ke = ke_vertices_general(&g, bound).unwrap();
    println!("V_KE(G) = {:?}", ke.iter().map(|&v| g.label(v)).collect::<Vec<_>>());

    let labels = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>();
    for e in g.edges().iter().filter(|e| ke.contains(&e.u) && ke.contains(&e.v)) {
        let r = check_stability_under_deletion(&g, *e, bound).unwrap();
        println!("delete {}-{}:", g.label(e.u), g.label(e.v));
        println!("  some maximum matching avoids it: {}", r.avoidable);
        println!("  V_SD before {:?}", labels(&r.sd_before));
        println!("  V_SD after  {:?}", labels(&r.sd_after));
        println!("  inclusion holds: {}, equal: {}", r.inclusion_holds, r.equal);
    }
}
