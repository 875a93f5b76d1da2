//! Reachable sets R(M, v) on the two ladder-style fixtures.
//!
//! Run with `cargo run --example reachability`.

use sdke::{fixtures, reachable_set, semi_jposy_witness, Graph, Matching};

fn show(g: &Graph, m: &Matching, name: &str) {
    println!("{name}: M = {:?}", m.pairs().iter().map(|e| (g.label(e.u), g.label(e.v))).collect::<Vec<_>>());
    for label in [1, 2] {
        let v = g.vertex(label).unwrap();
        let r = reachable_set(g, m, v).unwrap();
        println!("  R(M, {label}) = {:?}", r.labels(g));
    }
}

fn main() {
    let g = fixtures::ladder();
    show(&g, &fixtures::ladder_matching_a(&g), "ladder, first matching");
    show(&g, &fixtures::ladder_matching_b(&g), "ladder, second matching");

    let g = fixtures::octet();
    show(&g, &fixtures::octet_matching_a(&g), "octet");
    let m = fixtures::octet_matching_a(&g);
    let w = semi_jposy_witness(&g, &m, g.vertex(1).unwrap()).unwrap().unwrap();
    println!("  mm-closed walk at 1: {:?}", w.labels(&g));
}
