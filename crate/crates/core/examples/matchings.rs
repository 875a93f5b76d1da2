//! Maximum matchings, their enumeration, and the König-Egerváry test.
//!
//! Run with `cargo run --example matchings`.

use sdke::matching::{enumerate_maximum_matchings, enumerate_perfect_matchings, maximum_matching};
use sdke::verification::is_koenig_egervary;
use sdke::{fixtures, Graph};

fn main() {
    let c5 = Graph::cycle(5);
    let m = maximum_matching(&c5);
    let pairs: Vec<String> = m.pairs().iter().map(|e| e.to_string()).collect();
    println!("C5: maximum matching {}", pairs.join(" "));
    println!("C5: {} maximum matchings", enumerate_maximum_matchings(&c5, 16).unwrap().len());

    for (name, g) in [("ladder", fixtures::ladder()), ("octet", fixtures::octet()), ("C5", c5)] {
        let k = is_koenig_egervary(&g, 30).unwrap();
        println!(
            "{name}: n = {}, alpha = {}, mu = {}, KE = {}, perfect matchings = {}",
            k.n,
            k.alpha,
            k.mu,
            k.is_ke,
            enumerate_perfect_matchings(&g, 16).unwrap().len()
        );
    }
}
