//! det(G) = det(SD) · det(KE) and the same for permanents.
//!
//! Run with `cargo run --example factorization [seed]`.

use sdke::verification::random_mixed_matchable_graph;
use sdke::{factorization_report, fixtures, FactorOptions, PermMethod};

fn main() {
    // Ryser is capped at 30 vertices; the Sachs expansion is cheap on this sparse graph
    let sparse = FactorOptions {
        perm_method: PermMethod::Sachs,
        sachs_bound: 32,
        ..FactorOptions::default()
    };
    let g = fixtures::composite32();
    let r = factorization_report(&g, &sparse).unwrap();
    println!("32-vertex worked example:");
    print!("{}", r.to_text());

    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let g = random_mixed_matchable_graph(14, 0.3, seed).unwrap();
    let r = factorization_report(&g, &FactorOptions::default()).unwrap();
    println!("\nrandom graph, n = 14, seed {seed}, {} cut edges:", r.cut_size);
    print!("{}", r.to_text());
}
