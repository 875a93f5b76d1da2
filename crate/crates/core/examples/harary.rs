//! Determinant and permanent as sums over Sachs subgraphs.
//!
//! Run with `cargo run --example harary`.

use sdke::determinantal::{det_adjacency, enumerate_sachs, perm_adjacency};
use sdke::{Graph, SachsComponent};

fn main() {
    let g = Graph::complete(4);
    let mut det = 0i64;
    let mut perm = 0i64;
    for s in enumerate_sachs(&g, 20).unwrap() {
        let parts: Vec<String> = s
            .components
            .iter()
            .map(|c| match c {
                SachsComponent::K2(u, v) => format!("K2({u},{v})"),
                SachsComponent::Cycle(c) => format!("C{:?}", c),
            })
            .collect();
        let (d, p) = (s.determinant_term(), s.permanent_term());
        println!("{:<28} c = {}  even = {}  det term {:>3}  perm term {}", parts.join(" "), s.cycle_count(), s.even_component_count(), d, p);
        det += i64::try_from(d).unwrap();
        perm += i64::try_from(p).unwrap();
    }
    println!("sum of det terms = {det}, Bareiss = {}", det_adjacency(&g));
    println!("sum of perm terms = {perm}, Ryser = {}", perm_adjacency(&g, 20).unwrap());
}
