//! Prints the 32-vertex fixture as DOT with SD vertices filled black, KE
//! vertices blue and matched edges red.
//!
//! Run with `cargo run --example dot_export | dot -Tsvg > g.svg`.

use sdke::{export_dot, fixtures, sd_ke_partition};

fn main() {
    let g = fixtures::composite32();
    let m = fixtures::composite32_matching(&g);
    let p = sd_ke_partition(&g, &m).unwrap();
    print!("{}", export_dot(&g, Some(&p), Some(&m)).unwrap());
}
