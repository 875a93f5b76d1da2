//! SD-KE partition of the 12-vertex fixture, with certificates.
//!
//! Run with `cargo run --example decompose`.

use sdke::{fixtures, sd_ke_partition, verify_walk, Certificate};

fn main() {
    let g = fixtures::jposy12();
    let m = fixtures::jposy12_matching(&g);
    let p = sd_ke_partition(&g, &m).unwrap();

    println!("SD = {:?}", p.sd_labels(&g));
    println!("KE = {:?}", p.ke_labels(&g));
    for e in &p.cut {
        println!("cut edge {}-{}", g.label(e.u), g.label(e.v));
    }
    for (v, cert) in p.certificates.iter().enumerate() {
        match cert {
            Certificate::Witness(w) => {
                verify_walk(&g, &m, w).expect("witness walks verify");
                println!("{:>3}: SD, walk of length {}: {:?}", g.label(v), w.len(), w.labels(&g));
            }
            Certificate::NoClosedWalk { searched } => {
                println!("{:>3}: KE, no mm-closed walk at {}", g.label(v), g.label(*searched));
            }
        }
    }
}
