//! Runs the order-by-order iteration on `x^p + y^q + x*y^(q-1)` and prints
//! `m^(d)` with timings.
//!
//! ```text
//! cargo run --release --example reiffen -- 6 7
//! ```

use std::time::Instant;

use curveloc::annihilator::{kappa_with_progress, reiffen, KappaConfig};

fn main() {
    let args: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let p = args.first().copied().unwrap_or(4);
    let q = args.get(1).copied().unwrap_or(p + 1);
    let f = reiffen(p, q).expect("valid parameters");
    println!("f = {f}");
    let start = Instant::now();
    let mut last = Instant::now();
    let result = kappa_with_progress(&f, &KappaConfig::default(), |r| {
        println!(
            "d = {}  m = {}  generators = {}  dim = {}  ({:.2?})",
            r.d,
            r.m,
            r.generators.len(),
            r.char_dimension,
            last.elapsed()
        );
        last = Instant::now();
    })
    .expect("iteration succeeds");
    println!("kappa = {}  (total {:.2?})", result.kappa, start.elapsed());
}
