//! Scans all 5^9 instances of one or all basic shapes.
//!
//! ```text
//! cargo run --release --example shape_search -- [SHAPE] [WORKERS]
//! ```

use std::time::Instant;

use cycmatch::search::{search_counterexamples_with, SearchOptions};
use cycmatch::BasicShape;

fn main() {
    let mut args = std::env::args().skip(1);
    let shapes: Vec<BasicShape> = match args.next().and_then(|s| s.parse().ok()) {
        Some(k) => vec![BasicShape::from_index(k).expect("shape index is 1..=6")],
        None => BasicShape::ALL.to_vec(),
    };
    let mut opts = SearchOptions {
        sample_limit: 1,
        ..SearchOptions::default()
    };
    if let Some(w) = args.next().and_then(|s| s.parse().ok()) {
        opts.workers = w;
    }
    println!("workers: {}", opts.workers);
    for shape in shapes {
        let start = Instant::now();
        let report = search_counterexamples_with(shape, &opts);
        println!("{report}");
        println!("  {}  ({:.1?})", report.machine_line(), start.elapsed());
        if let Some(sample) = report.samples.first() {
            println!("  first counterexample (index {}):", sample.index);
            for line in sample.instance.to_string().lines() {
                println!("    {line}");
            }
        }
    }
}
