//! Prints the families of a builtin instance and the blocking triples of
//! each of its maximal matchings.
//!
//! ```text
//! cargo run --example certificate -- fig3
//! ```

use cycmatch::stability::certificate;
use cycmatch::{basic, builtin, enumerate_families};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "fig2".into());
    let Some(inst) = builtin::get(&name) else {
        eprintln!("unknown builtin `{name}`; try one of {:?}", builtin::NAMES);
        std::process::exit(2);
    };
    print!("{inst}");
    println!("basic subgraph: {}", basic::classify_instance(&inst));

    let families = enumerate_families(&inst);
    let listed: Vec<String> = families.iter().map(|f| f.to_string()).collect();
    println!("{} families: {}", families.len(), listed.join(" "));

    let cert = certificate(&inst);
    print!("{cert}");
    if cert.is_unsolvable() {
        println!("every maximal matching is blocked: no stable matching");
    }
}
