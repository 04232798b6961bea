//! The dimension-4 instance built on a nine-cycle: its families, its maximal
//! matchings of three families and their blockers.
//!
//! Vertices `v0..v8` have ids `0..8`; `w3`, `w4`, `w2` have ids 9, 10, 11.

use cycmatch::stability::certificate;
use cycmatch::{builtin, enumerate_families, find_stable_matching, Family, VertexId};

fn name(v: VertexId) -> String {
    match v.0 {
        9 => "w3".into(),
        10 => "w4".into(),
        11 => "w2".into(),
        i => format!("v{i}"),
    }
}

fn show(f: &Family) -> String {
    let [a, b, c] = f.members();
    format!("({},{},{})", name(a), name(b), name(c))
}

fn main() {
    let inst = builtin::get("appendix4").unwrap();
    let families = enumerate_families(&inst);
    println!("{} families:", families.len());
    for f in &families {
        println!("  {}", show(f));
    }

    let cert = certificate(&inst);
    let by_size = |k: usize| cert.entries.iter().filter(move |e| e.matching.len() == k);
    println!("{} maximal matchings", cert.entries.len());
    for k in 1..=3 {
        println!("  of size {k}: {}", by_size(k).count());
    }
    println!("maximal matchings of three families:");
    for e in by_size(3) {
        let fams: Vec<String> = e.matching.families().iter().map(show).collect();
        let blockers: Vec<String> = e.blockers.iter().map(show).collect();
        println!("  {{{}}} blocked by {}", fams.join(","), blockers.join(" "));
    }
    match find_stable_matching(&inst) {
        Some(m) => println!("stable matching: {m}"),
        None => println!("no stable matching"),
    }
}
