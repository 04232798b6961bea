//! Turns the dimension-3 instance without a stable matching into k-gender
//! instances of dimension 5 by subdividing one gender's outgoing edges.

use cycmatch::kgen::{default_subdivided_gender, k_find_stable_matching};
use cycmatch::{builtin, k_enumerate_families, subdivide};

fn main() {
    let fig2 = builtin::get("fig2").unwrap();
    let gender = default_subdivided_gender(&fig2);
    println!("subdividing the out-edges of gender {gender}");
    for k in 3..=6 {
        let sub = subdivide(&fig2, k, gender).unwrap();
        let families = k_enumerate_families(&sub.instance);
        let stable = k_find_stable_matching(&sub.instance);
        println!(
            "k={k}: n={} edges={} families={} stable matching: {}",
            sub.instance.n(),
            sub.instance.edge_count(),
            families.len(),
            if stable.is_some() { "yes" } else { "no" }
        );
        for f in &families {
            println!("    {f} -> {}", sub.project(f).unwrap());
        }
    }
    println!();
    print!("{}", subdivide(&fig2, 4, gender).unwrap().instance);
}
