//! Checks every instance of dimension 1 and 2 for a stable matching, and
//! shows the stable family of the six-cycle instance with three rank-2 chords.

use cycmatch::{find_stable_matching, is_stable, verify_small_dimensions, Instance, Matching};

fn main() {
    for n in [1, 2] {
        let report = verify_small_dimensions(n);
        println!(
            "n={n}: {report} (oracle disagreements: {})",
            report.oracle_disagreements
        );
    }

    // basic 6-cycle v0..v5 plus (v0,v4), (v4,v2), (v2,v0) at rank 2
    let inst = Instance::from_lists(2, &[&[1, 4], &[2], &[3, 0], &[4], &[5, 2], &[0]]).unwrap();
    let chords = Matching::from_cycles(&inst, &[[0, 4, 2]]).unwrap();
    println!("{chords} stable: {}", is_stable(&inst, &chords));
    println!("search finds: {}", find_stable_matching(&inst).unwrap());
}
