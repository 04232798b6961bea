//! Compares the maximal-matching search with the all-matchings oracle on
//! random dimension-3 instances.
//!
//! ```text
//! cargo run --release --example oracle_crosscheck -- [COUNT] [SEED]
//! ```

use rand::rngs::StdRng;
use rand::SeedableRng;

use cycmatch::generate::random_instance;
use cycmatch::{brute_force_stable_exists, find_stable_matching};

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(10_000);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let mut rng = StdRng::seed_from_u64(seed);
    let (mut unstable, mut disagreements) = (0, 0);
    for _ in 0..count {
        let inst = random_instance(3, &mut rng);
        let found = find_stable_matching(&inst).is_some();
        if !found {
            unstable += 1;
            print!("{inst}");
        }
        if found != brute_force_stable_exists(&inst) {
            disagreements += 1;
        }
    }
    println!(
        "{count} instances, {unstable} without stable matching, {disagreements} disagreements"
    );
}
