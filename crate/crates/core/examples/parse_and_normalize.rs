//! Parsing, validation errors and normalization of instances.

use cycmatch::instance::Violation;
use cycmatch::{enumerate_families, normalize, parse_instance, validate, Instance, VertexId};

fn main() {
    let text = "\
# a six-cycle with a dangling chain
3dsmi 3
0: 1
1: 2 8
2: 3
3: 4
4: 5
5: 0
6: 7
";
    let inst = parse_instance(text).unwrap();
    println!("parsed {} edges", inst.edge_count());

    for bad in [
        "3dsmi 1\n0: 2\n",
        "3dsmi 2\n0: 1 1\n",
        "3dsmi 1\n0: 1\n0: 1\n",
        "3dsml 1\n",
    ] {
        println!("{:?} -> {}", bad, parse_instance(bad).unwrap_err());
    }

    let broken = Instance::new_unchecked(1, vec![vec![VertexId(1), VertexId(1)], vec![], vec![]]);
    let report = validate(&broken);
    assert!(report.violations.contains(&Violation::DuplicateTarget {
        vertex: 0,
        target: 1
    }));
    println!("validation:\n{report}");

    let norm = normalize(&inst).unwrap();
    println!("normalized:\n{norm}");
    assert_eq!(enumerate_families(&inst), enumerate_families(&norm));
}
