//! Named instances without stable matchings.
//!
//! `fig2` and `fig3` are the two sixteen-edge instances of dimension 3, the
//! `+72` / `+61` variants add a rank-2 edge (7,2) and/or (6,1) to `fig2`,
//! `fig3-swap04` interchanges the ranks of (0,4) and (0,7) in `fig3`, and
//! `appendix4` is the dimension-4 instance built on a nine-cycle.
//!
//! In `appendix4` the vertices `v0..v8` keep ids `0..8`, while the three
//! extra vertices are numbered so that `id mod 3` gives their gender:
//! `w3 -> 9`, `w4 -> 10`, `w2 -> 11`.

use crate::instance::Instance;
use crate::parse::parse_instance;

pub const NAMES: &[&str] = &[
    "fig2",
    "fig2+72",
    "fig2+61",
    "fig2+72+61",
    "fig3",
    "fig3-swap04",
    "appendix4",
];

const FIG2: &str = "\
3dsmi 3
0: 1 7
1: 2 5
2: 3
3: 4 1
4: 5 8 2
5: 0 3
6: 4
7: 8
8: 0 6
";

const FIG2_72: &str = "\
3dsmi 3
0: 1 7
1: 2 5
2: 3
3: 4 1
4: 5 8 2
5: 0 3
6: 4
7: 8 2
8: 0 6
";

const FIG2_61: &str = "\
3dsmi 3
0: 1 7
1: 2 5
2: 3
3: 4 1
4: 5 8 2
5: 0 3
6: 4 1
7: 8
8: 0 6
";

const FIG2_72_61: &str = "\
3dsmi 3
0: 1 7
1: 2 5
2: 3
3: 4 1
4: 5 8 2
5: 0 3
6: 4 1
7: 8 2
8: 0 6
";

const FIG3: &str = "\
3dsmi 3
0: 1 4 7
1: 2 8
2: 3 6
3: 4 7
4: 5
5: 0 3
6: 1
7: 2 5
8: 0
";

const FIG3_SWAP04: &str = "\
3dsmi 3
0: 1 7 4
1: 2 8
2: 3 6
3: 4 7
4: 5
5: 0 3
6: 1
7: 2 5
8: 0
";

const APPENDIX4: &str = "\
3dsmi 4
# v_i -> v_{i+1} (rank 1), v_i -> w_{i+1} (rank 2, i = 1..3),
# v_i -> v_{i+4} (rank 2, or 3 for i = 1..3), w_i -> v_{i-2} (rank 1)
0: 1 4
1: 2 11 5
2: 3 9 6
3: 4 10 7
4: 5 8
5: 6 0
6: 7 1
7: 8 2
8: 0 3
9: 1    # w3
10: 2   # w4
11: 0   # w2
";

/// Source text of a builtin instance.
pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "fig2" => FIG2,
        "fig2+72" => FIG2_72,
        "fig2+61" => FIG2_61,
        "fig2+72+61" => FIG2_72_61,
        "fig3" => FIG3,
        "fig3-swap04" => FIG3_SWAP04,
        "appendix4" => APPENDIX4,
        _ => return None,
    })
}

pub fn get(name: &str) -> Option<Instance> {
    source(name).map(|s| parse_instance(s).expect("builtin instances are well formed"))
}

/// Named vertices of `appendix4`: `v0..v8` and `w2..w4`.
pub fn appendix_v(i: usize) -> usize {
    i % 9
}

pub fn appendix_w(i: usize) -> usize {
    match i {
        2 => 11,
        3 => 9,
        4 => 10,
        _ => panic!("appendix4 has no vertex w{i}"),
    }
}
