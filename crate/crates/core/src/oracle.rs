//! Exhaustive reference check for small instances.
//!
//! Scans every set of pairwise disjoint 3-cycles (the empty set included)
//! and tests each directly against the blocking condition. It shares no code
//! with the maximal-matching search in [`crate::stability`], so the two can be
//! compared. Cost grows with the number of matchings; intended for `n <= 3`.

use crate::instance::{Instance, VertexId};

/// Counts gathered by a full scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleScan {
    pub families: usize,
    /// Nonempty matchings examined.
    pub nonempty_matchings: usize,
    /// Matchings, the empty one included, that have no blocking triple.
    pub stable_matchings: usize,
}

struct Cycle {
    members: [usize; 3],
    ranks: [u32; 3],
}

fn cycles(inst: &Instance) -> Vec<Cycle> {
    let n = inst.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (m, f, d) = (3 * i, 3 * j + 1, 3 * k + 2);
                let r1 = inst.rank(VertexId(m), VertexId(f));
                let r2 = inst.rank(VertexId(f), VertexId(d));
                let r3 = inst.rank(VertexId(d), VertexId(m));
                if let (Some(a), Some(b), Some(c)) = (r1, r2, r3) {
                    out.push(Cycle {
                        members: [m, f, d],
                        ranks: [a, b, c],
                    });
                }
            }
        }
    }
    out
}

/// `None` stands for a single vertex.
fn stable(cycles: &[Cycle], chosen: &[usize], vertex_count: usize) -> bool {
    let mut current: Vec<Option<u32>> = vec![None; vertex_count];
    for &c in chosen {
        for (v, r) in cycles[c].members.iter().zip(cycles[c].ranks) {
            current[*v] = Some(r);
        }
    }
    !cycles.iter().any(|c| {
        c.members
            .iter()
            .zip(c.ranks)
            .all(|(v, r)| current[*v].is_none_or(|cur| r < cur))
    })
}

fn walk(
    cycles: &[Cycle],
    next: usize,
    chosen: &mut Vec<usize>,
    taken: &mut Vec<bool>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if visit(chosen) {
        return true;
    }
    for c in next..cycles.len() {
        let ms = cycles[c].members;
        if ms.iter().any(|&v| taken[v]) {
            continue;
        }
        ms.iter().for_each(|&v| taken[v] = true);
        chosen.push(c);
        let stop = walk(cycles, c + 1, chosen, taken, visit);
        chosen.pop();
        ms.iter().for_each(|&v| taken[v] = false);
        if stop {
            return true;
        }
    }
    false
}

/// Full scan over all matchings.
pub fn scan(inst: &Instance) -> OracleScan {
    let cs = cycles(inst);
    let vc = inst.vertex_count();
    let mut result = OracleScan {
        families: cs.len(),
        nonempty_matchings: 0,
        stable_matchings: 0,
    };
    walk(
        &cs,
        0,
        &mut Vec::new(),
        &mut vec![false; vc],
        &mut |chosen| {
            if !chosen.is_empty() {
                result.nonempty_matchings += 1;
            }
            if stable(&cs, chosen, vc) {
                result.stable_matchings += 1;
            }
            false
        },
    );
    result
}

/// Whether any matching at all is stable; stops at the first one found.
pub fn brute_force_stable_exists(inst: &Instance) -> bool {
    let cs = cycles(inst);
    let vc = inst.vertex_count();
    walk(
        &cs,
        0,
        &mut Vec::new(),
        &mut vec![false; vc],
        &mut |chosen| stable(&cs, chosen, vc),
    )
}
