//! Instance generators: exhaustive enumeration for tiny dimensions and
//! uniform random sampling.

use rand::Rng;

use crate::instance::{Instance, VertexId, GENDERS};

/// Every ordered list of distinct elements of `targets`, the empty list first.
pub fn ordered_subsets(targets: &[VertexId]) -> Vec<Vec<VertexId>> {
    fn extend(prefix: &mut Vec<VertexId>, targets: &[VertexId], out: &mut Vec<Vec<VertexId>>) {
        out.push(prefix.clone());
        for &t in targets {
            if !prefix.contains(&t) {
                prefix.push(t);
                extend(prefix, targets, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), targets, &mut out);
    out
}

fn next_gender_targets(n: usize, v: usize) -> Vec<VertexId> {
    let g = (v + 1) % GENDERS;
    (0..n).map(|i| VertexId(GENDERS * i + g)).collect()
}

/// All valid instances of dimension `n`, as a mixed-radix counter over the
/// per-vertex list choices (vertex 0 varies fastest).
pub struct AllInstances {
    n: usize,
    options: Vec<Vec<VertexId>>,
    digits: Vec<usize>,
    done: bool,
}

impl AllInstances {
    pub fn new(n: usize) -> Self {
        let options = ordered_subsets(&next_gender_targets(n, 0));
        AllInstances {
            n,
            options,
            digits: vec![0; GENDERS * n],
            done: false,
        }
    }

    /// Number of instances the iterator yields.
    pub fn total(n: usize) -> u64 {
        let per_vertex = ordered_subsets(&next_gender_targets(n, 0)).len() as u64;
        per_vertex.pow((GENDERS * n) as u32)
    }
}

impl Iterator for AllInstances {
    type Item = Instance;

    fn next(&mut self) -> Option<Instance> {
        if self.done {
            return None;
        }
        // Options are computed for gender-1 targets; shift them to the
        // right gender for each vertex.
        let prefs = self
            .digits
            .iter()
            .enumerate()
            .map(|(v, &d)| {
                let shift = (v + 1) % GENDERS;
                self.options[d]
                    .iter()
                    .map(|t| VertexId(t.0 - 1 + shift))
                    .collect()
            })
            .collect();
        let inst = Instance::new(self.n, prefs).expect("generated lists are valid");
        let radix = self.options.len();
        let mut i = 0;
        loop {
            if i == self.digits.len() {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < radix {
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(inst)
    }
}

/// An instance whose every list is drawn uniformly from all ordered subsets
/// of the next gender.
pub fn random_instance(n: usize, rng: &mut impl Rng) -> Instance {
    let prefs = (0..GENDERS * n)
        .map(|v| {
            let options = ordered_subsets(&next_gender_targets(n, v));
            options[rng.gen_range(0..options.len())].clone()
        })
        .collect();
    Instance::new(n, prefs).expect("generated lists are valid")
}

/// Like [`random_instance`] but every list is nonempty.
pub fn random_full_degree_instance(n: usize, rng: &mut impl Rng) -> Instance {
    let prefs = (0..GENDERS * n)
        .map(|v| {
            let options = ordered_subsets(&next_gender_targets(n, v));
            options[rng.gen_range(1..options.len())].clone()
        })
        .collect();
    Instance::new(n, prefs).expect("generated lists are valid")
}
