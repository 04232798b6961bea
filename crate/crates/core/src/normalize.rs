//! Removal of zero out-degree vertices without changing the family set.
//!
//! A vertex with no outgoing edge lies on no 3-cycle, so it can be deleted
//! together with the edges entering it. Repeating this leaves a core in which
//! every vertex has an outgoing edge. Each deleted vertex is then restored
//! with a single edge to the lowest-id core vertex of the next gender. A
//! restored vertex has no incoming edges, so it still lies on no cycle.

use thiserror::Error;

use crate::instance::{Instance, VertexId, GENDERS};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum NormalizeError {
    /// Pruning removed every vertex of some gender, so pruned vertices of the
    /// preceding gender have nothing to point at. This happens in particular
    /// whenever the instance has no family.
    #[error("no vertex of gender {0} survives pruning")]
    EmptyGender(usize),
}

/// Returns an instance with every out-degree at least 1, the same families,
/// and the same relative rank order on surviving edges.
pub fn normalize(inst: &Instance) -> Result<Instance, NormalizeError> {
    let count = inst.vertex_count();
    let mut alive = vec![true; count];
    let mut degree: Vec<usize> = inst.vertices().map(|v| inst.out_degree(v)).collect();
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); count];
    for (v, t, _) in inst.edges() {
        preds[t.0].push(v.0);
    }
    let mut stack: Vec<usize> = (0..count).filter(|&v| degree[v] == 0).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &p in &preds[v] {
            degree[p] -= 1;
            if degree[p] == 0 && alive[p] {
                stack.push(p);
            }
        }
    }
    if alive.iter().all(|&a| a) {
        return Ok(inst.clone());
    }

    let first_alive: [Option<VertexId>; GENDERS] =
        std::array::from_fn(|g| inst.gender_class(g).find(|v| alive[v.0]));
    let mut prefs = Vec::with_capacity(count);
    for v in inst.vertices() {
        if alive[v.0] {
            prefs.push(
                inst.prefs(v)
                    .iter()
                    .copied()
                    .filter(|t| alive[t.0])
                    .collect::<Vec<VertexId>>(),
            );
        } else {
            let g = (v.gender() + 1) % GENDERS;
            let target = first_alive[g].ok_or(NormalizeError::EmptyGender(g))?;
            prefs.push(vec![target]);
        }
    }
    Ok(Instance::new(inst.n(), prefs).expect("normalization keeps instances valid"))
}
