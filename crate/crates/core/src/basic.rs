//! The rank-1 ("basic") subgraph and its shape classification.
//!
//! Each vertex with a nonempty list keeps only its first choice, which gives a
//! partial functional graph. At dimension 3 with every out-degree positive and
//! no rank-1 3-cycle, that graph is either a 9-cycle or a 6-cycle with three
//! tree vertices hanging off it. Gender constraints force the three tree
//! vertices to have distinct genders, which leaves five tail configurations.

use std::fmt;

use crate::instance::{Instance, VertexId};

/// Rank-1 successor of each vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicSubgraph {
    next: Vec<Option<VertexId>>,
}

impl BasicSubgraph {
    pub fn next(&self, v: VertexId) -> Option<VertexId> {
        self.next[v.0]
    }

    pub fn vertex_count(&self) -> usize {
        self.next.len()
    }

    /// `(source, target)` pairs in source order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.next
            .iter()
            .enumerate()
            .filter_map(|(v, t)| t.map(|t| (v, t.0)))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.next.iter().all(Option::is_none)
    }

    /// Cycles of the functional graph, each listed from its smallest vertex.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let count = self.next.len();
        // 0 = unvisited, 1 = on current walk, 2 = done
        let mut state = vec![0u8; count];
        let mut cycles = Vec::new();
        for start in 0..count {
            let mut path = Vec::new();
            let mut v = start;
            let mut dead_end = false;
            while state[v] == 0 {
                state[v] = 1;
                path.push(v);
                match self.next[v] {
                    Some(t) => v = t.0,
                    None => {
                        dead_end = true;
                        break;
                    }
                }
            }
            if !dead_end && state[v] == 1 {
                if let Some(pos) = path.iter().position(|&u| u == v) {
                    let mut cycle = path[pos..].to_vec();
                    let min = cycle.iter().enumerate().min_by_key(|(_, &u)| u).unwrap().0;
                    cycle.rotate_left(min);
                    cycles.push(cycle);
                }
            }
            for u in path {
                state[u] = 2;
            }
        }
        cycles.sort();
        cycles
    }
}

pub fn basic_subgraph(inst: &Instance) -> BasicSubgraph {
    BasicSubgraph {
        next: inst
            .vertices()
            .map(|v| inst.prefs(v).first().copied())
            .collect(),
    }
}

/// The six basic-subgraph shapes of dimension 3, numbered 1..=6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasicShape {
    /// A single 9-cycle.
    NineCycle,
    /// A 6-cycle fed by one 3-vertex chain.
    ThreeChain,
    /// A 2-chain into cycle vertex `c`, a single tail into the successor of `c`.
    ChainTailAhead,
    /// A 2-chain into cycle vertex `c`, a single tail into the vertex two
    /// steps before `c`.
    ChainTailBehind,
    /// Three single tails into alternate cycle vertices.
    SpreadTails,
    /// Three single tails into consecutive cycle vertices.
    ConsecutiveTails,
}

impl BasicShape {
    pub const ALL: [BasicShape; 6] = [
        BasicShape::NineCycle,
        BasicShape::ThreeChain,
        BasicShape::ChainTailAhead,
        BasicShape::ChainTailBehind,
        BasicShape::SpreadTails,
        BasicShape::ConsecutiveTails,
    ];

    pub fn index(self) -> usize {
        self as usize + 1
    }

    pub fn from_index(k: usize) -> Option<BasicShape> {
        k.checked_sub(1).and_then(|i| Self::ALL.get(i).copied())
    }

    /// Rank-1 successor of vertices `0..9` in the reference labeling used by
    /// the search. Cycle vertices are `0..6` (`i -> i+1`), tree vertices `6..9`.
    pub fn template(self) -> [usize; 9] {
        let cycle = [1, 2, 3, 4, 5, 0];
        let tails = match self {
            BasicShape::NineCycle => return [1, 2, 3, 4, 5, 6, 7, 8, 0],
            BasicShape::ThreeChain => [7, 8, 0],
            BasicShape::ChainTailAhead => [1, 8, 0],
            BasicShape::ChainTailBehind => [4, 8, 0],
            BasicShape::SpreadTails => [1, 5, 3],
            BasicShape::ConsecutiveTails => [1, 2, 0],
        };
        let mut t = [0; 9];
        t[..6].copy_from_slice(&cycle);
        t[6..].copy_from_slice(&tails);
        t
    }
}

impl fmt::Display for BasicShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            BasicShape::NineCycle => "nine-cycle",
            BasicShape::ThreeChain => "six-cycle with 3-chain",
            BasicShape::ChainTailAhead => "six-cycle with 2-chain and tail ahead",
            BasicShape::ChainTailBehind => "six-cycle with 2-chain and tail behind",
            BasicShape::SpreadTails => "six-cycle with alternating tails",
            BasicShape::ConsecutiveTails => "six-cycle with consecutive tails",
        };
        write!(f, "shape {} ({name})", self.index())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeClass {
    /// Some rank-1 edges form a 3-cycle.
    Contains3Cycle,
    Basic(BasicShape),
    /// Anything else, including dimensions other than 3 and vertices without
    /// a first choice.
    Other,
}

impl fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeClass::Contains3Cycle => write!(f, "contains a rank-1 3-cycle"),
            ShapeClass::Basic(s) => write!(f, "{s}"),
            ShapeClass::Other => write!(f, "other"),
        }
    }
}

pub fn classify_basic_shape(b: &BasicSubgraph, n: usize) -> ShapeClass {
    let cycles = b.cycles();
    if cycles.iter().any(|c| c.len() == 3) {
        return ShapeClass::Contains3Cycle;
    }
    if n != 3 || b.vertex_count() != 9 || b.next.iter().any(Option::is_none) {
        return ShapeClass::Other;
    }
    match cycles.as_slice() {
        [c] if c.len() == 9 => ShapeClass::Basic(BasicShape::NineCycle),
        [c] if c.len() == 6 => classify_six_cycle(b, c),
        _ => ShapeClass::Other,
    }
}

fn classify_six_cycle(b: &BasicSubgraph, cycle: &[usize]) -> ShapeClass {
    let pos = |v: usize| cycle.iter().position(|&u| u == v);
    // For each tree vertex: distance to the cycle and the cycle position hit.
    let mut tails = Vec::new();
    for v in 0..9 {
        if pos(v).is_some() {
            continue;
        }
        let mut depth = 0;
        let mut u = v;
        while pos(u).is_none() {
            u = b.next[u].expect("all out-degrees positive").0;
            depth += 1;
        }
        tails.push((depth, pos(u).unwrap()));
    }
    let mut depths: Vec<usize> = tails.iter().map(|t| t.0).collect();
    depths.sort();
    let shape = match depths.as_slice() {
        [1, 2, 3] => Some(BasicShape::ThreeChain),
        [1, 1, 2] => {
            let chain = tails.iter().find(|t| t.0 == 2).unwrap().1;
            // the chain's middle vertex also has depth 1 and lands on `chain`
            let tail = tails
                .iter()
                .filter(|t| t.0 == 1)
                .map(|t| t.1)
                .find(|&p| p != chain)
                .unwrap_or(chain);
            match (tail + 6 - chain) % 6 {
                1 => Some(BasicShape::ChainTailAhead),
                4 => Some(BasicShape::ChainTailBehind),
                _ => None,
            }
        }
        [1, 1, 1] => {
            let mut at: Vec<usize> = tails.iter().map(|t| t.1).collect();
            at.sort();
            at.dedup();
            if at.len() != 3 {
                None
            } else if at.iter().all(|p| p % 2 == at[0] % 2) {
                Some(BasicShape::SpreadTails)
            } else if (0..6).any(|s| (0..3).all(|i| at.contains(&((s + i) % 6)))) {
                Some(BasicShape::ConsecutiveTails)
            } else {
                None
            }
        }
        _ => None,
    };
    shape.map_or(ShapeClass::Other, ShapeClass::Basic)
}

/// Shape of an instance's basic subgraph.
pub fn classify_instance(inst: &Instance) -> ShapeClass {
    classify_basic_shape(&basic_subgraph(inst), inst.n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    fn from_next(next: &[usize]) -> BasicSubgraph {
        BasicSubgraph {
            next: next.iter().map(|&t| Some(VertexId(t))).collect(),
        }
    }

    #[test]
    fn fig2_basic_edges() {
        let b = basic_subgraph(&builtin::get("fig2").unwrap());
        assert_eq!(
            b.edges(),
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 0),
                (6, 4),
                (7, 8),
                (8, 0)
            ]
        );
        assert_eq!(b.cycles(), vec![vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn appendix_basic_edges() {
        let b = basic_subgraph(&builtin::get("appendix4").unwrap());
        let mut expected: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        for i in 2..=4 {
            expected.push((builtin::appendix_w(i), i - 2));
        }
        expected.sort();
        assert_eq!(b.edges(), expected);
        assert_eq!(b.cycles(), vec![(0..9).collect::<Vec<_>>()]);
    }

    #[test]
    fn empty_map() {
        let b = basic_subgraph(&Instance::empty(3));
        assert!(b.is_empty());
        assert_eq!(classify_basic_shape(&b, 3), ShapeClass::Other);
    }

    #[test]
    fn templates_classify_to_themselves() {
        for s in BasicShape::ALL {
            assert_eq!(
                classify_basic_shape(&from_next(&s.template()), 3),
                ShapeClass::Basic(s),
                "{s}"
            );
            assert_eq!(BasicShape::from_index(s.index()), Some(s));
        }
        assert_eq!(BasicShape::from_index(0), None);
        assert_eq!(BasicShape::from_index(7), None);
    }

    #[test]
    fn templates_respect_gender() {
        for s in BasicShape::ALL {
            for (v, t) in s.template().iter().enumerate() {
                assert_eq!(t % 3, (v + 1) % 3, "{s}: {v} -> {t}");
            }
        }
    }

    #[test]
    fn figures_classify() {
        let fig2 = classify_instance(&builtin::get("fig2").unwrap());
        assert_eq!(fig2, ShapeClass::Basic(BasicShape::ChainTailBehind));
        let fig3 = classify_instance(&builtin::get("fig3").unwrap());
        assert_eq!(fig3, ShapeClass::Basic(BasicShape::ConsecutiveTails));
    }

    #[test]
    fn rank1_triangle() {
        let b = from_next(&[1, 2, 0, 4, 5, 6, 7, 8, 3]);
        assert_eq!(classify_basic_shape(&b, 3), ShapeClass::Contains3Cycle);
        let inst = Instance::from_lists(1, &[&[1], &[2], &[0]]).unwrap();
        assert_eq!(classify_instance(&inst), ShapeClass::Contains3Cycle);
    }
}
