//! Exhaustive search over dimension-3 instances, and verification of the
//! dimensions 1 and 2.
//!
//! Every dimension-3 instance worth examining has, after normalization and up
//! to relabeling, one of the six basic shapes as its rank-1 subgraph. Each of
//! the nine vertices then has five ways to add lower-ranked edges to the two
//! remaining vertices of the next gender, so each shape spans `5^9` instances.
//! Instance `i` of a shape takes the base-5 digits of `i` as choices, vertex 0
//! being the least significant digit.

use std::fmt;
use std::ops::Range;

use rayon::prelude::*;

use crate::basic::BasicShape;
use crate::generate::AllInstances;
use crate::instance::{Instance, VertexId};
use crate::oracle::brute_force_stable_exists;
use crate::stability::has_stable_matching;

/// Instances per shape.
pub const INSTANCES_PER_SHAPE: u64 = 5u64.pow(9);

/// Lower-ranked edges added to one vertex. "First" and "second" are the two
/// next-gender vertices other than the rank-1 target, in increasing id order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtensionChoice {
    NoExtra,
    OneExtraFirst,
    OneExtraSecond,
    /// first at rank 2, second at rank 3
    TwoExtraFirstSecond,
    /// second at rank 2, first at rank 3
    TwoExtraSecondFirst,
}

impl ExtensionChoice {
    pub const ALL: [ExtensionChoice; 5] = [
        ExtensionChoice::NoExtra,
        ExtensionChoice::OneExtraFirst,
        ExtensionChoice::OneExtraSecond,
        ExtensionChoice::TwoExtraFirstSecond,
        ExtensionChoice::TwoExtraSecondFirst,
    ];

    pub fn digit(self) -> u64 {
        self as u64
    }

    /// Extra targets in rank order; `true` picks the first alternative.
    fn extras(self) -> &'static [bool] {
        match self {
            ExtensionChoice::NoExtra => &[],
            ExtensionChoice::OneExtraFirst => &[true],
            ExtensionChoice::OneExtraSecond => &[false],
            ExtensionChoice::TwoExtraFirstSecond => &[true, false],
            ExtensionChoice::TwoExtraSecondFirst => &[false, true],
        }
    }
}

pub type ChoiceVector = [ExtensionChoice; 9];

pub fn choices_from_index(mut index: u64) -> ChoiceVector {
    assert!(index < INSTANCES_PER_SHAPE, "choice index out of range");
    let mut out = [ExtensionChoice::NoExtra; 9];
    for c in out.iter_mut() {
        *c = ExtensionChoice::ALL[(index % 5) as usize];
        index /= 5;
    }
    out
}

pub fn index_of_choices(choices: &ChoiceVector) -> u64 {
    choices.iter().rev().fold(0, |acc, c| acc * 5 + c.digit())
}

fn alternatives(v: usize, rank1: usize) -> (VertexId, VertexId) {
    let g = (v + 1) % 3;
    let mut alts = (0..3).map(|i| 3 * i + g).filter(|&t| t != rank1);
    (
        VertexId(alts.next().unwrap()),
        VertexId(alts.next().unwrap()),
    )
}

/// The dimension-3 instance with the given basic shape and extra edges.
pub fn build_instance(shape: BasicShape, choices: &ChoiceVector) -> Instance {
    let template = shape.template();
    let prefs = (0..9)
        .map(|v| {
            let (first, second) = alternatives(v, template[v]);
            let mut list = vec![VertexId(template[v])];
            for &pick_first in choices[v].extras() {
                list.push(if pick_first { first } else { second });
            }
            list
        })
        .collect();
    Instance::new(3, prefs).expect("templates and extensions respect gender")
}

/// Recovers the choice vector of an instance whose rank-1 edges are exactly
/// `shape`'s template.
pub fn extension_choices(inst: &Instance, shape: BasicShape) -> Option<ChoiceVector> {
    if inst.n() != 3 {
        return None;
    }
    let template = shape.template();
    let mut out = [ExtensionChoice::NoExtra; 9];
    for v in 0..9 {
        let list = inst.prefs(VertexId(v));
        if list.first() != Some(&VertexId(template[v])) {
            return None;
        }
        let (first, second) = alternatives(v, template[v]);
        out[v] = match &list[1..] {
            [] => ExtensionChoice::NoExtra,
            [a] if *a == first => ExtensionChoice::OneExtraFirst,
            [a] if *a == second => ExtensionChoice::OneExtraSecond,
            [a, b] if *a == first && *b == second => ExtensionChoice::TwoExtraFirstSecond,
            [a, b] if *a == second && *b == first => ExtensionChoice::TwoExtraSecondFirst,
            _ => return None,
        };
    }
    Some(out)
}

/// A counterexample found by the scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub index: u64,
    pub instance: Instance,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleReport {
    pub shape: BasicShape,
    pub scanned: u64,
    pub counterexamples: u64,
    /// The first counterexamples in index order, at most `sample_limit`.
    pub samples: Vec<Sample>,
    /// Instances re-checked with the all-matchings oracle.
    pub oracle_checked: u64,
    pub oracle_disagreements: u64,
}

impl CounterexampleReport {
    /// `shape=<k> scanned=<c> counterexamples=<c>`
    pub fn machine_line(&self) -> String {
        format!(
            "shape={} scanned={} counterexamples={}",
            self.shape.index(),
            self.scanned,
            self.counterexamples
        )
    }

    fn merge(mut self, other: CounterexampleReport, sample_limit: usize) -> CounterexampleReport {
        self.scanned += other.scanned;
        self.counterexamples += other.counterexamples;
        self.oracle_checked += other.oracle_checked;
        self.oracle_disagreements += other.oracle_disagreements;
        let room = sample_limit.saturating_sub(self.samples.len());
        self.samples.extend(other.samples.into_iter().take(room));
        self
    }
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.shape)?;
        writeln!(f, "  instances scanned:      {}", self.scanned)?;
        writeln!(f, "  without stable matching: {}", self.counterexamples)?;
        write!(
            f,
            "  oracle cross-checks:    {} ({} disagreements)",
            self.oracle_checked, self.oracle_disagreements
        )
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub workers: usize,
    pub sample_limit: usize,
    /// Every index divisible by this is re-checked with the oracle, as is
    /// every sampled counterexample. Zero disables the periodic checks.
    pub oracle_stride: u64,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            sample_limit: 10,
            oracle_stride: 10_000,
        }
    }
}

const BLOCK: u64 = 5u64.pow(5);

fn scan_block(shape: BasicShape, range: Range<u64>, opts: &SearchOptions) -> CounterexampleReport {
    let mut report = CounterexampleReport {
        shape,
        scanned: 0,
        counterexamples: 0,
        samples: Vec::new(),
        oracle_checked: 0,
        oracle_disagreements: 0,
    };
    for index in range {
        let inst = build_instance(shape, &choices_from_index(index));
        let stable = has_stable_matching(&inst);
        report.scanned += 1;
        let sampled = !stable && report.samples.len() < opts.sample_limit;
        if sampled || (opts.oracle_stride > 0 && index % opts.oracle_stride == 0) {
            report.oracle_checked += 1;
            if brute_force_stable_exists(&inst) != stable {
                report.oracle_disagreements += 1;
            }
        }
        if !stable {
            report.counterexamples += 1;
            if sampled {
                report.samples.push(Sample {
                    index,
                    instance: inst,
                });
            }
        }
    }
    report
}

/// Scans a sub-range of a shape's indices. Results do not depend on the
/// number of workers.
pub fn scan_range(
    shape: BasicShape,
    range: Range<u64>,
    opts: &SearchOptions,
) -> CounterexampleReport {
    let end = range.end.min(INSTANCES_PER_SHAPE);
    let start = range.start.min(end);
    let blocks: Vec<Range<u64>> = (start..end)
        .step_by(BLOCK as usize)
        .map(|s| s..(s + BLOCK).min(end))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers.max(1))
        .build()
        .expect("thread pool");
    let parts: Vec<CounterexampleReport> = pool.install(|| {
        blocks
            .into_par_iter()
            .map(|r| scan_block(shape, r, opts))
            .collect()
    });
    let empty = scan_block(shape, 0..0, opts);
    parts
        .into_iter()
        .fold(empty, |acc, part| acc.merge(part, opts.sample_limit))
}

pub fn search_counterexamples_with(
    shape: BasicShape,
    opts: &SearchOptions,
) -> CounterexampleReport {
    scan_range(shape, 0..INSTANCES_PER_SHAPE, opts)
}

/// Scans all `5^9` instances of `shape` with default worker count.
pub fn search_counterexamples(shape: BasicShape, sample_limit: usize) -> CounterexampleReport {
    let opts = SearchOptions {
        sample_limit,
        ..SearchOptions::default()
    };
    search_counterexamples_with(shape, &opts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallVerificationReport {
    pub n: usize,
    pub total: u64,
    pub counterexamples: u64,
    /// Instances where the oracle and the maximal-matching search disagree.
    pub oracle_disagreements: u64,
}

impl SmallVerificationReport {
    pub fn all_stable(&self) -> bool {
        self.counterexamples == 0
    }
}

impl fmt::Display for SmallVerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} instances, {} counterexamples",
            self.total, self.counterexamples
        )
    }
}

/// Checks every instance of dimension 1 or 2 for a stable matching.
pub fn verify_small_dimensions(n: usize) -> SmallVerificationReport {
    assert!(
        n == 1 || n == 2,
        "exhaustive verification supports n = 1 or 2"
    );
    let mut report = SmallVerificationReport {
        n,
        total: 0,
        counterexamples: 0,
        oracle_disagreements: 0,
    };
    for inst in AllInstances::new(n) {
        report.total += 1;
        let stable = has_stable_matching(&inst);
        if !stable {
            report.counterexamples += 1;
        }
        if brute_force_stable_exists(&inst) != stable {
            report.oracle_disagreements += 1;
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basic::{basic_subgraph, classify_basic_shape, ShapeClass};
    use crate::builtin;

    #[test]
    fn index_round_trip() {
        for idx in [0, 1, 4, 5, 1234567, INSTANCES_PER_SHAPE - 1] {
            assert_eq!(index_of_choices(&choices_from_index(idx)), idx);
        }
        assert_eq!(choices_from_index(1)[0], ExtensionChoice::OneExtraFirst);
        assert_eq!(choices_from_index(5)[1], ExtensionChoice::OneExtraFirst);
    }

    #[test]
    fn all_no_extra_is_the_basic_subgraph() {
        for shape in BasicShape::ALL {
            let inst = build_instance(shape, &[ExtensionChoice::NoExtra; 9]);
            assert_eq!(inst.edge_count(), 9);
            let b = basic_subgraph(&inst);
            assert_eq!(
                b.edges(),
                shape
                    .template()
                    .iter()
                    .copied()
                    .enumerate()
                    .collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn full_extension_has_degree_three() {
        let inst = build_instance(
            BasicShape::NineCycle,
            &[ExtensionChoice::TwoExtraFirstSecond; 9],
        );
        assert!(inst.vertices().all(|v| inst.out_degree(v) == 3));
        assert_eq!(
            classify_basic_shape(&basic_subgraph(&inst), 3),
            ShapeClass::Basic(BasicShape::NineCycle)
        );
    }

    #[test]
    fn fig2_and_fig3_are_reachable() {
        let fig2 = builtin::get("fig2").unwrap();
        let c = extension_choices(&fig2, BasicShape::ChainTailBehind).unwrap();
        assert_eq!(build_instance(BasicShape::ChainTailBehind, &c), fig2);
        use ExtensionChoice::*;
        assert_eq!(
            c,
            [
                OneExtraSecond,
                OneExtraFirst,
                NoExtra,
                OneExtraFirst,
                TwoExtraSecondFirst,
                OneExtraFirst,
                NoExtra,
                NoExtra,
                OneExtraSecond
            ]
        );
        let fig3 = builtin::get("fig3").unwrap();
        let c = extension_choices(&fig3, BasicShape::ConsecutiveTails).unwrap();
        assert_eq!(build_instance(BasicShape::ConsecutiveTails, &c), fig3);
        assert!(extension_choices(&fig3, BasicShape::NineCycle).is_none());
    }

    #[test]
    fn small_scan_is_worker_independent() {
        let mut opts = SearchOptions {
            workers: 1,
            sample_limit: 3,
            oracle_stride: 97,
        };
        let a = scan_range(BasicShape::ChainTailBehind, 0..20_000, &opts);
        opts.workers = 4;
        let b = scan_range(BasicShape::ChainTailBehind, 0..20_000, &opts);
        assert_eq!(a, b);
        assert_eq!(a.scanned, 20_000);
        assert_eq!(a.oracle_disagreements, 0);
    }

    #[test]
    fn n1_is_trivial() {
        let r = verify_small_dimensions(1);
        assert_eq!(r.total, 8);
        assert_eq!(r.counterexamples, 0);
        assert_eq!(r.oracle_disagreements, 0);
        assert_eq!(r.to_string(), "8 instances, 0 counterexamples");
    }
}
