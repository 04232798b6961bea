//! Instances of the three-gender cyclic matching problem.
//!
//! Vertices are numbered `0..3n` and the gender of a vertex is its id modulo 3.
//! Every preference edge goes from gender `g` to gender `(g + 1) mod 3`, so the
//! preference graph is a directed graph whose cycles all have length divisible
//! by three. Ranks are positional: the first entry of a list has rank 1.

use std::fmt;

use thiserror::Error;

/// Number of genders in the classic cyclic problem.
pub const GENDERS: usize = 3;

/// A vertex of the preference graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }

    pub fn gender(self) -> usize {
        self.0 % GENDERS
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<usize> for VertexId {
    fn from(v: usize) -> Self {
        VertexId(v)
    }
}

/// One broken invariant of a preference table.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("expected {expected} preference lists, found {found}")]
    ListCount { expected: usize, found: usize },
    #[error("vertex {vertex}: target {target} is out of range")]
    TargetOutOfRange { vertex: usize, target: usize },
    #[error("vertex {vertex}: edge to {target} does not go to the next gender")]
    WrongGender { vertex: usize, target: usize },
    #[error("vertex {vertex}: target {target} listed more than once")]
    DuplicateTarget { vertex: usize, target: usize },
    #[error("vertex {vertex}: list of length {len} exceeds dimension {n}")]
    ListTooLong { vertex: usize, len: usize, n: usize },
}

/// Result of [`validate`]; empty iff the table is a valid instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
#[error("invalid instance: {report}")]
pub struct InvalidInstance {
    pub report: ValidationReport,
}

/// Preference graph with per-vertex ordered lists.
///
/// Values built through [`Instance::new`] always satisfy the instance
/// invariants. [`Instance::new_unchecked`] exists so that broken tables can be
/// inspected with [`validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Instance {
    n: usize,
    prefs: Vec<Vec<VertexId>>,
}

impl Instance {
    pub fn new(n: usize, prefs: Vec<Vec<VertexId>>) -> Result<Self, InvalidInstance> {
        let inst = Instance { n, prefs };
        let report = validate(&inst);
        if report.is_valid() {
            Ok(inst)
        } else {
            Err(InvalidInstance { report })
        }
    }

    pub fn new_unchecked(n: usize, prefs: Vec<Vec<VertexId>>) -> Self {
        Instance { n, prefs }
    }

    /// Builds an instance from plain integer lists, one per vertex.
    pub fn from_lists(n: usize, lists: &[&[usize]]) -> Result<Self, InvalidInstance> {
        let mut prefs = vec![Vec::new(); GENDERS * n];
        for (v, list) in lists.iter().enumerate() {
            if v < prefs.len() {
                prefs[v] = list.iter().map(|&t| VertexId(t)).collect();
            } else {
                prefs.push(list.iter().map(|&t| VertexId(t)).collect());
            }
        }
        Instance::new(n, prefs)
    }

    /// An instance of dimension `n` without edges.
    pub fn empty(n: usize) -> Self {
        Instance {
            n,
            prefs: vec![Vec::new(); GENDERS * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.prefs.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.prefs.len()).map(VertexId)
    }

    /// Vertices of one gender in increasing id order.
    pub fn gender_class(&self, gender: usize) -> impl Iterator<Item = VertexId> {
        (gender..self.prefs.len()).step_by(GENDERS).map(VertexId)
    }

    pub fn prefs(&self, v: VertexId) -> &[VertexId] {
        &self.prefs[v.0]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.prefs[v.0].len()
    }

    /// Rank of the edge `v -> target`, if present.
    pub fn rank(&self, v: VertexId, target: VertexId) -> Option<u32> {
        self.prefs[v.0]
            .iter()
            .position(|&t| t == target)
            .map(|p| p as u32 + 1)
    }

    pub fn has_edge(&self, v: VertexId, target: VertexId) -> bool {
        self.prefs[v.0].contains(&target)
    }

    /// All edges as `(source, target, rank)` in source order, then rank order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, u32)> + '_ {
        self.prefs.iter().enumerate().flat_map(|(v, list)| {
            list.iter()
                .enumerate()
                .map(move |(r, &t)| (VertexId(v), t, r as u32 + 1))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.prefs.iter().map(Vec::len).sum()
    }

    /// Returns a copy with `target` appended to the end of `v`'s list.
    pub fn with_edge(&self, v: VertexId, target: VertexId) -> Result<Self, InvalidInstance> {
        let mut prefs = self.prefs.clone();
        prefs[v.0].push(target);
        Instance::new(self.n, prefs)
    }

    /// Returns a copy with `v`'s list replaced.
    pub fn with_list(&self, v: VertexId, list: Vec<VertexId>) -> Result<Self, InvalidInstance> {
        let mut prefs = self.prefs.clone();
        prefs[v.0] = list;
        Instance::new(self.n, prefs)
    }

    /// Embeds the instance into a larger dimension; new vertices get empty lists.
    pub fn padded(&self, n: usize) -> Self {
        assert!(n >= self.n, "cannot shrink an instance");
        let mut prefs = self.prefs.clone();
        prefs.resize(GENDERS * n, Vec::new());
        Instance { n, prefs }
    }

    /// Applies a vertex relabeling. `map[v]` is the new id of vertex `v`.
    pub fn relabel(&self, map: &[usize]) -> Result<Self, InvalidInstance> {
        let mut prefs = vec![Vec::new(); self.prefs.len()];
        for (v, list) in self.prefs.iter().enumerate() {
            prefs[map[v]] = list.iter().map(|t| VertexId(map[t.0])).collect();
        }
        Instance::new(self.n, prefs)
    }

    pub(crate) fn lists(&self) -> &[Vec<VertexId>] {
        &self.prefs
    }
}

impl fmt::Display for Instance {
    /// Serializes in the line-oriented instance file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "3dsmi {}", self.n)?;
        for (v, list) in self.prefs.iter().enumerate() {
            if list.is_empty() {
                continue;
            }
            write!(f, "{v}:")?;
            for t in list {
                write!(f, " {t}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Lists every invariant violation of `inst`.
pub fn validate(inst: &Instance) -> ValidationReport {
    let mut violations = Vec::new();
    let n = inst.n;
    if n == 0 {
        violations.push(Violation::ZeroDimension);
    }
    let expected = GENDERS * n;
    if inst.prefs.len() != expected {
        violations.push(Violation::ListCount {
            expected,
            found: inst.prefs.len(),
        });
    }
    let count = inst.prefs.len();
    for (v, list) in inst.prefs.iter().enumerate() {
        if list.len() > n {
            violations.push(Violation::ListTooLong {
                vertex: v,
                len: list.len(),
                n,
            });
        }
        for (i, &t) in list.iter().enumerate() {
            if t.0 >= count {
                violations.push(Violation::TargetOutOfRange {
                    vertex: v,
                    target: t.0,
                });
                continue;
            }
            if t.gender() != (v + 1) % GENDERS {
                violations.push(Violation::WrongGender {
                    vertex: v,
                    target: t.0,
                });
            }
            if list[..i].contains(&t) {
                violations.push(Violation::DuplicateTarget {
                    vertex: v,
                    target: t.0,
                });
            }
        }
    }
    ValidationReport { violations }
}
