//! Families, matchings, blocking triples and the stable-matching search.
//!
//! A family is a directed 3-cycle `m -> f -> d -> m` of the preference graph.
//! A matching is a set of vertex-disjoint families. Under a matching every
//! vertex has an extended rank: the rank of its outgoing edge inside its
//! family, or [`ExtendedRank::Unmatched`] when single. A 3-cycle blocks the
//! matching when each of its members strictly improves on its extended rank.
//!
//! Any family disjoint from a matching blocks it (all three members are
//! single), so only maximal matchings can be stable. The search therefore
//! enumerates maximal matchings and checks each for blockers.

use std::fmt;

use thiserror::Error;

use crate::engine::FamilyTable;
use crate::instance::{Instance, VertexId};

/// A directed 3-cycle stored with its gender-0 member first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Family([VertexId; 3]);

impl Family {
    /// Canonicalizes a cycle given in any rotation. Returns `None` unless the
    /// members have genders `g, g+1, g+2` in cyclic order.
    pub fn from_cycle(cycle: [usize; 3]) -> Option<Family> {
        let vs = cycle.map(VertexId);
        if (0..3).any(|i| vs[(i + 1) % 3].gender() != (vs[i].gender() + 1) % 3) {
            return None;
        }
        let start = vs.iter().position(|v| v.gender() == 0)?;
        Some(Family([
            vs[start],
            vs[(start + 1) % 3],
            vs[(start + 2) % 3],
        ]))
    }

    pub fn members(&self) -> [VertexId; 3] {
        self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// The member that `v` points to inside the family.
    pub fn successor(&self, v: VertexId) -> Option<VertexId> {
        let i = self.0.iter().position(|&u| u == v)?;
        Some(self.0[(i + 1) % 3])
    }

    pub fn is_in(&self, inst: &Instance) -> bool {
        let [m, f, d] = self.0;
        [m, f, d].iter().all(|v| v.0 < inst.vertex_count())
            && inst.has_edge(m, f)
            && inst.has_edge(f, d)
            && inst.has_edge(d, m)
    }

    pub fn intersects(&self, other: &Family) -> bool {
        self.0.iter().any(|v| other.contains(*v))
    }

    /// Ranks of the three internal edges, starting at the gender-0 member.
    pub fn ranks(&self, inst: &Instance) -> Option<[u32; 3]> {
        let [m, f, d] = self.0;
        Some([inst.rank(m, f)?, inst.rank(f, d)?, inst.rank(d, m)?])
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}

/// A vertex's rank in a matching; `Unmatched` is worse than every finite rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedRank {
    Finite(u32),
    Unmatched,
}

impl fmt::Display for ExtendedRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRank::Finite(r) => write!(f, "{r}"),
            ExtendedRank::Unmatched => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("{0} is not a 3-cycle of the instance")]
    NotAFamily(Family),
    #[error("vertex {0} belongs to two families")]
    Overlap(VertexId),
}

/// A set of pairwise disjoint families, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    families: Vec<Family>,
}

impl Matching {
    pub fn new(inst: &Instance, families: Vec<Family>) -> Result<Matching, MatchingError> {
        for (i, f) in families.iter().enumerate() {
            if !f.is_in(inst) {
                return Err(MatchingError::NotAFamily(*f));
            }
            for g in &families[..i] {
                if let Some(v) = f.members().into_iter().find(|&v| g.contains(v)) {
                    return Err(MatchingError::Overlap(v));
                }
            }
        }
        Ok(Matching::from_sorted(families))
    }

    /// Builds a matching from cycles written in any rotation.
    pub fn from_cycles(inst: &Instance, cycles: &[[usize; 3]]) -> Result<Matching, MatchingError> {
        let mut families = Vec::with_capacity(cycles.len());
        for &c in cycles {
            let f = Family::from_cycle(c)
                .ok_or_else(|| MatchingError::NotAFamily(Family(c.map(VertexId))))?;
            families.push(f);
        }
        Matching::new(inst, families)
    }

    fn from_sorted(mut families: Vec<Family>) -> Matching {
        families.sort();
        Matching { families }
    }

    pub fn empty() -> Matching {
        Matching::default()
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn len(&self) -> usize {
        self.families.len()
    }

    pub fn is_empty(&self) -> bool {
        self.families.is_empty()
    }

    pub fn family_of(&self, v: VertexId) -> Option<&Family> {
        self.families.iter().find(|f| f.contains(v))
    }

    pub fn covers(&self, v: VertexId) -> bool {
        self.family_of(v).is_some()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, fam) in self.families.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{fam}")?;
        }
        write!(f, "}}")
    }
}

/// All directed 3-cycles of `inst`, canonicalized and sorted.
pub fn enumerate_families(inst: &Instance) -> Vec<Family> {
    let mut out = Vec::new();
    for m in inst.gender_class(0) {
        for &f in inst.prefs(m) {
            for &d in inst.prefs(f) {
                if inst.has_edge(d, m) {
                    out.push(Family([m, f, d]));
                }
            }
        }
    }
    out.sort();
    out
}

pub(crate) fn family_table(inst: &Instance, families: &[Family]) -> FamilyTable {
    let mut table = FamilyTable::new(3, inst.vertex_count());
    for fam in families {
        let ranks = fam.ranks(inst).expect("family edges exist");
        table.push(&fam.members().map(VertexId::index), &ranks);
    }
    table
}

pub fn rank_in_matching(inst: &Instance, m: &Matching, v: VertexId) -> ExtendedRank {
    match m.family_of(v).and_then(|f| f.successor(v)) {
        Some(next) => ExtendedRank::Finite(inst.rank(v, next).expect("matching edge exists")),
        None => ExtendedRank::Unmatched,
    }
}

/// Every 3-cycle blocking `m`, in canonical order. Empty iff `m` is stable.
pub fn find_blocking_triples(inst: &Instance, m: &Matching) -> Vec<Family> {
    let ext: Vec<ExtendedRank> = inst
        .vertices()
        .map(|v| rank_in_matching(inst, m, v))
        .collect();
    enumerate_families(inst)
        .into_iter()
        .filter(|fam| {
            let [a, b, c] = fam.members();
            let [ra, rb, rc] = fam.ranks(inst).expect("family edges exist");
            ExtendedRank::Finite(ra) < ext[a.0]
                && ExtendedRank::Finite(rb) < ext[b.0]
                && ExtendedRank::Finite(rc) < ext[c.0]
        })
        .collect()
}

/// The lexicographically smallest blocking triple, if any.
pub fn first_blocking_triple(inst: &Instance, m: &Matching) -> Option<Family> {
    find_blocking_triples(inst, m).into_iter().next()
}

pub fn is_stable(inst: &Instance, m: &Matching) -> bool {
    find_blocking_triples(inst, m).is_empty()
}

/// All matchings to which no disjoint family can be added, sorted.
pub fn enumerate_maximal_matchings(inst: &Instance) -> Vec<Matching> {
    let families = enumerate_families(inst);
    let table = family_table(inst, &families);
    let mut out: Vec<Matching> = table
        .maximal_matchings()
        .into_iter()
        .map(|idx| Matching::from_sorted(idx.into_iter().map(|i| families[i]).collect()))
        .collect();
    out.sort();
    out
}

/// A stable matching if one exists.
///
/// Maximal matchings are visited depth-first over the sorted family list,
/// taking a family before skipping it; the first one without a blocking
/// triple is returned.
pub fn find_stable_matching(inst: &Instance) -> Option<Matching> {
    let families = enumerate_families(inst);
    let table = family_table(inst, &families);
    table
        .first_stable()
        .map(|idx| Matching::from_sorted(idx.into_iter().map(|i| families[i]).collect()))
}

pub fn has_stable_matching(inst: &Instance) -> bool {
    let families = enumerate_families(inst);
    family_table(inst, &families).first_stable().is_some()
}

/// One maximal matching and its blocking triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateEntry {
    pub matching: Matching,
    pub blockers: Vec<Family>,
}

/// Every maximal matching of an instance with its blockers. When all entries
/// are blocked this certifies that no stable matching exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub entries: Vec<CertificateEntry>,
}

impl Certificate {
    pub fn is_unsolvable(&self) -> bool {
        self.entries.iter().all(|e| !e.blockers.is_empty())
    }
}

pub fn certificate(inst: &Instance) -> Certificate {
    let entries = enumerate_maximal_matchings(inst)
        .into_iter()
        .map(|matching| {
            let blockers = find_blocking_triples(inst, &matching);
            CertificateEntry { matching, blockers }
        })
        .collect();
    Certificate { entries }
}

impl fmt::Display for Certificate {
    /// One line per maximal matching:
    /// `{families} -> BLOCKED by {triples}` or `{families} -> STABLE`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            if e.blockers.is_empty() {
                writeln!(f, "{} -> STABLE", e.matching)?;
            } else {
                let blockers: Vec<String> = e.blockers.iter().map(Family::to_string).collect();
                writeln!(f, "{} -> BLOCKED by {{{}}}", e.matching, blockers.join(","))?;
            }
        }
        Ok(())
    }
}
