//! The k-gender cyclic problem and the subdivision construction.
//!
//! With `k` genders, vertex `v` has gender `v mod k` and edges go from gender
//! `g` to `g + 1 mod k`. A family is a directed k-cycle. Subdividing every
//! outgoing edge of one gender class of a 3-gender instance into a chain of
//! `k - 3` fresh single-successor vertices produces a k-gender instance whose
//! families, blocking families and stable matchings correspond one-to-one to
//! those of the original.

use std::fmt;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::engine::FamilyTable;
use crate::instance::{Instance, VertexId, GENDERS};
use crate::parse::{kdsmi_lines, parse_body, parse_header, ParseError};
use crate::stability::{ExtendedRank, Family};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KgenError {
    #[error("number of genders must be at least 3, got {0}")]
    TooFewGenders(usize),
    #[error("gender {0} does not exist in a 3-gender instance")]
    InvalidGender(usize),
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("expected {expected} preference lists, found {found}")]
    ListCount { expected: usize, found: usize },
    #[error("vertex {vertex}: invalid target {target}")]
    InvalidEdge { vertex: usize, target: usize },
    #[error("vertex {vertex}: list longer than dimension")]
    ListTooLong { vertex: usize },
}

/// A k-gender instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KInstance {
    k: usize,
    n: usize,
    prefs: Vec<Vec<VertexId>>,
}

impl KInstance {
    pub fn new(k: usize, n: usize, prefs: Vec<Vec<VertexId>>) -> Result<Self, KgenError> {
        if k < 3 {
            return Err(KgenError::TooFewGenders(k));
        }
        if n == 0 {
            return Err(KgenError::ZeroDimension);
        }
        if prefs.len() != k * n {
            return Err(KgenError::ListCount {
                expected: k * n,
                found: prefs.len(),
            });
        }
        for (v, list) in prefs.iter().enumerate() {
            if list.len() > n {
                return Err(KgenError::ListTooLong { vertex: v });
            }
            for (i, t) in list.iter().enumerate() {
                if t.0 >= k * n || t.0 % k != (v + 1) % k || list[..i].contains(t) {
                    return Err(KgenError::InvalidEdge {
                        vertex: v,
                        target: t.0,
                    });
                }
            }
        }
        Ok(KInstance { k, n, prefs })
    }

    /// The same preference graph seen as a k = 3 instance.
    pub fn from_instance(inst: &Instance) -> Self {
        KInstance {
            k: GENDERS,
            n: inst.n(),
            prefs: inst.lists().to_vec(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.prefs.len()
    }

    pub fn gender(&self, v: VertexId) -> usize {
        v.0 % self.k
    }

    pub fn prefs(&self, v: VertexId) -> &[VertexId] {
        &self.prefs[v.0]
    }

    pub fn rank(&self, v: VertexId, target: VertexId) -> Option<u32> {
        self.prefs[v.0]
            .iter()
            .position(|&t| t == target)
            .map(|p| p as u32 + 1)
    }

    pub fn edge_count(&self) -> usize {
        self.prefs.iter().map(Vec::len).sum()
    }
}

impl fmt::Display for KInstance {
    /// `kdsmi <k> <n>` followed by the 3-gender body format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kdsmi {} {}", self.k, self.n)?;
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

pub fn parse_kinstance(text: &str) -> Result<KInstance, ParseError> {
    let mut lines = kdsmi_lines(text);
    let header = parse_header(&mut lines, "kdsmi", 2)?;
    let (k, n) = (header[0], header[1]);
    if k < 3 {
        return Err(ParseError {
            line: 1,
            column: 1,
            kind: crate::parse::ParseErrorKind::BadHeader("k must be at least 3".into()),
        });
    }
    let prefs = parse_body(lines, k, n)?;
    Ok(KInstance::new(k, n, prefs).expect("parser enforces every instance invariant"))
}

/// A directed k-cycle with one vertex per gender, gender-0 member first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KFamily(Vec<VertexId>);

impl KFamily {
    pub fn members(&self) -> &[VertexId] {
        &self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }
}

impl fmt::Display for KFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All k-cycles of `ki`, sorted.
pub fn k_enumerate_families(ki: &KInstance) -> Vec<KFamily> {
    fn extend(ki: &KInstance, path: &mut Vec<VertexId>, out: &mut Vec<KFamily>) {
        let last = *path.last().unwrap();
        if path.len() == ki.k {
            if ki.prefs(last).contains(&path[0]) {
                out.push(KFamily(path.clone()));
            }
            return;
        }
        for &t in ki.prefs(last) {
            path.push(t);
            extend(ki, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    for v in (0..ki.vertex_count()).step_by(ki.k) {
        extend(ki, &mut vec![VertexId(v)], &mut out);
    }
    out.sort();
    out
}

fn k_table(ki: &KInstance, families: &[KFamily]) -> FamilyTable {
    let mut table = FamilyTable::new(ki.k, ki.vertex_count());
    let mut members = Vec::with_capacity(ki.k);
    let mut ranks = Vec::with_capacity(ki.k);
    for fam in families {
        members.clear();
        ranks.clear();
        for (i, &v) in fam.0.iter().enumerate() {
            let next = fam.0[(i + 1) % ki.k];
            members.push(v.0);
            ranks.push(ki.rank(v, next).expect("family edge exists"));
        }
        table.push(&members, &ranks);
    }
    table
}

/// Disjoint k-families, sorted.
pub type KMatching = Vec<KFamily>;

/// Every k-cycle whose members all strictly improve on their extended rank.
pub fn k_find_blocking(ki: &KInstance, matching: &[KFamily]) -> Vec<KFamily> {
    let mut ext = vec![ExtendedRank::Unmatched; ki.vertex_count()];
    for fam in matching {
        for (i, &v) in fam.0.iter().enumerate() {
            let next = fam.0[(i + 1) % ki.k];
            ext[v.0] = ExtendedRank::Finite(ki.rank(v, next).expect("family edge exists"));
        }
    }
    k_enumerate_families(ki)
        .into_iter()
        .filter(|fam| {
            fam.0.iter().enumerate().all(|(i, &v)| {
                let r = ki.rank(v, fam.0[(i + 1) % ki.k]).unwrap();
                ExtendedRank::Finite(r) < ext[v.0]
            })
        })
        .collect()
}

pub fn k_enumerate_maximal_matchings(ki: &KInstance) -> Vec<KMatching> {
    let families = k_enumerate_families(ki);
    let table = k_table(ki, &families);
    let mut out = Vec::new();
    let _ = table.for_each_maximal::<()>(|m| {
        out.push(m.iter().map(|&i| families[i].clone()).collect());
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

/// A stable k-matching if one exists, found among maximal matchings.
pub fn k_find_stable_matching(ki: &KInstance) -> Option<KMatching> {
    let families = k_enumerate_families(ki);
    k_table(ki, &families)
        .first_stable()
        .map(|m| m.into_iter().map(|i| families[i].clone()).collect())
}

/// Result of [`subdivide`]: the k-gender instance and where its vertices
/// came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub instance: KInstance,
    /// Original vertex for each new id; `None` for chain and padding vertices.
    pub origin: Vec<Option<VertexId>>,
    pub subdivided_gender: usize,
}

impl Subdivision {
    pub fn into_instance(self) -> KInstance {
        self.instance
    }

    /// The original family obtained by deleting chain vertices.
    pub fn project(&self, fam: &KFamily) -> Option<Family> {
        let kept: Vec<usize> = fam
            .members()
            .iter()
            .filter_map(|v| self.origin[v.0].map(VertexId::index))
            .collect();
        match kept.as_slice() {
            &[a, b, c] => Family::from_cycle([a, b, c]),
            _ => None,
        }
    }
}

/// The gender class with the fewest outgoing edges (lowest index on ties).
pub fn default_subdivided_gender(inst: &Instance) -> usize {
    (0..GENDERS)
        .min_by_key(|&g| {
            inst.gender_class(g)
                .map(|v| inst.out_degree(v))
                .sum::<usize>()
        })
        .unwrap()
}

/// Replaces each outgoing edge of gender `gender` by a chain with `k - 3`
/// intermediate vertices.
///
/// Old gender `g` becomes new gender `g` if `g <= gender` and `g + k - 3`
/// otherwise; chain vertices take genders `gender + 1 ..= gender + k - 3`.
/// Old vertices keep their position within their class. Chains are allocated
/// in order of source vertex, then rank. Classes are padded with isolated
/// vertices to the largest class size.
pub fn subdivide(inst: &Instance, k: usize, gender: usize) -> Result<Subdivision, KgenError> {
    if k < 3 {
        return Err(KgenError::TooFewGenders(k));
    }
    if gender >= GENDERS {
        return Err(KgenError::InvalidGender(gender));
    }
    let extra = k - GENDERS;
    let new_gender = |g: usize| if g <= gender { g } else { g + extra };
    let n = inst.n();
    let chains: Vec<(VertexId, VertexId)> = inst
        .gender_class(gender)
        .flat_map(|v| inst.prefs(v).iter().map(move |&t| (v, t)))
        .collect();
    let n_new = if extra == 0 { n } else { n.max(chains.len()) };
    let id = |g: usize, pos: usize| pos * k + g;
    let old_id = |v: VertexId| id(new_gender(v.gender()), v.0 / GENDERS);

    let mut prefs = vec![Vec::new(); k * n_new];
    let mut origin = vec![None; k * n_new];
    for v in inst.vertices() {
        origin[old_id(v)] = Some(v);
        if v.gender() != gender || extra == 0 {
            prefs[old_id(v)] = inst.prefs(v).iter().map(|&t| VertexId(old_id(t))).collect();
        }
    }
    if extra > 0 {
        for (c, &(v, t)) in chains.iter().enumerate() {
            let chain: Vec<usize> = (1..=extra).map(|j| id(gender + j, c)).collect();
            prefs[old_id(v)].push(VertexId(chain[0]));
            for w in chain.windows(2) {
                prefs[w[0]] = vec![VertexId(w[1])];
            }
            prefs[*chain.last().unwrap()] = vec![VertexId(old_id(t))];
        }
    }
    let instance = KInstance::new(k, n_new, prefs).expect("subdivision keeps edges cyclic");
    Ok(Subdivision {
        instance,
        origin,
        subdivided_gender: gender,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::stability::enumerate_families;

    #[test]
    fn k3_is_identity() {
        let fig2 = builtin::get("fig2").unwrap();
        for g in 0..3 {
            let s = subdivide(&fig2, 3, g).unwrap();
            assert_eq!(s.instance, KInstance::from_instance(&fig2));
        }
    }

    #[test]
    fn errors() {
        let fig2 = builtin::get("fig2").unwrap();
        assert_eq!(subdivide(&fig2, 4, 3), Err(KgenError::InvalidGender(3)));
        assert_eq!(subdivide(&fig2, 2, 0), Err(KgenError::TooFewGenders(2)));
    }

    #[test]
    fn fig2_default_gender_gives_dimension_five() {
        let fig2 = builtin::get("fig2").unwrap();
        let g = default_subdivided_gender(&fig2);
        assert_eq!(g, 0);
        let s = subdivide(&fig2, 4, g).unwrap();
        assert_eq!(s.instance.n(), 5);
        assert_eq!(s.instance.k(), 4);
        // each of the 5 chains adds exactly one edge
        assert_eq!(s.instance.edge_count(), 16 + 5);
    }

    #[test]
    fn family_counts_match() {
        let fig2 = builtin::get("fig2").unwrap();
        for g in 0..3 {
            let s = subdivide(&fig2, 5, g).unwrap();
            let fams = k_enumerate_families(&s.instance);
            assert_eq!(fams.len(), 7);
            let mut projected: Vec<Family> = fams.iter().map(|f| s.project(f).unwrap()).collect();
            projected.sort();
            assert_eq!(projected, enumerate_families(&fig2));
        }
    }

    #[test]
    fn k3_matches_three_gender_enumeration() {
        let fig3 = builtin::get("fig3").unwrap();
        let ki = KInstance::from_instance(&fig3);
        let got: Vec<Vec<VertexId>> = k_enumerate_families(&ki).into_iter().map(|f| f.0).collect();
        let want: Vec<Vec<VertexId>> = enumerate_families(&fig3)
            .into_iter()
            .map(|f| f.members().to_vec())
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn single_k_cycle() {
        let prefs = (0..5).map(|v| vec![VertexId((v + 1) % 5)]).collect();
        let ki = KInstance::new(5, 1, prefs).unwrap();
        let m = k_find_stable_matching(&ki).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].members().len(), 5);
    }

    #[test]
    fn edgeless() {
        let ki = KInstance::new(4, 2, vec![Vec::new(); 8]).unwrap();
        assert!(k_enumerate_families(&ki).is_empty());
        assert_eq!(k_find_stable_matching(&ki), Some(vec![]));
    }

    #[test]
    fn kdsmi_round_trip() {
        let fig2 = builtin::get("fig2").unwrap();
        let ki = subdivide(&fig2, 4, 0).unwrap().instance;
        assert_eq!(parse_kinstance(&ki.to_string()).unwrap(), ki);
        assert!(ki.to_string().starts_with("kdsmi 4 5\n"));
    }

    #[test]
    fn invalid_kinstance() {
        assert!(matches!(
            KInstance::new(4, 1, vec![vec![VertexId(2)], vec![], vec![], vec![]]),
            Err(KgenError::InvalidEdge {
                vertex: 0,
                target: 2
            })
        ));
        assert!(parse_kinstance("kdsmi 4 1\n0: 2\n").is_err());
    }
}
