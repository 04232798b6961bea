//! Matching search over a fixed table of cycles ("families") of any arity.
//!
//! Families are stored flat: their members, the rank of each member's edge to
//! the next member, and a vertex bitset. A matching is a list of family indices.
//! Both the three-gender solver and the k-gender solver run on this table.

use std::ops::ControlFlow;

use crate::stability::ExtendedRank;

pub(crate) struct FamilyTable {
    arity: usize,
    vertex_count: usize,
    words: usize,
    members: Vec<usize>,
    ranks: Vec<u32>,
    masks: Vec<u64>,
}

impl FamilyTable {
    pub fn new(arity: usize, vertex_count: usize) -> Self {
        FamilyTable {
            arity,
            vertex_count,
            words: vertex_count.div_ceil(64).max(1),
            members: Vec::new(),
            ranks: Vec::new(),
            masks: Vec::new(),
        }
    }

    /// Adds a family. `ranks[i]` is the rank of `members[i] -> members[i + 1]`.
    pub fn push(&mut self, members: &[usize], ranks: &[u32]) {
        debug_assert_eq!(members.len(), self.arity);
        debug_assert_eq!(ranks.len(), self.arity);
        self.members.extend_from_slice(members);
        self.ranks.extend_from_slice(ranks);
        let start = self.masks.len();
        self.masks.resize(start + self.words, 0);
        for &v in members {
            self.masks[start + v / 64] |= 1 << (v % 64);
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len() / self.arity
    }

    pub fn members(&self, f: usize) -> &[usize] {
        &self.members[f * self.arity..(f + 1) * self.arity]
    }

    fn ranks(&self, f: usize) -> &[u32] {
        &self.ranks[f * self.arity..(f + 1) * self.arity]
    }

    fn mask(&self, f: usize) -> &[u64] {
        &self.masks[f * self.words..(f + 1) * self.words]
    }

    fn free_in(&self, f: usize, used: &[u64]) -> bool {
        self.mask(f).iter().zip(used).all(|(a, b)| a & b == 0)
    }

    fn intersects(&self, f: usize, g: usize) -> bool {
        self.mask(f)
            .iter()
            .zip(self.mask(g))
            .any(|(a, b)| a & b != 0)
    }

    fn toggle(&self, f: usize, used: &mut [u64]) {
        for (u, m) in used.iter_mut().zip(self.mask(f)) {
            *u ^= m;
        }
    }

    /// Extended rank of every vertex under `matching`.
    pub fn extended_ranks(&self, matching: &[usize], out: &mut Vec<ExtendedRank>) {
        out.clear();
        out.resize(self.vertex_count, ExtendedRank::Unmatched);
        for &f in matching {
            for (&v, &r) in self.members(f).iter().zip(self.ranks(f)) {
                out[v] = ExtendedRank::Finite(r);
            }
        }
    }

    /// Whether family `f` blocks a matching with the given extended ranks.
    pub fn blocks(&self, f: usize, ext: &[ExtendedRank]) -> bool {
        self.members(f)
            .iter()
            .zip(self.ranks(f))
            .all(|(&v, &r)| ExtendedRank::Finite(r) < ext[v])
    }

    fn first_blocking(&self, ext: &[ExtendedRank]) -> Option<usize> {
        (0..self.len()).find(|&f| self.blocks(f, ext))
    }

    /// Visits every maximal (uncompletable) matching exactly once.
    ///
    /// Depth-first over families in table order, including a free family
    /// before excluding it. Excluding a free family is only explored when a
    /// later family could still cover one of its vertices, since otherwise the
    /// result cannot be maximal.
    pub fn for_each_maximal<B>(
        &self,
        mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let mut chosen = Vec::new();
        let mut used = vec![0u64; self.words];
        self.maximal_rec(0, &mut chosen, &mut used, &mut visit)
    }

    fn maximal_rec<B>(
        &self,
        i: usize,
        chosen: &mut Vec<usize>,
        used: &mut [u64],
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if i == self.len() {
            if (0..self.len()).all(|f| !self.free_in(f, used)) {
                return visit(chosen);
            }
            return ControlFlow::Continue(());
        }
        if !self.free_in(i, used) {
            return self.maximal_rec(i + 1, chosen, used, visit);
        }
        self.toggle(i, used);
        chosen.push(i);
        self.maximal_rec(i + 1, chosen, used, visit)?;
        chosen.pop();
        self.toggle(i, used);
        let coverable = (i + 1..self.len()).any(|g| self.free_in(g, used) && self.intersects(i, g));
        if coverable {
            self.maximal_rec(i + 1, chosen, used, visit)?;
        }
        ControlFlow::Continue(())
    }

    pub fn maximal_matchings(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let _ = self.for_each_maximal::<()>(|m| {
            out.push(m.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    /// First maximal matching, in enumeration order, with no blocking family.
    pub fn first_stable(&self) -> Option<Vec<usize>> {
        let mut ext = Vec::with_capacity(self.vertex_count);
        match self.for_each_maximal(|m| {
            self.extended_ranks(m, &mut ext);
            if self.first_blocking(&ext).is_none() {
                ControlFlow::Break(m.to_vec())
            } else {
                ControlFlow::Continue(())
            }
        }) {
            ControlFlow::Break(m) => Some(m),
            ControlFlow::Continue(()) => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(families: &[[usize; 3]]) -> FamilyTable {
        let mut t = FamilyTable::new(3, 9);
        for f in families {
            t.push(f, &[1, 1, 1]);
        }
        t
    }

    #[test]
    fn empty_table_has_empty_matching() {
        let t = table(&[]);
        assert_eq!(t.maximal_matchings(), vec![Vec::<usize>::new()]);
        assert_eq!(t.first_stable(), Some(vec![]));
    }

    #[test]
    fn maximal_matchings_of_a_path() {
        let t = table(&[[0, 1, 2], [2, 4, 5], [3, 7, 8]]);
        let mut got = t.maximal_matchings();
        got.sort();
        assert_eq!(got, vec![vec![0, 2], vec![1, 2]]);
        // f0 - f1 - f2 overlap in a chain: maximal sets are {0,2} and {1}.
        let t = table(&[[0, 1, 2], [2, 4, 5], [5, 7, 6]]);
        let mut got = t.maximal_matchings();
        got.sort();
        assert_eq!(got, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn wide_vertex_sets() {
        let mut t = FamilyTable::new(3, 200);
        t.push(&[0, 100, 199], &[1, 1, 1]);
        t.push(&[3, 100, 150], &[1, 1, 1]);
        let mut got = t.maximal_matchings();
        got.sort();
        assert_eq!(got, vec![vec![0], vec![1]]);
    }
}
