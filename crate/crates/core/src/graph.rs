//! Undirected simple graphs on vertices `0..n` with bitset adjacency rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// Simple undirected graph. Immutable once built; every mutating operation
/// returns a new value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Vertex degrees sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Largest degree, or 0 for an empty sequence.
    pub fn d1(&self) -> usize {
        self.degrees.first().copied().unwrap_or(0)
    }

    /// Second largest degree, or 0 when there is no second vertex.
    pub fn d2(&self) -> usize {
        self.degrees.get(1).copied().unwrap_or(0)
    }

    /// Sum of the `k` largest degrees (saturating at the sequence length).
    pub fn top_sum(&self, k: usize) -> usize {
        self.degrees.iter().take(k).sum()
    }

    pub fn total(&self) -> usize {
        self.degrees.iter().sum()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("a graph needs at least one vertex"));
        }
        let words = n.div_ceil(WORD);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    /// Builds a graph from an edge list. Self-loops, out-of-range endpoints
    /// and repeated edges are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            g.insert_checked(a, b)?;
        }
        Ok(g)
    }

    /// Graph whose edges are the set bits of `mask` under [`pair_index`]
    /// ordering. Requires `n <= 11` so every pair fits in 64 bits.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        let pairs = pair_count(n);
        if pairs > 64 {
            return Err(Error::param(format!("mask encoding supports n <= 11, got {n}")));
        }
        if pairs < 64 && mask >> pairs != 0 {
            return Err(Error::param(format!("mask {mask:#x} has bits beyond {pairs} pairs")));
        }
        let mut g = Graph::empty(n)?;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    g.set(i, j);
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_mask`]; `None` when `n > 11`.
    pub fn to_mask(&self) -> Option<u64> {
        if pair_count(self.n) > 64 {
            return None;
        }
        let mut mask = 0u64;
        let mut bit = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        Some(mask)
    }

    pub(crate) fn insert_checked(&mut self, a: usize, b: usize) -> Result<()> {
        if a >= self.n || b >= self.n {
            return Err(Error::param(format!(
                "edge ({a}, {b}) out of range for {} vertices",
                self.n
            )));
        }
        if a == b {
            return Err(Error::param(format!("self-loop at vertex {a}")));
        }
        if self.has_edge(a, b) {
            return Err(Error::param(format!("edge ({a}, {b}) already present")));
        }
        self.set(a, b);
        Ok(())
    }

    fn set(&mut self, a: usize, b: usize) {
        self.rows[a * self.words + b / WORD] |= 1 << (b % WORD);
        self.rows[b * self.words + a / WORD] |= 1 << (a % WORD);
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.row(a)[b / WORD] >> (b % WORD) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::new(self.degrees())
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &bits)| {
            BitIter(bits).map(move |b| w * WORD + b)
        })
    }

    /// Edges `(a, b)` with `a < b`, ordered by `a` then `b`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| self.neighbors(a).filter(move |&b| b > a).map(move |b| (a, b)))
    }

    /// Missing vertex pairs `(a, b)` with `a < b`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| ((a + 1)..self.n).filter(move |&b| !self.has_edge(a, b)).map(move |b| (a, b)))
    }

    /// Returns a copy with the edge `ab` added.
    pub fn add_edge(&self, a: usize, b: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.insert_checked(a, b)?;
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![0u64; self.words];
        let mut frontier = vec![0u64; self.words];
        seen[0] = 1;
        frontier[0] = 1;
        loop {
            let mut next = vec![0u64; self.words];
            for (w, &bits) in frontier.iter().enumerate() {
                for b in BitIter(bits) {
                    for (acc, r) in next.iter_mut().zip(self.row(w * WORD + b)) {
                        *acc |= r;
                    }
                }
            }
            let mut grew = false;
            for (nx, s) in next.iter_mut().zip(seen.iter_mut()) {
                *nx &= !*s;
                *s |= *nx;
                grew |= *nx != 0;
            }
            if !grew {
                break;
            }
            frontier = next;
        }
        seen.iter().map(|w| w.count_ones() as usize).sum::<usize>() == self.n
    }

    /// Two-coloring check by BFS.
    pub fn is_bipartite(&self) -> bool {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(v) = queue.pop_front() {
                let c = color[v].unwrap();
                for w in self.neighbors(v) {
                    match color[w] {
                        None => {
                            color[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::param("permutation length differs from vertex count"));
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::param("not a permutation"));
            }
        }
        let mut g = Graph::empty(self.n)?;
        for (a, b) in self.edges() {
            g.set(perm[a], perm[b]);
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (a, b)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "])")
    }
}

/// Number of unordered vertex pairs on `n` vertices.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bit position of the pair `{i, j}` (`i < j`) in the mask encoding:
/// pairs are ordered column by column, `(0,1), (0,2), (1,2), (0,3), ...`.
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    j * (j - 1) / 2 + i
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::empty(0).is_err());
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(4, &[(0, 3), (2, 1)]).unwrap();
        assert!(g.has_edge(3, 0) && g.has_edge(0, 3));
        assert!(g.has_edge(1, 2) && g.has_edge(2, 1));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn wide_graphs_use_multiple_words() {
        let edges: Vec<_> = (1..130).map(|v| (0, v)).collect();
        let g = Graph::from_edges(130, &edges).unwrap();
        assert_eq!(g.degree(0), 129);
        assert_eq!(g.neighbors(0).last(), Some(129));
        assert!(g.is_connected());
        assert_eq!(g.edge_count(), 129);
    }

    #[test]
    fn connectivity() {
        assert!(!Graph::empty(2).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        let p = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(p.is_connected());
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
    }

    #[test]
    fn mask_round_trip_and_ordering() {
        assert_eq!(pair_index(0, 1), 0);
        assert_eq!(pair_index(0, 2), 1);
        assert_eq!(pair_index(2, 1), 2);
        assert_eq!(pair_index(0, 3), 3);
        for mask in 0..64u64 {
            let g = Graph::from_mask(4, mask).unwrap();
            assert_eq!(g.to_mask(), Some(mask));
        }
        assert!(Graph::from_mask(3, 8).is_err());
    }

    #[test]
    fn add_edge_leaves_original_untouched() {
        let g = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let h = g.add_edge(1, 2).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(h.edge_count(), 3);
        assert!(g.add_edge(0, 1).is_err());
        assert!(g.add_edge(2, 2).is_err());
    }

    #[test]
    fn bipartite_detection() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(c4.is_bipartite());
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!k3.is_bipartite());
    }

    #[test]
    fn permute_preserves_degree_sequence() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let h = g.permute(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h.degree(3), 3);
        assert_eq!(g.degree_sequence(), h.degree_sequence());
        assert!(g.permute(&[0, 0, 1, 2]).is_err());
    }
}
