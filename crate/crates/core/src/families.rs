//! Named graphs and the two-hub families.
//!
//! `H(p,r,s)`: hubs `u` and `v` (not adjacent) share `p` common neighbours
//! of degree two, `u` carries `r` pendant vertices and `v` carries `s`.
//! `G(p,r,s)` is `H(p,r,s)` plus the edge `uv`.
//!
//! Vertex labels are fixed: `u = 0`, `v = 1`, middles `2..p+2`, then the
//! pendants of `u`, then the pendants of `v`. The quotient module relies on
//! this block order.

use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub p: usize,
    pub r: usize,
    pub s: usize,
}

impl FamilyParams {
    pub const fn new(p: usize, r: usize, s: usize) -> Self {
        FamilyParams { p, r, s }
    }

    /// Vertex count of the constructed graph.
    pub fn order(&self) -> usize {
        self.p + self.r + self.s + 2
    }

    pub fn u(&self) -> usize {
        0
    }

    pub fn v(&self) -> usize {
        1
    }

    pub fn middles(&self) -> Range<usize> {
        2..2 + self.p
    }

    pub fn u_pendants(&self) -> Range<usize> {
        let start = 2 + self.p;
        start..start + self.r
    }

    pub fn v_pendants(&self) -> Range<usize> {
        let start = 2 + self.p + self.r;
        start..start + self.s
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.r, self.s)
    }
}

/// Star `S_n`: vertex 0 joined to every other vertex.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::param(format!("star needs n >= 2, got {n}")));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("complete graph needs n >= 1"));
    }
    let edges: Vec<_> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::param("path needs n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{n1,n2}` with `n1 >= n2 >= 1`; the first `n1` vertices form one side.
pub fn complete_bipartite(n1: usize, n2: usize) -> Result<Graph> {
    if n2 < 1 || n1 < n2 {
        return Err(Error::param(format!(
            "complete bipartite needs n1 >= n2 >= 1, got ({n1}, {n2})"
        )));
    }
    let edges: Vec<_> = (0..n1).flat_map(|a| (n1..n1 + n2).map(move |b| (a, b))).collect();
    Graph::from_edges(n1 + n2, &edges)
}

/// `S_n^+`: the star `S_n` plus the edge between leaves 1 and 2.
pub fn star_plus_edge(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::param(format!("star plus edge needs n >= 4, got {n}")));
    }
    star(n)?.add_edge(1, 2)
}

/// `H(p,r,s)`. Errors with [`Error::Disconnected`] when `p = 0`.
pub fn family_h(params: FamilyParams) -> Result<Graph> {
    family_h_with(params, false)
}

/// `H(p,r,s)`, optionally permitting the disconnected `p = 0` case.
pub fn family_h_with(params: FamilyParams, allow_disconnected: bool) -> Result<Graph> {
    if params.p == 0 && !allow_disconnected {
        return Err(Error::Disconnected(format!(
            "H{params} has no common neighbour of u and v"
        )));
    }
    let mut edges = Vec::with_capacity(2 * params.p + params.r + params.s);
    for m in params.middles() {
        edges.push((params.u(), m));
        edges.push((params.v(), m));
    }
    edges.extend(params.u_pendants().map(|x| (params.u(), x)));
    edges.extend(params.v_pendants().map(|x| (params.v(), x)));
    Graph::from_edges(params.order(), &edges)
}

/// `G(p,r,s)`: `H(p,r,s)` plus the edge `uv`.
pub fn family_g(params: FamilyParams) -> Result<Graph> {
    if params.p + params.r + params.s == 0 {
        return Err(Error::param("G(0,0,0) is K_2; at least three vertices are required"));
    }
    family_h_with(params, true)?.add_edge(params.u(), params.v())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degs(g: &Graph) -> Vec<usize> {
        g.degree_sequence().as_slice().to_vec()
    }

    #[test]
    fn stars() {
        assert_eq!(degs(&star(3).unwrap()), vec![2, 1, 1]);
        assert_eq!(degs(&star(5).unwrap()), vec![4, 1, 1, 1, 1]);
        let k2 = star(2).unwrap();
        assert_eq!(k2.edge_count(), 1);
        assert!(star(1).is_err());
    }

    #[test]
    fn standard_constructions() {
        assert_eq!(degs(&complete(3).unwrap()), vec![2, 2, 2]);
        assert_eq!(degs(&path(4).unwrap()), vec![2, 2, 1, 1]);
        let c4 = complete_bipartite(2, 2).unwrap();
        assert_eq!(degs(&c4), vec![2, 2, 2, 2]);
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.is_connected());
        assert_eq!(degs(&complete_bipartite(3, 1).unwrap()), vec![3, 1, 1, 1]);
        assert!(complete_bipartite(1, 2).is_err());
        assert!(complete_bipartite(2, 0).is_err());
        assert!(complete(0).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn star_plus_edge_degrees() {
        assert_eq!(degs(&star_plus_edge(4).unwrap()), vec![3, 2, 2, 1]);
        assert_eq!(degs(&star_plus_edge(5).unwrap()), vec![4, 2, 2, 1, 1]);
        assert!(star_plus_edge(3).is_err());
    }

    #[test]
    fn h_family_special_cases() {
        let s3 = family_h(FamilyParams::new(1, 0, 0)).unwrap();
        assert_eq!(degs(&s3), vec![2, 1, 1]);
        let k23 = family_h(FamilyParams::new(3, 0, 0)).unwrap();
        assert_eq!(degs(&k23), degs(&complete_bipartite(3, 2).unwrap()));
        assert_eq!(k23.edge_count(), 6);
        let p4 = family_h(FamilyParams::new(1, 1, 0)).unwrap();
        assert_eq!(degs(&p4), vec![2, 2, 1, 1]);
        assert!(p4.is_connected());
        assert_eq!(degs(&family_h(FamilyParams::new(2, 1, 0)).unwrap()), vec![3, 2, 2, 2, 1]);
    }

    #[test]
    fn h_family_rejects_p0_unless_permitted() {
        let p = FamilyParams::new(0, 1, 1);
        assert!(matches!(family_h(p), Err(Error::Disconnected(_))));
        let g = family_h_with(p, true).unwrap();
        assert!(!g.is_connected());
    }

    #[test]
    fn g_family_special_cases() {
        let k3 = family_g(FamilyParams::new(1, 0, 0)).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(degs(&k3), vec![2, 2, 2]);
        let s6 = family_g(FamilyParams::new(0, 4, 0)).unwrap();
        assert_eq!(degs(&s6), degs(&star(6).unwrap()));
        let split = family_g(FamilyParams::new(3, 0, 0)).unwrap();
        assert_eq!(degs(&split), vec![4, 4, 2, 2, 2]);
        assert!(family_g(FamilyParams::new(0, 0, 0)).is_err());
    }

    #[test]
    fn labels_follow_block_order() {
        let params = FamilyParams::new(2, 3, 1);
        let g = family_h(params).unwrap();
        assert_eq!(g.degree(0), 5);
        assert_eq!(g.degree(1), 3);
        for m in params.middles() {
            assert_eq!(g.degree(m), 2);
        }
        for x in params.u_pendants() {
            assert!(g.has_edge(0, x));
        }
        for x in params.v_pendants() {
            assert!(g.has_edge(1, x));
        }
        assert!(!g.has_edge(0, 1));
    }
}
