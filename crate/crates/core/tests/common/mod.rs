#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specbound::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdos-Renyi graph with edge probability `density`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random spanning tree plus independent extra edges.
pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for idx in 1..n {
        let parent = order[rng.gen_range(0..idx)];
        let v = order[idx];
        edges.push((parent.min(v), parent.max(v)));
    }
    for j in 1..n {
        for i in 0..j {
            if !edges.contains(&(i, j)) && rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// `tr(M^j)` for `j = 1..=count`, exact over integers.
pub fn power_traces(m: &[Vec<i64>], count: usize) -> Vec<i128> {
    let n = m.len();
    let a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut p = a.clone();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        out.push((0..n).map(|i| p[i][i]).sum());
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for k in 0..n {
                if p[i][k] != 0 {
                    for j in 0..n {
                        next[i][j] += p[i][k] * a[k][j];
                    }
                }
            }
        }
        p = next;
    }
    out
}

/// Integer `Q` or `L` matrix of `g`.
pub fn integer_matrix(g: &Graph, signless: bool) -> Vec<Vec<i64>> {
    let n = g.order();
    let mut m = vec![vec![0i64; n]; n];
    for (a, b) in g.edges() {
        let off = if signless { 1 } else { -1 };
        m[a][b] = off;
        m[b][a] = off;
        m[a][a] += 1;
        m[b][b] += 1;
    }
    m
}
