#![allow(dead_code)]

use proptest::prelude::*;
use regindep::Graph;

/// Random simple graph on up to `max_n` vertices, edges kept with probability `p`.
pub fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), prop::collection::vec(any::<bool>(), pairs))
    })
    .prop_map(|(n, bits)| {
        let mut edges = Vec::new();
        let mut it = bits.into_iter();
        for u in 0..n {
            for v in u + 1..n {
                if it.next().unwrap() {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, edges).unwrap()
    })
}

/// Adjacency as plain vectors, rebuilt from the edge list.
fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; g.n()]; g.n()];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Largest `k`-independent subset of each degree class by trying every subset.
pub fn brute_alpha_kreg(g: &Graph, k: usize) -> usize {
    let adj = adjacency(g);
    let deg: Vec<usize> = adj.iter().map(|r| r.iter().filter(|&&b| b).count()).collect();
    let mut best = 0;
    for j in 0..g.n() {
        let class: Vec<usize> = (0..g.n()).filter(|&v| deg[v] == j).collect();
        for mask in 0u32..(1 << class.len()) {
            let s: Vec<usize> = (0..class.len()).filter(|i| mask >> i & 1 == 1).map(|i| class[i]).collect();
            let ok = s.iter().all(|&v| s.iter().filter(|&&u| adj[u][v]).count() <= k);
            if ok {
                best = best.max(s.len());
            }
        }
    }
    best
}

/// Largest `k`-independent subset of the whole vertex set.
pub fn brute_alpha_k(g: &Graph, k: usize) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    (0u32..(1 << n))
        .filter(|mask| {
            (0..n)
                .filter(|v| mask >> v & 1 == 1)
                .all(|v| (0..n).filter(|&u| mask >> u & 1 == 1 && adj[u][v]).count() <= k)
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}
