//! Branch and bound for the maximum k-independent set.
//!
//! Vertices are relabeled once into the fixed branching order (degree
//! descending, index ascending), so "next vertex to branch on" is the lowest
//! set bit of the candidate set. The candidate set only ever holds vertices
//! that can join the current set without breaking `Δ(G[S]) <= k`.

use crate::graph::{Graph, VertexSet};

/// A maximum k-independent set together with its size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KIndepSet {
    pub size: usize,
    /// Sorted vertex labels of `g`.
    pub witness: Vec<usize>,
}

/// Maximum `|S|` with `Δ(g[S]) <= k`, with one maximizing set.
pub fn alpha_k(g: &Graph, k: usize) -> KIndepSet {
    let n = g.n();
    if k >= g.max_degree() {
        return KIndepSet {
            size: n,
            witness: (0..n).collect(),
        };
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let h = g.induced_subgraph(&order).expect("order is a permutation");

    let mut s = Search {
        g: &h,
        k,
        inner_deg: vec![0; n],
        members: VertexSet::new(n),
        saturated: VertexSet::new(n),
        stack: Vec::with_capacity(n),
        best: Vec::new(),
    };
    s.run(VertexSet::full(n));

    let mut witness: Vec<usize> = s.best.iter().map(|&i| order[i]).collect();
    witness.sort_unstable();
    KIndepSet {
        size: witness.len(),
        witness,
    }
}

struct Search<'a> {
    g: &'a Graph,
    k: usize,
    /// degree inside the current set, valid for members only
    inner_deg: Vec<usize>,
    members: VertexSet,
    /// members whose inner degree already equals k
    saturated: VertexSet,
    stack: Vec<usize>,
    best: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, cand: VertexSet) {
        if self.stack.len() > self.best.len() {
            self.best = self.stack.clone();
        }
        let Some(v) = cand.first() else { return };
        let have = self.stack.len();
        if have + cand.len() <= self.best.len() || have + self.clique_bound(&cand) <= self.best.len() {
            return;
        }

        // include v
        let touched = self.include(v);
        let mut next = cand.clone();
        next.remove(v);
        self.filter(&mut next);
        self.run(next);
        self.exclude(v, &touched);

        // skip v
        let mut rest = cand;
        rest.remove(v);
        self.run(rest);
    }

    /// Sum over a greedy clique partition of `min(|clique|, k + 1)`.
    fn clique_bound(&self, cand: &VertexSet) -> usize {
        let cap = self.k + 1;
        let mut left = cand.clone();
        let mut bound = 0;
        while let Some(u) = left.first() {
            left.remove(u);
            let mut pool = left.clone();
            pool.intersect_with(self.g.neighbors(u));
            let mut size = 1;
            while let Some(w) = pool.first() {
                left.remove(w);
                pool.remove(w);
                pool.intersect_with(self.g.neighbors(w));
                size += 1;
            }
            bound += size.min(cap);
        }
        bound
    }

    fn include(&mut self, v: usize) -> Vec<usize> {
        let nbrs = self.g.neighbors(v);
        let touched: Vec<usize> = self.stack.iter().copied().filter(|&u| nbrs.contains(u)).collect();
        for &u in &touched {
            self.inner_deg[u] += 1;
            if self.inner_deg[u] == self.k {
                self.saturated.insert(u);
            }
        }
        self.inner_deg[v] = touched.len();
        if touched.len() == self.k {
            self.saturated.insert(v);
        }
        self.members.insert(v);
        self.stack.push(v);
        touched
    }

    fn exclude(&mut self, v: usize, touched: &[usize]) {
        self.stack.pop();
        self.members.remove(v);
        self.saturated.remove(v);
        for &u in touched {
            if self.inner_deg[u] == self.k {
                self.saturated.remove(u);
            }
            self.inner_deg[u] -= 1;
        }
    }

    /// Drops candidates that would exceed the degree cap themselves or push a
    /// saturated member over it.
    fn filter(&self, cand: &mut VertexSet) {
        let doomed: Vec<usize> = cand
            .iter()
            .filter(|&c| {
                let nb = self.g.neighbors(c);
                nb.intersects(&self.saturated) || nb.intersection_len(&self.members) > self.k
            })
            .collect();
        for c in doomed {
            cand.remove(c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_complete, make_cycle, make_path};

    #[test]
    fn cycles() {
        assert_eq!(alpha_k(&make_cycle(7).unwrap(), 1).size, 4);
        assert_eq!(alpha_k(&make_cycle(6).unwrap(), 0).size, 3);
        assert_eq!(alpha_k(&make_cycle(6).unwrap(), 2).size, 6);
    }

    #[test]
    fn complete_and_empty() {
        assert_eq!(alpha_k(&make_complete(6).unwrap(), 2).size, 3);
        assert_eq!(alpha_k(&Graph::empty(0), 0).size, 0);
        assert_eq!(alpha_k(&Graph::empty(4), 0).size, 4);
    }

    #[test]
    fn witness_is_valid() {
        let g = make_path(9).unwrap();
        for k in 0..3 {
            let r = alpha_k(&g, k);
            assert!(g.is_k_independent(&r.witness, k));
            assert_eq!(r.size, r.witness.len());
        }
    }
}
