//! Immutable simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is stored as one [`VertexSet`] bitrow per vertex. Everything in
//! the crate works on this type: degree classes, complements, induced
//! subgraphs, line graphs and the text formats in [`graph6`] and [`edgelist`].

mod bitset;
pub mod edgelist;
pub mod graph6;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

pub use bitset::VertexSet;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![VertexSet::new(n); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Rejects self-loops, repeated edges and
    /// endpoints outside `0..n`.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
            g.m += 1;
        }
        Ok(g)
    }

    /// Builds from symmetric bitrows. Callers must guarantee symmetry and no loops.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Self {
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        debug_assert!((0..adj.len()).all(|u| !adj[u].contains(u)));
        debug_assert!((0..adj.len()).all(|u| adj[u].iter().all(|v| adj[v].contains(u))));
        Self { adj, m }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `Some(h)` when every vertex has degree `h`. The empty graph on zero
    /// vertices is reported as 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.min_degree();
        (self.max_degree() == d).then_some(d)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let full = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut row = full.clone();
                row.difference_with(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph::from_rows(adj)
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
            }
            pos[v] = i;
        }
        let k = vertices.len();
        let adj = vertices
            .iter()
            .map(|&v| {
                let mut row = VertexSet::new(k);
                for u in self.adj[v].iter() {
                    if pos[u] != usize::MAX {
                        row.insert(pos[u]);
                    }
                }
                row
            })
            .collect();
        Ok(Graph::from_rows(adj))
    }

    /// `G[D_j(G)]` together with the host labels of its vertices.
    pub fn degree_class_subgraph(&self, degree: usize) -> DegreeClassSubgraph {
        let vertices: Vec<usize> = (0..self.n()).filter(|&v| self.degree(v) == degree).collect();
        let graph = self
            .induced_subgraph(&vertices)
            .expect("class vertices are in range and distinct");
        DegreeClassSubgraph {
            source_degree: degree,
            vertices,
            graph,
        }
    }

    pub fn line_graph(&self) -> LineGraph {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let m = edges.len();
        // incident[v] = indices of edges at v
        let mut incident = vec![VertexSet::new(m); self.n()];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].insert(i);
            incident[v].insert(i);
        }
        let adj = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| {
                let mut row = incident[u].clone();
                row.union_with(&incident[v]);
                row.remove(i);
                row
            })
            .collect();
        LineGraph {
            graph: Graph::from_rows(adj),
            edges,
        }
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for v in self.adj[u].iter() {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.distances_from(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n() {
            for d in self.distances_from(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Does `s` induce a subgraph of maximum degree at most `k`?
    pub fn is_k_independent(&self, s: &[usize], k: usize) -> bool {
        let set = VertexSet::from_vertices(self.n(), s.iter().copied());
        s.iter().all(|&v| self.adj[v].intersection_len(&set) <= k)
    }

    pub fn is_clique(&self, s: &[usize]) -> bool {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn to_graph6(&self) -> String {
        graph6::encode(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

/// Shortest-path diameter; disconnected graphs have [`Diameter::Infinite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl Serialize for Diameter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Diameter::Finite(d) => s.serialize_u64(*d as u64),
            Diameter::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// Partition of the vertex set into degree classes `D_i`.
///
/// Only nonempty classes are stored. For the graph on zero vertices every
/// statistic is 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeProfile {
    pub n: usize,
    pub classes: BTreeMap<usize, Vec<usize>>,
    pub min_degree: usize,
    pub max_degree: usize,
    /// `|D_{>=3}|`
    pub big_degree_count: usize,
    /// Size of the largest degree class.
    pub rep: usize,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..g.n() {
            classes.entry(g.degree(v)).or_default().push(v);
        }
        let min_degree = classes.keys().next().copied().unwrap_or(0);
        let max_degree = classes.keys().next_back().copied().unwrap_or(0);
        let big_degree_count = classes.range(3..).map(|(_, c)| c.len()).sum();
        let rep = classes.values().map(Vec::len).max().unwrap_or(0);
        Self {
            n: g.n(),
            classes,
            min_degree,
            max_degree,
            big_degree_count,
            rep,
        }
    }

    /// `n_i = |D_i|`.
    pub fn count(&self, degree: usize) -> usize {
        self.classes.get(&degree).map_or(0, Vec::len)
    }

    pub fn class(&self, degree: usize) -> &[usize] {
        self.classes.get(&degree).map_or(&[], Vec::as_slice)
    }
}

/// The subgraph induced by one degree class of a host graph.
#[derive(Clone, Debug)]
pub struct DegreeClassSubgraph {
    pub source_degree: usize,
    /// Host labels; vertex `i` of `graph` is `vertices[i]` in the host.
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Line graph with its vertex ↔ host-edge correspondence.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[i]` is the host edge represented by line-graph vertex `i`.
    pub edges: Vec<(usize, usize)>,
}
