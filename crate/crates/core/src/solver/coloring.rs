//! Exact defective (k-improper) chromatic number.
//!
//! `χ_k(G)` is the least number of colors such that every color class induces
//! maximum degree at most `k`. The search tries `c = lb, lb+1, ..` below a
//! greedy upper bound, where `lb` comes from [`chi_lower_bound`]; every failed
//! level is a certificate for the next one. Node budgets are shared across levels, and an
//! exhausted budget yields [`ChiOutcome::Inconclusive`] rather than a guess.

use serde::Serialize;

use super::search::alpha_k;
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_CHI_BUDGET: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DefectiveColoring {
    pub k: usize,
    pub color_count: usize,
    pub assignment: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase", tag = "status")]
pub enum ChiOutcome {
    Exact(DefectiveColoring),
    /// `lower_bound <= χ_k <= upper_bound`; the search ran out of nodes.
    Inconclusive { lower_bound: usize, upper_bound: usize },
}

impl ChiOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            ChiOutcome::Exact(c) => Some(c.color_count),
            ChiOutcome::Inconclusive { .. } => None,
        }
    }

    /// A value never above `χ_k`.
    pub fn lower_bound(&self) -> usize {
        match self {
            ChiOutcome::Exact(c) => c.color_count,
            ChiOutcome::Inconclusive { lower_bound, .. } => *lower_bound,
        }
    }
}

pub fn is_defective_coloring(g: &Graph, k: usize, assignment: &[usize]) -> bool {
    assignment.len() == g.n()
        && (0..g.n()).all(|v| g.neighbors(v).iter().filter(|&u| assignment[u] == assignment[v]).count() <= k)
}

/// First-fit in degree-descending order.
pub fn greedy_defective_coloring(g: &Graph, k: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut classes = Classes::new(g.n(), k);
    let mut color = vec![usize::MAX; g.n()];
    for v in order {
        let c = (0..)
            .find(|&c| c >= classes.count() || classes.fits(g, v, c))
            .expect("unbounded range");
        classes.add(g, v, c);
        color[v] = c;
    }
    color
}

/// The larger of `ceil(n / α_k(g))` and `ceil(|Q| / (k + 1))` for a greedily
/// grown clique `Q`; 0 for the empty graph.
pub fn chi_lower_bound(g: &Graph, k: usize) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let by_alpha = g.n().div_ceil(alpha_k(g, k).size);
    by_alpha.max(greedy_clique(g).div_ceil(k + 1))
}

/// Size of the largest clique found by growing one from each vertex,
/// always adding the lowest common neighbor.
fn greedy_clique(g: &Graph) -> usize {
    (0..g.n())
        .map(|v| {
            let mut pool = g.neighbors(v).clone();
            let mut size = 1;
            while let Some(u) = pool.first() {
                pool.intersect_with(g.neighbors(u));
                size += 1;
            }
            size
        })
        .max()
        .unwrap_or(0)
}

pub fn chi_k(g: &Graph, k: usize, budget: u64) -> ChiOutcome {
    let greedy = greedy_defective_coloring(g, k);
    let upper = greedy.iter().map(|&c| c + 1).max().unwrap_or(0);
    let lower = chi_lower_bound(g, k);
    let mut nodes = 0u64;
    for c in lower..upper {
        match colorable(g, k, c, budget, &mut nodes) {
            Some(Some(assignment)) => {
                return ChiOutcome::Exact(DefectiveColoring {
                    k,
                    color_count: c,
                    assignment,
                })
            }
            Some(None) => continue,
            None => {
                return ChiOutcome::Inconclusive {
                    lower_bound: c,
                    upper_bound: upper,
                }
            }
        }
    }
    ChiOutcome::Exact(DefectiveColoring {
        k,
        color_count: upper,
        assignment: greedy,
    })
}

struct Classes {
    k: usize,
    members: Vec<VertexSet>,
    /// same-color neighbor count, valid for colored vertices
    inner: Vec<usize>,
    /// colored vertices whose inner count equals k
    full: VertexSet,
    n: usize,
}

impl Classes {
    fn new(n: usize, k: usize) -> Self {
        Self {
            k,
            members: Vec::new(),
            inner: vec![0; n],
            full: VertexSet::new(n),
            n,
        }
    }

    fn count(&self) -> usize {
        self.members.len()
    }

    fn fits(&self, g: &Graph, v: usize, c: usize) -> bool {
        let Some(class) = self.members.get(c) else {
            return true;
        };
        let nb = g.neighbors(v);
        if nb.intersection_len(class) > self.k {
            return false;
        }
        let mut blocked = class.clone();
        blocked.intersect_with(&self.full);
        !nb.intersects(&blocked)
    }

    fn add(&mut self, g: &Graph, v: usize, c: usize) {
        while self.members.len() <= c {
            self.members.push(VertexSet::new(self.n));
        }
        let mut same = g.neighbors(v).clone();
        same.intersect_with(&self.members[c]);
        for u in same.iter() {
            self.inner[u] += 1;
            if self.inner[u] == self.k {
                self.full.insert(u);
            }
        }
        self.inner[v] = same.len();
        if self.inner[v] == self.k {
            self.full.insert(v);
        }
        self.members[c].insert(v);
    }

    fn remove(&mut self, g: &Graph, v: usize, c: usize) {
        self.members[c].remove(v);
        self.full.remove(v);
        let mut same = g.neighbors(v).clone();
        same.intersect_with(&self.members[c]);
        for u in same.iter() {
            if self.inner[u] == self.k {
                self.full.remove(u);
            }
            self.inner[u] -= 1;
        }
        if self.members.last().is_some_and(VertexSet::is_empty) && c + 1 == self.members.len() {
            self.members.pop();
        }
    }
}

/// `Some(Some(coloring))` if `c` colors suffice, `Some(None)` if they provably
/// do not, `None` if the shared node budget ran out.
fn colorable(g: &Graph, k: usize, c: usize, budget: u64, nodes: &mut u64) -> Option<Option<Vec<usize>>> {
    let mut st = ColorSearch {
        g,
        c,
        budget,
        nodes,
        classes: Classes::new(g.n(), k),
        color: vec![usize::MAX; g.n()],
    };
    match st.extend(g.n()) {
        Step::Found => Some(Some(st.color)),
        Step::Dead => Some(None),
        Step::OutOfBudget => None,
    }
}

enum Step {
    Found,
    Dead,
    OutOfBudget,
}

struct ColorSearch<'a> {
    g: &'a Graph,
    c: usize,
    budget: u64,
    nodes: &'a mut u64,
    classes: Classes,
    color: Vec<usize>,
}

impl ColorSearch<'_> {
    /// Colors the uncolored vertex with the fewest admissible colors next
    /// (ties: higher degree, then lower index). New colors are opened in order.
    fn extend(&mut self, uncolored: usize) -> Step {
        if uncolored == 0 {
            return Step::Found;
        }
        let open = self.classes.count();
        let mut pick: Option<(usize, Vec<usize>)> = None;
        for v in (0..self.g.n()).filter(|&v| self.color[v] == usize::MAX) {
            let mut opts: Vec<usize> = (0..open).filter(|&c| self.classes.fits(self.g, v, c)).collect();
            if open < self.c {
                opts.push(open);
            }
            if opts.is_empty() {
                return Step::Dead;
            }
            let better = match &pick {
                None => true,
                Some((u, o)) => (opts.len(), std::cmp::Reverse(self.g.degree(v))) < (o.len(), std::cmp::Reverse(self.g.degree(*u))),
            };
            if better {
                pick = Some((v, opts));
            }
        }
        let (v, opts) = pick.expect("some vertex is uncolored");
        for col in opts {
            *self.nodes += 1;
            if *self.nodes > self.budget {
                return Step::OutOfBudget;
            }
            self.classes.add(self.g, v, col);
            self.color[v] = col;
            match self.extend(uncolored - 1) {
                Step::Dead => {}
                other => return other,
            }
            self.color[v] = usize::MAX;
            self.classes.remove(self.g, v, col);
        }
        Step::Dead
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_complete, make_cycle, make_named, NamedGraph};

    fn exact(g: &Graph, k: usize) -> usize {
        let out = chi_k(g, k, DEFAULT_CHI_BUDGET);
        if let ChiOutcome::Exact(c) = &out {
            assert!(is_defective_coloring(g, k, &c.assignment));
        }
        out.exact().expect("small instance")
    }

    #[test]
    fn small_values() {
        assert_eq!(exact(&make_complete(4).unwrap(), 0), 4);
        assert_eq!(exact(&make_cycle(4).unwrap(), 1), 2);
        assert_eq!(exact(&make_cycle(5).unwrap(), 0), 3);
        assert_eq!(exact(&make_cycle(5).unwrap(), 2), 1);
        assert_eq!(exact(&Graph::empty(0), 0), 0);
    }

    #[test]
    fn icosahedron_edge_coloring() {
        // the icosahedron is class one: its line graph needs exactly 5 colors
        let lg = make_named(NamedGraph::Icosahedron).unwrap().line_graph().graph;
        assert_eq!(exact(&lg, 0), 5);
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let lg = make_named(NamedGraph::Icosahedron).unwrap().line_graph().graph;
        match chi_k(&lg, 0, 3) {
            ChiOutcome::Inconclusive { lower_bound, upper_bound } => {
                assert!(lower_bound <= 5 && 5 <= upper_bound)
            }
            ChiOutcome::Exact(c) => assert_eq!(c.color_count, 5),
        }
    }
}
