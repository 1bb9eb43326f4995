//! Exact regular k-independence.
//!
//! `α_{k,j}(G)` is the largest k-independent subset of the degree class
//! `D_j(G)`, and `α_{k-reg}(G)` is the maximum of `α_{k,j}` over the nonempty
//! classes. [`alpha_kreg`] composes the per-class branch and bound;
//! [`oracle`] recomputes the same number by plain subset enumeration and shares
//! no search code with it.

mod coloring;
pub mod oracle;
mod search;

use std::collections::BTreeMap;

use serde::Serialize;

pub use coloring::{
    chi_k, chi_lower_bound, greedy_defective_coloring, is_defective_coloring, ChiOutcome, DefectiveColoring,
    DEFAULT_CHI_BUDGET,
};
pub use oracle::{oracle_alpha_kreg, DEFAULT_ORACLE_CLASS_CAP};
pub use search::{alpha_k, KIndepSet};

use crate::graph::Graph;

/// Value, per-class breakdown and a witness for `α_{k-reg}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RegKIndepResult {
    pub k: usize,
    pub value: usize,
    /// `j -> α_{k,j}` for every nonempty class `D_j`.
    pub per_class: BTreeMap<usize, usize>,
    /// Smallest `j` attaining `value`; `None` only for the empty graph.
    pub best_degree: Option<usize>,
    /// Sorted, contained in `D_{best_degree}`.
    pub witness: Vec<usize>,
}

/// `α_{k,j}(g)` with a witness in host labels. Empty when no vertex has degree `j`.
pub fn alpha_kj(g: &Graph, k: usize, j: usize) -> KIndepSet {
    let class = g.degree_class_subgraph(j);
    let inner = alpha_k(&class.graph, k);
    let mut witness: Vec<usize> = inner.witness.iter().map(|&i| class.vertices[i]).collect();
    witness.sort_unstable();
    KIndepSet {
        size: inner.size,
        witness,
    }
}

pub fn alpha_kreg(g: &Graph, k: usize) -> RegKIndepResult {
    let profile = g.degree_profile();
    let mut per_class = BTreeMap::new();
    let mut best: Option<(usize, KIndepSet)> = None;
    for &j in profile.classes.keys() {
        let r = alpha_kj(g, k, j);
        per_class.insert(j, r.size);
        if best.as_ref().is_none_or(|(_, b)| r.size > b.size) {
            best = Some((j, r));
        }
    }
    let (best_degree, witness) = match best {
        Some((j, r)) => (Some(j), r.witness),
        None => (None, Vec::new()),
    };
    RegKIndepResult {
        k,
        value: witness.len(),
        per_class,
        best_degree,
        witness,
    }
}

/// `rep(g)`: the size of the largest degree class.
pub fn repetition_number(g: &Graph) -> usize {
    g.degree_profile().rep
}

/// Re-checks a result against the graph without touching the search code.
pub fn verify_result(g: &Graph, r: &RegKIndepResult) -> bool {
    let Some(j) = r.best_degree else {
        return g.n() == 0 && r.value == 0 && r.witness.is_empty();
    };
    r.witness.len() == r.value
        && r.witness.iter().all(|&v| v < g.n() && g.degree(v) == j)
        && g.is_k_independent(&r.witness, r.k)
        && r.per_class.values().max() == Some(&r.value)
        && r.per_class.get(&j) == Some(&r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn path_class_two() {
        let g = make_path(7).unwrap();
        assert_eq!(alpha_kj(&g, 1, 2).size, 4);
        assert_eq!(alpha_kj(&g, 1, 5).size, 0);
    }

    #[test]
    fn multipartite_equal_block() {
        // the two parts of size 2 form a C_4 inside the degree-5 class
        let g = make_complete_multipartite(&[2, 2, 3]).unwrap();
        let r = alpha_kj(&g, 2, 5);
        assert_eq!(r.size, 4);
        assert_eq!(r.witness, vec![0, 1, 2, 3]);
    }

    #[test]
    fn composition_examples() {
        assert_eq!(alpha_kreg(&make_complete(5).unwrap(), 2).value, 3);
        for k in [0, 1, 4, 9] {
            assert_eq!(alpha_kreg(&make_star(6).unwrap(), k).value, 5);
        }
        let g = make_named(NamedGraph::TrianglePendant).unwrap();
        assert_eq!(alpha_kreg(&g, 0).value, 1);
        assert_eq!(alpha_kreg(&g.complement(), 0).value, 2);
    }

    #[test]
    fn ties_pick_smallest_degree() {
        // P_4: classes {0,3} (deg 1) and {1,2} (deg 2), both give 2 at k = 1
        let r = alpha_kreg(&make_path(4).unwrap(), 1);
        assert_eq!((r.value, r.best_degree), (2, Some(1)));
        assert!(verify_result(&make_path(4).unwrap(), &r));
    }

    #[test]
    fn empty_graph() {
        let r = alpha_kreg(&Graph::empty(0), 3);
        assert_eq!((r.value, r.best_degree), (0, None));
        assert!(r.per_class.is_empty());
    }

    #[test]
    fn repetition() {
        assert_eq!(repetition_number(&make_path(4).unwrap()), 2);
        assert_eq!(repetition_number(&make_complete(7).unwrap()), 7);
    }
}
