//! The two extremes `α_{k-reg} = 1` and `α_{k-reg} = n`, each compared with
//! its structural characterization.
//!
//! * `α_{k-reg}(G) = 1` iff `k = 0` and every degree class induces a clique.
//! * `α_{k-reg}(G) = n` iff `G` is `h`-regular and `k >= h`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::alpha_kreg;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtremalRecord {
    pub graph_id: String,
    pub k: usize,
    pub alpha: usize,
    pub alpha_is_one: bool,
    pub classes_are_cliques_at_k0: bool,
    pub alpha_is_n: bool,
    pub regular_within_k: bool,
    pub min_agrees: bool,
    pub max_agrees: bool,
}

pub fn classes_are_cliques(g: &Graph) -> bool {
    g.degree_profile().classes.values().all(|class| g.is_clique(class))
}

/// Whether `g` is `h`-regular for some `h <= k`.
pub fn regular_within(g: &Graph, k: usize) -> bool {
    g.regular_degree().is_some_and(|h| k >= h)
}

pub fn check_extremal(g: &Graph, k: usize) -> Result<ExtremalRecord> {
    check_extremal_with(g, k, alpha_kreg(g, k).value)
}

/// As [`check_extremal`] with `α_{k-reg}(g)` already known.
pub fn check_extremal_with(g: &Graph, k: usize, alpha: usize) -> Result<ExtremalRecord> {
    if g.n() == 0 {
        return Err(Error::Precondition("needs n >= 1".into()));
    }
    let alpha_is_one = alpha == 1;
    let classes_are_cliques_at_k0 = k == 0 && classes_are_cliques(g);
    let alpha_is_n = alpha == g.n();
    let regular_within_k = regular_within(g, k);
    Ok(ExtremalRecord {
        graph_id: g.to_graph6(),
        k,
        alpha,
        alpha_is_one,
        classes_are_cliques_at_k0,
        alpha_is_n,
        regular_within_k,
        min_agrees: alpha_is_one == classes_are_cliques_at_k0,
        max_agrees: alpha_is_n == regular_within_k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn examples() {
        let r = check_extremal(&make_named(NamedGraph::TrianglePendant).unwrap(), 0).unwrap();
        assert!(r.alpha_is_one && r.classes_are_cliques_at_k0 && r.min_agrees && r.max_agrees);
        let r = check_extremal(&make_cycle(5).unwrap(), 2).unwrap();
        assert!(r.alpha_is_n && r.regular_within_k && r.max_agrees);
        let r = check_extremal(&make_complete(1).unwrap(), 0).unwrap();
        // a single vertex is 0-regular and its own clique
        assert!(r.alpha_is_one && r.alpha_is_n && r.min_agrees && r.max_agrees);
        assert!(check_extremal(&Graph::empty(0), 0).is_err());
    }
}
