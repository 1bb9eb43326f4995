//! Exact structural predicates used as preconditions of the line-graph bounds.
//!
//! All of them are exact and refuse inputs above [`SHAPE_CAP`] vertices
//! instead of approximating.

use rustworkx_core::petgraph::graph::UnGraph;
use rustworkx_core::planar;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const SHAPE_CAP: usize = 20;

fn capped(g: &Graph, what: &'static str) -> Result<()> {
    if g.n() > SHAPE_CAP {
        return Err(Error::CapExceeded {
            what,
            value: g.n(),
            cap: SHAPE_CAP,
        });
    }
    Ok(())
}

fn to_petgraph(g: &Graph) -> UnGraph<(), ()> {
    let mut p = UnGraph::with_capacity(g.n(), g.m());
    let ids: Vec<_> = (0..g.n()).map(|_| p.add_node(())).collect();
    for (u, v) in g.edges() {
        p.add_edge(ids[u], ids[v], ());
    }
    p
}

pub fn is_planar(g: &Graph) -> Result<bool> {
    capped(g, "planarity test order")?;
    Ok(planar::is_planar(&to_petgraph(g)))
}

/// Outerplanar iff adding one vertex adjacent to everything keeps it planar.
pub fn is_outerplanar(g: &Graph) -> Result<bool> {
    capped(g, "outerplanarity test order")?;
    let n = g.n();
    let apex = (0..n).map(|v| (v, n));
    let h = Graph::from_edges(n + 1, g.edges().chain(apex))?;
    Ok(planar::is_planar(&to_petgraph(&h)))
}

/// Outerplanar with the maximum `2n - 3` edges.
pub fn is_maximal_outerplanar(g: &Graph) -> Result<bool> {
    Ok(g.n() >= 2 && g.m() == 2 * g.n() - 3 && is_outerplanar(g)?)
}

/// Maximal planar: planar with `3n - 6` edges, `n >= 3`.
pub fn is_triangulation(g: &Graph) -> Result<bool> {
    Ok(g.n() >= 3 && g.m() == 3 * g.n() - 6 && is_planar(g)?)
}

pub fn has_perfect_matching(g: &Graph) -> Result<bool> {
    capped(g, "perfect matching order")?;
    fn go(g: &Graph, free: &mut Vec<bool>) -> bool {
        let Some(v) = free.iter().position(|&f| f) else {
            return true;
        };
        free[v] = false;
        let partners: Vec<usize> = g.neighbors(v).iter().filter(|&u| free[u]).collect();
        for u in partners {
            free[u] = false;
            if go(g, free) {
                return true;
            }
            free[u] = true;
        }
        free[v] = true;
        false
    }
    Ok(g.n().is_multiple_of(2) && go(g, &mut vec![true; g.n()]))
}

/// Spanning 2-regular subgraph, by exhaustive edge selection.
pub fn has_two_factor(g: &Graph) -> Result<bool> {
    capped(g, "2-factor order")?;
    struct St<'a> {
        g: &'a Graph,
        need: Vec<usize>,
        used: Vec<Vec<bool>>,
    }
    impl St<'_> {
        fn open(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
            self.g.neighbors(v).iter().filter(move |&u| self.need[u] > 0 && !self.used[v][u])
        }

        fn go(&mut self) -> bool {
            if (0..self.g.n()).any(|v| self.open(v).count() < self.need[v]) {
                return false;
            }
            let Some(v) = (0..self.g.n()).find(|&v| self.need[v] > 0) else {
                return true;
            };
            let u = self.open(v).next().expect("pruning keeps an open edge");
            // the edge vu is decided either way; first take it, then forbid it
            self.used[v][u] = true;
            self.used[u][v] = true;
            self.need[v] -= 1;
            self.need[u] -= 1;
            let taken = self.go();
            self.need[v] += 1;
            self.need[u] += 1;
            let found = taken || self.go();
            self.used[v][u] = false;
            self.used[u][v] = false;
            found
        }
    }
    let n = g.n();
    let mut st = St {
        g,
        need: vec![2; n],
        used: vec![vec![false; n]; n],
    };
    Ok(n >= 3 && st.go())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn planarity() {
        assert!(is_planar(&make_complete(4).unwrap()).unwrap());
        assert!(!is_planar(&make_complete(5).unwrap()).unwrap());
        assert!(!is_planar(&make_complete_multipartite(&[3, 3]).unwrap()).unwrap());
        assert!(is_outerplanar(&make_cycle(6).unwrap()).unwrap());
        assert!(!is_outerplanar(&make_complete(4).unwrap()).unwrap());
        assert!(!is_outerplanar(&make_complete_multipartite(&[2, 3]).unwrap()).unwrap());
    }

    #[test]
    fn named_shapes() {
        for n in 3..=10 {
            assert!(is_maximal_outerplanar(&make_named(NamedGraph::Fan(n)).unwrap()).unwrap());
        }
        for id in [
            NamedGraph::Octahedron,
            NamedGraph::Icosahedron,
            NamedGraph::Apollonian(0),
            NamedGraph::Apollonian(1),
            NamedGraph::Apollonian(2),
        ] {
            assert!(is_triangulation(&make_named(id).unwrap()).unwrap(), "{id:?}");
        }
        assert!(!is_triangulation(&make_cycle(5).unwrap()).unwrap());
    }

    #[test]
    fn matchings() {
        assert!(has_perfect_matching(&make_path(8).unwrap()).unwrap());
        assert!(!has_perfect_matching(&make_path(7).unwrap()).unwrap());
        assert!(!has_perfect_matching(&make_star(4).unwrap()).unwrap());
        assert!(has_perfect_matching(&Graph::empty(0)).unwrap());
    }

    #[test]
    fn two_factors() {
        assert!(has_two_factor(&make_cycle(5).unwrap()).unwrap());
        assert!(has_two_factor(&make_named(NamedGraph::Octahedron).unwrap()).unwrap());
        assert!(has_two_factor(&make_named(NamedGraph::Icosahedron).unwrap()).unwrap());
        assert!(!has_two_factor(&make_path(5).unwrap()).unwrap());
        // K_{2,3}: the side of 3 would need 6 edge ends from only 4
        assert!(!has_two_factor(&make_complete_multipartite(&[2, 3]).unwrap()).unwrap());
        // two disjoint triangles form a 2-factor without a Hamiltonian cycle
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(has_two_factor(&g).unwrap());
        assert!(has_two_factor(&make_named(NamedGraph::Fan(8)).unwrap()).unwrap());
        // nine pairwise nonadjacent degree-3 vertices need 18 edge ends from 7 others
        assert!(!has_two_factor(&make_named(NamedGraph::Apollonian(2)).unwrap()).unwrap());
        assert!(has_two_factor(&make_named(NamedGraph::Apollonian(1)).unwrap()).unwrap());
        assert!(is_planar(&Graph::empty(21)).is_err());
    }
}
