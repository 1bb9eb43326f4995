mod common;

use common::graph;
use proptest::prelude::*;
use regindep::graph::{edgelist, graph6};
use regindep::Graph;

fn edge_set(g: &Graph) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = g.edges().collect();
    e.sort_unstable();
    e
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let s = graph6::encode(&g);
        let h = graph6::decode(&s).unwrap();
        prop_assert_eq!(h.n(), g.n());
        prop_assert_eq!(edge_set(&h), edge_set(&g));
        prop_assert_eq!(graph6::encode(&h), s);
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        let h = edgelist::parse(&edgelist::write(&g)).unwrap();
        prop_assert_eq!(h.n(), g.n());
        prop_assert_eq!(edge_set(&h), edge_set(&g));
    }

    #[test]
    fn line_graph_degrees(g in graph(12)) {
        let lg = g.line_graph();
        prop_assert_eq!(lg.graph.n(), g.m());
        for (i, &(u, v)) in lg.edges.iter().enumerate() {
            prop_assert_eq!(lg.graph.degree(i), g.degree(u) + g.degree(v) - 2);
        }
        // Σ C(d, 2) edges in the line graph
        let expected: usize = g.degrees().iter().map(|d| d * d.saturating_sub(1) / 2).sum();
        prop_assert_eq!(lg.graph.m(), expected);
    }

    #[test]
    fn complement_is_an_involution(g in graph(16)) {
        let c = g.complement();
        prop_assert_eq!(g.m() + c.m(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(edge_set(&c.complement()), edge_set(&g));
        for v in 0..g.n() {
            prop_assert_eq!(g.degree(v) + c.degree(v), g.n() - 1);
        }
    }

    #[test]
    fn degree_profile_partitions_vertices(g in graph(16)) {
        let p = g.degree_profile();
        prop_assert_eq!(p.classes.values().map(Vec::len).sum::<usize>(), g.n());
        prop_assert_eq!(p.rep, p.classes.values().map(Vec::len).max().unwrap_or(0));
        prop_assert_eq!(p.big_degree_count, (0..g.n()).filter(|&v| g.degree(v) >= 3).count());
    }
}

#[test]
fn graph6_known_strings() {
    // standard encodings: K4 is "C~", P3 with edges 0-1, 1-2 is "Bg"
    let k4 = graph6::decode("C~").unwrap();
    assert_eq!((k4.n(), k4.m()), (4, 6));
    let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(graph6::encode(&p3), "Bg");
    assert!(graph6::decode("").is_err());
}
