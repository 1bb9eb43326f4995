mod common;

use common::{brute_alpha_k, brute_alpha_kreg, graph};
use proptest::prelude::*;
use regindep::families::{enumerate_labeled_graphs, make_complete_multipartite};
use regindep::solver::{
    alpha_k, alpha_kj, alpha_kreg, chi_k, is_defective_coloring, oracle_alpha_kreg, repetition_number,
    verify_result, ChiOutcome, DEFAULT_ORACLE_CLASS_CAP,
};

#[test]
fn matches_brute_force_on_every_graph_up_to_five() {
    for n in 0..=5 {
        for g in enumerate_labeled_graphs(n, 7).unwrap() {
            for k in [0, 1, 2, 5] {
                assert_eq!(alpha_kreg(&g, k).value, brute_alpha_kreg(&g, k), "{} k={k}", g.to_graph6());
            }
        }
    }
}

#[test]
fn known_multipartite_value() {
    // the witness that disagrees with the published multipartite formula
    let g = make_complete_multipartite(&[2, 2, 3]).unwrap();
    assert_eq!(alpha_kreg(&g, 2).value, 4);
    assert_eq!(brute_alpha_kreg(&g, 2), 4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solver_matches_both_oracles(g in graph(12), k in 0usize..6) {
        let r = alpha_kreg(&g, k);
        prop_assert_eq!(r.value, brute_alpha_kreg(&g, k));
        prop_assert_eq!(r.value, oracle_alpha_kreg(&g, k, DEFAULT_ORACLE_CLASS_CAP).unwrap());
        prop_assert!(verify_result(&g, &r));
    }

    #[test]
    fn witness_is_regular_and_k_independent(g in graph(14), k in 0usize..5) {
        let r = alpha_kreg(&g, k);
        prop_assert_eq!(r.witness.len(), r.value);
        prop_assert!(g.is_k_independent(&r.witness, k));
        if let Some(j) = r.best_degree {
            prop_assert!(r.witness.iter().all(|&v| g.degree(v) == j));
            // ties go to the smallest degree
            prop_assert!(r.per_class.range(..j).all(|(_, &a)| a < r.value));
        }
    }

    #[test]
    fn composition_over_degree_classes(g in graph(12), k in 0usize..5) {
        let r = alpha_kreg(&g, k);
        for (&j, &a) in &r.per_class {
            prop_assert_eq!(a, alpha_kj(&g, k, j).size);
        }
        prop_assert_eq!(r.value, r.per_class.values().copied().max().unwrap_or(0));
    }

    #[test]
    fn monotone_in_k(g in graph(12), k in 0usize..6) {
        let (a, b) = (alpha_kreg(&g, k).value, alpha_kreg(&g, k + 1).value);
        prop_assert!(a <= b);
        prop_assert!(b <= repetition_number(&g));
        prop_assert!(alpha_kreg(&g, g.n()).value == repetition_number(&g));
    }

    #[test]
    fn repetition_lower_bounds(g in graph(14)) {
        let n = g.n();
        if n >= 2 {
            prop_assert!(repetition_number(&g) >= 2);
        }
        if n >= 1 {
            let spread = g.max_degree() - g.min_degree() + 1;
            prop_assert!(repetition_number(&g) >= n.div_ceil(spread));
        }
    }

    #[test]
    fn complement_swaps_degree_classes(g in graph(14)) {
        let n = g.n();
        let (p, q) = (g.degree_profile(), g.complement().degree_profile());
        for (i, class) in &q.classes {
            prop_assert_eq!(class.as_slice(), p.class(n - 1 - i));
        }
        prop_assert_eq!(p.classes.len(), q.classes.len());
    }

    #[test]
    fn regular_graphs_collapse_to_alpha_k(g in graph(9), k in 0usize..4) {
        if g.regular_degree().is_some() {
            prop_assert_eq!(alpha_kreg(&g, k).value, alpha_k(&g, k).size);
        }
        prop_assert_eq!(alpha_k(&g, k).size, brute_alpha_k(&g, k));
    }

    #[test]
    fn defective_chromatic_sanity(g in graph(9), k in 0usize..3) {
        match chi_k(&g, k, 1_000_000) {
            ChiOutcome::Exact(c) => {
                prop_assert!(is_defective_coloring(&g, k, &c.assignment));
                prop_assert_eq!(c.assignment.iter().map(|&x| x + 1).max().unwrap_or(0), c.color_count);
                // pigeonhole: some color class holds at least n / χ vertices
                prop_assert!(g.n() <= c.color_count * alpha_k(&g, k).size);
                if c.color_count > 1 {
                    // one fewer color is impossible: brute force over all assignments
                    prop_assert!(!colorable_brute(&g, k, c.color_count - 1));
                }
            }
            ChiOutcome::Inconclusive { .. } => prop_assert!(false, "small graph ran out of budget"),
        }
    }
}

fn colorable_brute(g: &regindep::Graph, k: usize, colors: usize) -> bool {
    let n = g.n();
    let mut a = vec![0usize; n];
    loop {
        if is_defective_coloring(g, k, &a) {
            return true;
        }
        let mut i = 0;
        while i < n && a[i] + 1 == colors {
            a[i] = 0;
            i += 1;
        }
        if i == n {
            return false;
        }
        a[i] += 1;
    }
}
