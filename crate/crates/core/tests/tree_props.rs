use proptest::prelude::*;
use regindep::families::{make_tnt, random_tree_with_diameter, reverse_surgery, tree_surgery, TntSpec};
use regindep::solver::alpha_kreg;
use regindep::trees::{diameter_bounds, f_of, fast_alpha_tree, tree_profile, Regime};
use regindep::Diameter;

fn edges_sorted(g: &regindep::Graph) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = g.edges().collect();
    e.sort_unstable();
    e
}

#[test]
fn tnt_has_the_fewest_possible_leaves() {
    for n in 5..=30 {
        for t in 2..=n - 3 {
            let tree = make_tnt(TntSpec::new(n, t).unwrap()).unwrap();
            let p = tree_profile(&tree.graph).unwrap();
            assert_eq!((p.n, p.t), (n, t));
            assert_eq!(p.n1, f_of(n, t).unwrap(), "T({n},{t}) legs {:?}", tree.legs);
            assert_eq!(tree.leaves, p.n1);
            // the center is the only vertex that can have degree above 2
            assert!(p.n3 <= 1);
            assert!((0..n).all(|v| v == tree.z0 || tree.graph.degree(v) <= 2));
            assert_eq!(tree.note.is_some(), (n - t) % 2 == 1);
        }
    }
}

#[test]
fn regimes_partition_the_range() {
    for n in 8..=40 {
        for t in 2..=n - 3 {
            let r = Regime::of(n, t).unwrap();
            let expected = if 3 * t < n {
                Regime::ShortT
            } else if t + 5 <= n {
                Regime::MiddleT
            } else if t + 4 == n {
                Regime::DiameterFour
            } else {
                Regime::DiameterThree
            };
            assert_eq!(r, expected, "n={n} t={t}");
            let b = diameter_bounds(n, t).unwrap();
            assert!(b.lower.0 <= num_rational::Ratio::from_integer(b.upper as u64));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_trees_have_the_requested_diameter((n, d, seed) in (3usize..40).prop_flat_map(|n| (Just(n), 2..n, any::<u64>()))) {
        let g = random_tree_with_diameter(n, d, seed).unwrap();
        prop_assert!(g.is_tree());
        prop_assert_eq!(g.diameter(), Diameter::Finite(d));
        prop_assert_eq!(edges_sorted(&g), edges_sorted(&random_tree_with_diameter(n, d, seed).unwrap()));
    }

    #[test]
    fn leaf_count_is_at_least_f((n, t, seed) in (5usize..30).prop_flat_map(|n| (Just(n), 2..=n - 3, any::<u64>()))) {
        let g = random_tree_with_diameter(n, n - t, seed).unwrap();
        let p = tree_profile(&g).unwrap();
        prop_assert!(p.n1 >= f_of(n, t).unwrap());
        let excess: usize = g.degrees().iter().filter(|&&d| d >= 3).map(|d| d - 2).sum();
        prop_assert_eq!(p.n1, excess + 2);
        prop_assert_eq!(p.n1 + p.n2 + p.n3, n);
    }

    #[test]
    fn fast_alpha_matches_solver((n, t, seed) in (5usize..18).prop_flat_map(|n| (Just(n), 2..=n - 3, any::<u64>())), k in 2usize..5) {
        let g = random_tree_with_diameter(n, n - t, seed).unwrap();
        prop_assert_eq!(fast_alpha_tree(&g, k).unwrap(), alpha_kreg(&g, k).value);
    }

    #[test]
    fn surgery_preserves_order_and_leaves((n, t, seed) in (8usize..30).prop_flat_map(|n| (Just(n), 2..=n - 3, any::<u64>()))) {
        let g = random_tree_with_diameter(n, n - t, seed).unwrap();
        let big: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
        if big.len() >= 2 {
            let before = tree_profile(&g).unwrap();
            let s = tree_surgery(&g, big[0], big[1]).unwrap();
            prop_assert!(s.tree.is_tree());
            let after = tree_profile(&s.tree).unwrap();
            prop_assert_eq!(after.n, n);
            prop_assert_eq!(after.n1, before.n1);
            prop_assert_eq!(after.n3 + 1, before.n3);
            prop_assert_eq!(s.tree.degree(big[1]), 2);
            prop_assert_eq!(edges_sorted(&reverse_surgery(&s)), edges_sorted(&g));
        }
    }
}
