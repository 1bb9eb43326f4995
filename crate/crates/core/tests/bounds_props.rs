mod common;

use common::graph;
use proptest::prelude::*;
use regindep::bounds::{certify_all, check_extremal, check_pair, ng_scan, Verdict};
use regindep::families::{random_tree_with_diameter, DEFAULT_ENUMERATION_CAP};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn certificates_never_fail(g in graph(7), k in 0usize..3) {
        for c in certify_all(&g, k, 1_000_000).unwrap() {
            prop_assert!(c.verdict != Verdict::Fails, "{:?}", c);
        }
    }

    #[test]
    fn tree_certificates_never_fail((n, d, seed) in (2usize..11).prop_flat_map(|n| (Just(n), 1..n, any::<u64>())), k in 0usize..3) {
        if d == 1 && n > 2 {
            return Ok(());
        }
        let t = random_tree_with_diameter(n, d, seed).unwrap();
        let certs = certify_all(&t, k, 1_000_000).unwrap();
        prop_assert!(certs.iter().any(|c| c.theorem_tag.contains("tree-sqrt")));
        for c in certs {
            prop_assert!(c.verdict != Verdict::Fails, "{:?}", c);
        }
    }

    #[test]
    fn complement_pair_checks_agree(g in graph(9), k in 0usize..7) {
        if g.n() >= 2 {
            let (rec, failed) = check_pair(&g, k).unwrap();
            prop_assert!(failed.is_empty(), "{:?} {:?}", rec, failed);
            prop_assert!((3..=2 * g.n()).contains(&rec.sum));
            prop_assert!((2..=g.n() * g.n()).contains(&rec.product));
        }
    }

    #[test]
    fn extremes_match_their_characterizations(g in graph(10), k in 0usize..6) {
        // a single vertex has value 1 at every k, so the first iff needs n >= 2
        if g.n() >= 2 {
            let r = check_extremal(&g, k).unwrap();
            prop_assert!(r.min_agrees && r.max_agrees, "{:?}", r);
        }
    }
}

#[test]
fn exhaustive_scan_up_to_five() {
    for n in 2..=5 {
        let r = ng_scan(n, &[0, 1, 2, 5], DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(r.graphs, 1 << (n * (n - 1) / 2));
        assert!(r.violations.is_empty(), "n={n}: {:?}", r.violations);
    }
}

#[test]
fn single_vertex_breaks_the_value_one_iff() {
    let k1 = regindep::Graph::empty(1);
    let r = check_extremal(&k1, 1).unwrap();
    assert!(r.alpha_is_one && !r.classes_are_cliques_at_k0 && !r.min_agrees);
    assert!(r.max_agrees);
}
