//! Differential checks of the polynomial algorithms against the brute-force
//! references in `oracle`.

use pctree_core::oracle::{
    brute_matroid_intersection, find_colored_tree, max_colored_tree_bounded, max_sat_brute, naive_cut_edges,
    naive_is_colored_tree,
};
use pctree_core::{
    build_pc_tree, build_rainbow_tree, build_tree_from_assignment, check_tree, exhaustive_threshold_search,
    extract_assignment, max_common_independent, preprocess_removable_edges, random_connected_graph,
    random_matroid_pair, random_star_colored_graph, recolor_stars, reduce, CnfFormula, SolveOutcome, TreeMode,
};
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = pctree_core::EdgeColoredGraph> {
    (4usize..=9, 0.3f64..0.7, 1u32..=5, any::<u64>())
        .prop_map(|(n, p, colors, seed)| random_connected_graph(n, p, colors, seed))
}

fn formula() -> impl Strategy<Value = CnfFormula> {
    (1usize..=4).prop_flat_map(|s| {
        let literal = (1..=s as i64, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v });
        let clause = prop::collection::vec(literal, 1..=3).prop_map(|mut c| {
            c.sort_unstable();
            c.dedup();
            c
        });
        prop::collection::vec(clause, 0..=6).prop_map(move |clauses| CnfFormula::new(s, clauses).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matroid_intersection_matches_brute_force(n in 3usize..=7, seed in any::<u64>()) {
        let g = random_connected_graph(n, 0.5, 4, seed);
        prop_assume!(g.m() <= 12);
        let (m1, m2) = random_matroid_pair(&g, seed ^ 0x5eed);
        let set = max_common_independent(&m1, &m2).unwrap();
        prop_assert_eq!(set.len(), brute_matroid_intersection(&m1, &m2).unwrap());
        prop_assert!(m1.is_independent(&set).unwrap());
        prop_assert!(m2.is_independent(&set).unwrap());
    }

    #[test]
    fn cut_edges_match_naive(n in 2usize..=12, p in 0.05f64..0.5, seed in any::<u64>()) {
        let g = random_connected_graph(n, p, 3, seed);
        let mut fast = g.cut_edges();
        fast.sort_unstable();
        prop_assert_eq!(fast, naive_cut_edges(&g));
    }

    #[test]
    fn exhaustive_search_agrees_with_oracle(g in small_graph(), target in 1usize..=7) {
        let found = exhaustive_threshold_search(&g, target);
        let oracle = find_colored_tree(&g, TreeMode::ProperlyColored, target, 12).unwrap();
        prop_assert_eq!(found.is_some(), oracle.is_some());
        if let Some(t) = found {
            prop_assert_eq!(t.order(), target);
            prop_assert!(naive_is_colored_tree(&g, &t.edges, TreeMode::ProperlyColored));
        }
    }

    #[test]
    fn rainbow_builder_meets_floor_and_threshold(n in 2usize..=9, p in 0.2f64..0.8, seed in any::<u64>()) {
        let g = random_star_colored_graph(n, p, seed);
        let t = build_rainbow_tree(&g).unwrap();
        prop_assert!(naive_is_colored_tree(&g, &t.edges, TreeMode::Rainbow));
        let delta = g.min_color_degree();
        prop_assert!(t.order() >= g.n().min(2 * delta));
        let (best, _) = max_colored_tree_bounded(&g, TreeMode::Rainbow, 12).unwrap();
        if best >= g.target_order() {
            prop_assert!(t.order() >= g.target_order());
        }
    }

    #[test]
    fn pipeline_is_complete(g in small_graph(), delta0 in 2usize..=3) {
        let sol = build_pc_tree(&g, delta0).unwrap();
        let (best, _) = max_colored_tree_bounded(&g, TreeMode::ProperlyColored, 12).unwrap();
        match sol.outcome {
            SolveOutcome::Tree(t) => {
                prop_assert!(naive_is_colored_tree(&g, &t.edges, TreeMode::ProperlyColored) || t.order() == 1);
                prop_assert!(t.order() >= g.target_order());
            }
            SolveOutcome::No(_) => prop_assert!(best < g.target_order()),
        }
    }

    #[test]
    fn preprocessing_keeps_invariants(g in small_graph()) {
        let pre = preprocess_removable_edges(&g);
        if pre.cut_event.is_none() {
            let h = &pre.graph.graph;
            prop_assert!(h.components_are_stars());
            prop_assert!(h.is_connected());
            prop_assert_eq!(h.min_color_degree(), g.min_color_degree());
            let (bar, _) = recolor_stars(h).unwrap();
            prop_assert!(bar.is_star_colored());
            for v in 0..h.n() {
                prop_assert_eq!(bar.color_degree(v).unwrap(), h.color_degree(v).unwrap());
            }
        }
    }

    #[test]
    fn reduction_preserves_optimum(f in formula()) {
        let (g, map) = reduce(&f).unwrap();
        prop_assert!(g.is_star_colored());
        prop_assert!(g.is_connected());
        let opt = max_sat_brute(&f).unwrap();
        let (best, _) = max_colored_tree_bounded(&g, TreeMode::Rainbow, 18).unwrap();
        prop_assert_eq!(best, opt + 2 * f.vars());

        let assignment: Vec<bool> = (0..f.vars()).map(|i| i % 2 == 0).collect();
        let tree = build_tree_from_assignment(&g, &map, &assignment).unwrap();
        prop_assert!(check_tree(&g, &tree).is_ok());
        let (back, satisfied) = extract_assignment(&g, &map, &tree).unwrap();
        prop_assert_eq!(satisfied, f.satisfied(&back));
        prop_assert!(satisfied >= f.satisfied(&assignment));
    }
}
