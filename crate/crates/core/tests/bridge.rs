use pctree_core::oracle::naive_is_colored_tree;
use pctree_core::{bridge_certificate, build_pc_tree, random_bridge_instance, BridgeCase, SolveOutcome, TreeMode};

#[test]
fn certificate_has_exact_order_in_both_cases() {
    for delta in 3..=5 {
        for case in [BridgeCase::Wide, BridgeCase::Tight] {
            for seed in 0..10 {
                let (g, e) = random_bridge_instance(delta, case, seed);
                assert_eq!(g.min_color_degree(), delta);
                assert!(g.cut_edges().contains(&e));
                let t = bridge_certificate(&g, e).unwrap();
                assert_eq!(t.order(), 2 * delta + 1, "{case:?} delta={delta} seed={seed}");
                assert!(naive_is_colored_tree(&g, &t.edges, TreeMode::ProperlyColored));
            }
        }
    }
}

#[test]
fn tight_case_uses_an_extra_leaf() {
    let (g, e) = random_bridge_instance(3, BridgeCase::Tight, 7);
    let t = bridge_certificate(&g, e).unwrap();
    let bridge = g.edge(e);
    let off_star = t
        .edges
        .iter()
        .filter(|&&f| {
            let edge = g.edge(f);
            !edge.touches(bridge.u) && !edge.touches(bridge.v)
        })
        .count();
    assert_eq!(off_star, 1);
}

#[test]
fn non_cut_edge_is_rejected() {
    let (g, _) = random_bridge_instance(3, BridgeCase::Wide, 1);
    let inner = (0..g.m()).find(|e| !g.cut_edges().contains(e)).unwrap();
    assert!(bridge_certificate(&g, inner).is_err());
}

#[test]
fn pipeline_solves_bridge_instances() {
    for seed in 0..5 {
        let (g, _) = random_bridge_instance(4, BridgeCase::Tight, seed);
        let sol = build_pc_tree(&g, 3).unwrap();
        let SolveOutcome::Tree(t) = sol.outcome else {
            panic!("seed {seed}: no tree")
        };
        assert!(t.order() >= 9);
    }
}
