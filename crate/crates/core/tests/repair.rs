use pctree_core::fixtures::{repair_fixtures, FIXTURE_DELTA0};
use pctree_core::{build_pc_tree, check_tree, Branch, SolveOutcome};

#[test]
fn repair_fixtures_reach_seven() {
    for fx in repair_fixtures() {
        let sol = build_pc_tree(&fx.graph, FIXTURE_DELTA0).unwrap_or_else(|e| panic!("{}: {e}", fx.name));
        assert_eq!(sol.report.branch, Branch::Repair(fx.family), "{}", fx.name);
        let repair = sol.report.repair.clone().unwrap();
        assert_eq!(repair.restored, 0, "{}", fx.name);
        let mut removed: Vec<_> = repair
            .removed
            .iter()
            .map(|&e| (fx.graph.edge(e).u, fx.graph.edge(e).v))
            .collect();
        removed.sort_unstable();
        let mut expected = fx.removed.clone();
        expected.sort_unstable();
        assert_eq!(removed, expected, "{}", fx.name);
        match sol.outcome {
            SolveOutcome::Tree(t) => {
                assert!(check_tree(&fx.graph, &t).is_ok());
                assert_eq!(t.order(), 7, "{}", fx.name);
            }
            other => panic!("{}: {other:?}", fx.name),
        }
    }
}
