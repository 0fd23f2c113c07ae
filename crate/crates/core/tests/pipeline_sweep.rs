//! The pipeline with the smallest allowed delta0 on a seeded sweep, so that
//! preprocessing, the rainbow builder and the repair logic see many inputs.

use std::collections::BTreeMap;

use pctree_core::oracle::{max_colored_tree_bounded, naive_is_colored_tree};
use pctree_core::{build_pc_tree, random_connected_graph, SolveOutcome, TreeMode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn low_delta0_sweep_is_complete() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut branches: BTreeMap<String, usize> = BTreeMap::new();
    for i in 0..400 {
        let n = rng.gen_range(4..=10);
        let g = random_connected_graph(n, rng.gen_range(0.5..=1.0), rng.gen_range(2..=8), rng.gen());
        let sol = build_pc_tree(&g, 2).unwrap_or_else(|e| panic!("instance {i}: {e}"));
        *branches.entry(sol.report.branch.to_string()).or_default() += 1;
        let (best, _) = max_colored_tree_bounded(&g, TreeMode::ProperlyColored, 10).unwrap();
        match sol.outcome {
            SolveOutcome::Tree(t) => {
                assert!(t.order() >= g.target_order(), "instance {i}");
                assert!(t.order() == 1 || naive_is_colored_tree(&g, &t.edges, TreeMode::ProperlyColored));
            }
            SolveOutcome::No(_) => assert!(best < g.target_order(), "instance {i}: NO but oracle reaches {best}"),
        }
    }
    assert!(branches.get("plain").copied().unwrap_or(0) > 0, "{branches:?}");
    println!("{branches:?}");
}
