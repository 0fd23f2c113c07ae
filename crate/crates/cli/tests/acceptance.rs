//! Acceptance suite: one PASS/FAIL line per criterion, exact tolerances.
//! Runs without the libtest harness so the lines always reach stdout.

use std::fs;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use pctree_cli::{cmd_solve, EXIT_NO, EXIT_TREE};
use pctree_core::fixtures::{repair_fixtures, FIXTURE_DELTA0};
use pctree_core::oracle::{
    brute_matroid_intersection, find_colored_tree, max_colored_tree_bounded, max_sat_brute, naive_is_colored_tree,
};
use pctree_core::{
    bridge_certificate, build_pc_tree, build_rainbow_tree, generate, max_common_independent, parse_tree,
    preprocess_removable_edges, random_bridge_instance, random_connected_graph, random_matroid_pair,
    random_star_colored_graph, recolor_stars, reduce, verify_membership, Branch, BridgeCase, CnfFormula,
    EdgeColoredGraph, FamilyInstance, FamilyTag, NoWitness, SolveOutcome, TreeMode, DEFAULT_DELTA0,
};

const SWEEP_SEED: u64 = 0x5eed_0001;
const STAR_SEED: u64 = 0x5eed_0002;
const SAT_SEED: u64 = 0x5eed_0005;
const MATROID_SEED: u64 = 0x5eed_0006;
const BRIDGE_SEED: u64 = 0x5eed_0007;

/// Largest reduced graph is 3*4 + 6 = 18 vertices.
const SAT_ORACLE_BOUND: usize = 18;

struct Verdict {
    failures: Vec<String>,
    summary: String,
}

impl Verdict {
    fn new() -> Self {
        Verdict {
            failures: Vec::new(),
            summary: String::new(),
        }
    }

    fn fail(&mut self, msg: String) {
        self.failures.push(msg);
    }
}

fn sweep_graphs() -> Vec<EdgeColoredGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(SWEEP_SEED);
    (0..500)
        .map(|_| {
            let n = rng.gen_range(4..=10);
            let p = rng.gen_range(0.3..=0.7);
            let colors = rng.gen_range(1..=5);
            random_connected_graph(n, p, colors, rng.gen())
        })
        .collect()
}

fn oracle_completeness(graphs: &[EdgeColoredGraph]) -> Verdict {
    let mut v = Verdict::new();
    let dir = tempfile::tempdir().expect("temp dir");
    let (mut feasible, mut trees) = (0, 0);
    for (i, g) in graphs.iter().enumerate() {
        let path = dir.path().join(format!("g{i}.txt"));
        fs::write(&path, pctree_core::write_graph(g)).expect("write graph");
        let reply = match cmd_solve(&path, DEFAULT_DELTA0, None) {
            Ok(r) => r,
            Err(e) => {
                v.fail(format!("instance {i}: solve failed: {e:#}"));
                continue;
            }
        };
        let target = g.target_order();
        let (best, _) = max_colored_tree_bounded(g, TreeMode::ProperlyColored, 10).expect("n <= 10");
        if best >= target {
            feasible += 1;
        }
        match reply.code {
            EXIT_TREE => {
                trees += 1;
                let tree = match parse_tree(g, &reply.stdout, TreeMode::ProperlyColored) {
                    Ok(t) => t,
                    Err(e) => {
                        v.fail(format!("instance {i}: unparsable tree: {e}"));
                        continue;
                    }
                };
                if tree.order() > 1 && !naive_is_colored_tree(g, &tree.edges, TreeMode::ProperlyColored) {
                    v.fail(format!("instance {i}: tree fails the independent check"));
                }
                if tree.order() < target {
                    v.fail(format!("instance {i}: order {} below target {target}", tree.order()));
                }
            }
            EXIT_NO if best >= target => v.fail(format!("instance {i}: NO but oracle finds order {best} >= {target}")),
            EXIT_NO => {}
            code => v.fail(format!("instance {i}: exit code {code}")),
        }
    }
    v.summary = format!("{} instances, {feasible} feasible, {trees} trees", graphs.len());
    v
}

fn guarantee_floor() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = ChaCha8Rng::seed_from_u64(STAR_SEED);
    let mut at_threshold = 0;
    for i in 0..500 {
        let n = rng.gen_range(4..=10);
        let p = rng.gen_range(0.3..=0.9);
        let g = random_star_colored_graph(n, p, rng.gen());
        match build_rainbow_tree(&g) {
            Ok(t) => {
                let floor = g.n().min(2 * g.min_color_degree());
                if t.order() < floor {
                    v.fail(format!("instance {i}: order {} below floor {floor}", t.order()));
                }
                if t.order() > 1 && !naive_is_colored_tree(&g, &t.edges, TreeMode::Rainbow) {
                    v.fail(format!("instance {i}: tree is not rainbow"));
                }
                if t.order() >= g.target_order() {
                    at_threshold += 1;
                }
            }
            Err(e) => v.fail(format!("instance {i}: {e}")),
        }
    }
    v.summary = format!("500 instances, {at_threshold} reached min(n, 2δᶜ+1)");
    v
}

fn extremal_soundness() -> Verdict {
    let mut v = Verdict::new();
    let cases = [
        (FamilyTag::G1, 7, 2),
        (FamilyTag::G3, 3, 1),
        (FamilyTag::G3, 4, 2),
        (FamilyTag::G5, 4, 1),
        (FamilyTag::G5, 5, 2),
    ];
    let mut oracle_checked = 0;
    for (tag, m, k) in cases {
        for seed in [0, 17] {
            let name = format!("{tag}_{{{m},{k}}} seed {seed}");
            let (g, _) = match generate(tag, m, k, seed) {
                Ok(x) => x,
                Err(e) => {
                    v.fail(format!("{name}: {e}"));
                    continue;
                }
            };
            let inst = match build_pc_tree(&g, DEFAULT_DELTA0) {
                Ok(sol) => match sol.outcome {
                    SolveOutcome::No(NoWitness::ExtremalFamily(inst)) => inst,
                    other => {
                        v.fail(format!("{name}: expected an extremal NO, got {other:?}"));
                        continue;
                    }
                },
                Err(e) => {
                    v.fail(format!("{name}: {e}"));
                    continue;
                }
            };
            let json = serde_json::to_string(&inst).expect("serializable");
            let back: FamilyInstance = serde_json::from_str(&json).expect("deserializable");
            if back != inst || !verify_membership(&g, &back) {
                v.fail(format!("{name}: witness does not round-trip"));
            }
            if g.n() <= 12 {
                oracle_checked += 1;
                match find_colored_tree(&g, TreeMode::ProperlyColored, g.target_order(), 12) {
                    Ok(None) => {}
                    Ok(Some(_)) => v.fail(format!("{name}: oracle found a tree of the target order")),
                    Err(e) => v.fail(format!("{name}: oracle: {e}")),
                }
            }
        }
    }
    v.summary = format!("{} instances, {oracle_checked} oracle-confirmed", cases.len() * 2);
    v
}

fn repair_fixtures_check() -> Verdict {
    let mut v = Verdict::new();
    let fixtures = repair_fixtures();
    for fx in &fixtures {
        let sol = match build_pc_tree(&fx.graph, FIXTURE_DELTA0) {
            Ok(s) => s,
            Err(e) => {
                v.fail(format!("{}: {e}", fx.name));
                continue;
            }
        };
        if sol.report.branch != Branch::Repair(fx.family) {
            v.fail(format!("{}: branch {}", fx.name, sol.report.branch));
        }
        match sol.outcome {
            SolveOutcome::Tree(t)
                if t.order() == 7 && naive_is_colored_tree(&fx.graph, &t.edges, TreeMode::ProperlyColored) => {}
            SolveOutcome::Tree(t) => v.fail(format!("{}: order {}", fx.name, t.order())),
            SolveOutcome::No(w) => v.fail(format!("{}: NO {}", fx.name, w.kind())),
        }
    }
    v.summary = format!("{} fixtures, order 7 each", fixtures.len());
    v
}

fn random_formula(rng: &mut ChaCha8Rng) -> CnfFormula {
    let s = rng.gen_range(1..=4usize);
    let t = rng.gen_range(0..=6usize);
    let clauses = (0..t)
        .map(|_| {
            let width = rng.gen_range(1..=3usize.min(2 * s));
            let mut clause: Vec<i64> = Vec::new();
            while clause.len() < width {
                let var = rng.gen_range(1..=s as i64);
                let lit = if rng.gen_bool(0.5) { var } else { -var };
                if !clause.contains(&lit) {
                    clause.push(lit);
                }
            }
            clause
        })
        .collect();
    CnfFormula::new(s, clauses).expect("valid formula")
}

fn reduction_identity() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SAT_SEED);
    let example = CnfFormula::new(3, vec![vec![1, 2], vec![1, -2], vec![-1, 3], vec![-1, -3]]).expect("valid");
    let mut formulas: Vec<CnfFormula> = (0..200).map(|_| random_formula(&mut rng)).collect();
    formulas.push(example);
    let mut example_order = 0;
    for (i, f) in formulas.iter().enumerate() {
        let (g, _) = reduce(f).expect("reducible");
        let opt = max_sat_brute(f).expect("small formula");
        match max_colored_tree_bounded(&g, TreeMode::Rainbow, SAT_ORACLE_BOUND) {
            Ok((best, _)) => {
                if best != opt + 2 * f.vars() {
                    v.fail(format!(
                        "formula {i}: tree order {best}, max-sat {opt}, s = {}",
                        f.vars()
                    ));
                }
                example_order = best;
            }
            Err(e) => v.fail(format!("formula {i}: {e}")),
        }
    }
    if example_order != 9 {
        v.fail(format!("three-variable example: order {example_order}, expected 9"));
    }
    v.summary = format!(
        "{} formulas, three-variable example order {example_order}",
        formulas.len()
    );
    v
}

fn matroid_intersection() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = ChaCha8Rng::seed_from_u64(MATROID_SEED);
    let mut done = 0;
    while done < 300 {
        let n = rng.gen_range(3..=8);
        let g = random_connected_graph(n, rng.gen_range(0.2..=0.8), rng.gen_range(1..=5), rng.gen());
        if g.m() > 12 {
            continue;
        }
        let (m1, m2) = random_matroid_pair(&g, rng.gen());
        done += 1;
        let set = match max_common_independent(&m1, &m2) {
            Ok(s) => s,
            Err(e) => {
                v.fail(format!("pair {done}: {e}"));
                continue;
            }
        };
        let brute = brute_matroid_intersection(&m1, &m2).expect("ground <= 12");
        if set.len() != brute {
            v.fail(format!("pair {done}: size {} vs brute force {brute}", set.len()));
        }
        if !m1.is_independent(&set).unwrap_or(false) || !m2.is_independent(&set).unwrap_or(false) {
            v.fail(format!("pair {done}: returned set not independent in both"));
        }
    }
    v.summary = "300 pairs".to_string();
    v
}

fn bridge_certificates() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = ChaCha8Rng::seed_from_u64(BRIDGE_SEED);
    let mut count = 0;
    for delta in 3..=5 {
        for case in [BridgeCase::Wide, BridgeCase::Tight] {
            for _ in 0..50 {
                count += 1;
                let (g, e) = random_bridge_instance(delta, case, rng.gen());
                match bridge_certificate(&g, e) {
                    Ok(t)
                        if t.order() == 2 * delta + 1
                            && naive_is_colored_tree(&g, &t.edges, TreeMode::ProperlyColored) => {}
                    Ok(t) => v.fail(format!("{case:?} δᶜ={delta}: order {}", t.order())),
                    Err(err) => v.fail(format!("{case:?} δᶜ={delta}: {err}")),
                }
            }
        }
    }
    v.summary = format!("{count} instances over δᶜ ∈ {{3,4,5}} and both cases");
    v
}

fn preprocessing_invariants(graphs: &[EdgeColoredGraph]) -> Verdict {
    let mut v = Verdict::new();
    let mut cut_events = 0;
    for (i, g) in graphs.iter().enumerate() {
        let pre = preprocess_removable_edges(g);
        if pre.cut_event.is_some() {
            cut_events += 1;
            continue;
        }
        let h = &pre.graph.graph;
        if !h.components_are_stars() {
            v.fail(format!("instance {i}: a monochromatic component is not a star"));
        }
        if h.min_color_degree() != g.min_color_degree() {
            v.fail(format!("instance {i}: minimum color degree changed"));
        }
        if !h.is_connected() {
            v.fail(format!("instance {i}: disconnected"));
        }
        match recolor_stars(h) {
            Ok((bar, _)) => {
                if (0..h.n()).any(|x| bar.color_degree(x).ok() != h.color_degree(x).ok()) {
                    v.fail(format!("instance {i}: recoloring changed a color degree"));
                }
            }
            Err(e) => v.fail(format!("instance {i}: {e}")),
        }
    }
    v.summary = format!(
        "{} instances, {cut_events} stopped on a removable cut edge",
        graphs.len()
    );
    v
}

fn report(id: usize, name: &str, limit: Duration, run: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let mut verdict = run();
    let elapsed = start.elapsed();
    if elapsed > limit {
        verdict.fail(format!("took {elapsed:.1?}, limit {limit:?}"));
    }
    let ok = verdict.failures.is_empty();
    println!(
        "criterion {id} [PRIMARY] {name}: {} ({}; {elapsed:.2?})",
        if ok { "PASS" } else { "FAIL" },
        verdict.summary
    );
    for f in verdict.failures.iter().take(10) {
        println!("    {f}");
    }
    ok
}

fn main() -> ExitCode {
    let graphs = sweep_graphs();
    let results = [
        report(1, "oracle completeness sweep", Duration::from_secs(300), || {
            oracle_completeness(&graphs)
        }),
        report(2, "rainbow guarantee floor", Duration::from_secs(120), guarantee_floor),
        report(3, "extremal NO soundness", Duration::from_secs(180), extremal_soundness),
        report(
            4,
            "repair-branch fixtures",
            Duration::from_secs(60),
            repair_fixtures_check,
        ),
        report(5, "reduction identity", Duration::from_secs(180), reduction_identity),
        report(
            6,
            "matroid intersection correctness",
            Duration::from_secs(60),
            matroid_intersection,
        ),
        report(7, "bridge certificate", Duration::from_secs(60), bridge_certificates),
        report(8, "preprocessing invariants", Duration::from_secs(60), || {
            preprocessing_invariants(&graphs)
        }),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
