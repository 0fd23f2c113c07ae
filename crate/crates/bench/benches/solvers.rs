use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use pctree_core::fixtures::{repair_fixtures, FIXTURE_DELTA0};
use pctree_core::{
    build_pc_tree, build_rainbow_tree, generate, max_rainbow_forest, random_connected_graph, random_star_colored_graph,
    FamilyTag, VertexSet,
};

fn rainbow(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_rainbow_tree");
    for n in [20, 50, 100] {
        let g = random_star_colored_graph(n, 0.3, 7);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| build_rainbow_tree(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_pc_tree");
    for n in [20, 50, 100] {
        let g = random_connected_graph(n, 0.5, (n / 3) as u32, 11);
        group.bench_with_input(BenchmarkId::new("random", n), &g, |b, g| {
            b.iter(|| build_pc_tree(black_box(g), 3).unwrap())
        });
    }
    let (g, _) = generate(FamilyTag::G5, 5, 2, 0).unwrap();
    group.bench_function("extremal-G5", |b| b.iter(|| build_pc_tree(black_box(&g), 3).unwrap()));
    let fx = &repair_fixtures()[0];
    group.bench_function("repair", |b| {
        b.iter(|| build_pc_tree(black_box(&fx.graph), FIXTURE_DELTA0).unwrap())
    });
    group.finish();
}

fn intersection(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_rainbow_forest");
    for n in [20, 50, 100] {
        let g = random_connected_graph(n, 0.3, n as u32, 5);
        let all = VertexSet::full(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| max_rainbow_forest(black_box(g), &all, []))
        });
    }
    group.finish();
}

criterion_group!(benches, rainbow, pipeline, intersection);
criterion_main!(benches);
