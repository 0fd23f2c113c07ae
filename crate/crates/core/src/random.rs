//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Color, EdgeColoredGraph, EdgeId, VertexId, VertexSet};
use crate::matroid::MatroidView;
use crate::union_find::UnionFind;

/// Random connected graph from a seed: G(n, p) edges, then extra random
/// edges joining leftover components.
fn connected_pairs(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Vec<(VertexId, VertexId)> {
    let mut pairs = Vec::new();
    let mut uf = UnionFind::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                pairs.push((u, v));
                uf.union(u, v);
            }
        }
    }
    let mut order: Vec<VertexId> = (0..n).collect();
    order.shuffle(rng);
    for i in 1..n {
        let v = order[i];
        if !uf.same(order[0], v) {
            let u = order[rng.gen_range(0..i)];
            if !uf.same(u, v) {
                pairs.push((u.min(v), u.max(v)));
                uf.union(u, v);
            } else {
                pairs.push((order[0].min(v), order[0].max(v)));
                uf.union(order[0], v);
            }
        }
    }
    pairs.sort_unstable();
    pairs.dedup();
    pairs
}

/// Connected graph on `n` vertices, edge probability `p`, colors drawn
/// uniformly from `1..=colors`.
pub fn random_connected_graph(n: usize, p: f64, colors: Color, seed: u64) -> EdgeColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = connected_pairs(n, p, &mut rng);
    let colors = colors.max(1);
    EdgeColoredGraph::new(n, pairs.into_iter().map(|(u, v)| (u, v, rng.gen_range(1..=colors))))
        .expect("random pairs are simple")
}

/// Connected star-colored graph: every edge is assigned to one endpoint as
/// its center, and the edges centered at a vertex are split into a random
/// number of color classes.
pub fn random_star_colored_graph(n: usize, p: f64, seed: u64) -> EdgeColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs = connected_pairs(n, p, &mut rng);
    let mut centered: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        let c = if rng.gen_bool(0.5) { u } else { v };
        centered[c].push(i);
    }
    let mut color = vec![0 as Color; pairs.len()];
    let mut next: Color = 1;
    for group in centered {
        if group.is_empty() {
            continue;
        }
        let classes = rng.gen_range(1..=group.len());
        let base = next;
        for i in group {
            color[i] = base + rng.gen_range(0..classes) as Color;
        }
        next += classes as Color;
    }
    EdgeColoredGraph::new(n, pairs.iter().enumerate().map(|(i, &(u, v))| (u, v, color[i])))
        .expect("random pairs are simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_connected_and_deterministic() {
        for seed in 0..20 {
            let g = random_connected_graph(9, 0.3, 4, seed);
            assert!(g.is_connected());
            assert!(g.palette().iter().all(|&c| (1..=4).contains(&c)));
            assert_eq!(g.edges(), random_connected_graph(9, 0.3, 4, seed).edges());
            let s = random_star_colored_graph(9, 0.4, seed);
            assert!(s.is_connected() && s.is_star_colored());
        }
    }
}

/// Which hypothesis of the bridge construction an instance exercises.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BridgeCase {
    /// One bridge endpoint sees at least `δᶜ + 1` colors.
    Wide,
    /// Both bridge endpoints see exactly `δᶜ` colors.
    Tight,
}

/// Two dense blocks joined by a single edge `vw` whose color also appears
/// inside both blocks at `v` and at `w`, with minimum color degree exactly
/// `delta`. Vertex labels and edge ids are shuffled. Returns the graph and
/// the id of the joining edge.
pub fn random_bridge_instance(delta: usize, case: BridgeCase, seed: u64) -> (EdgeColoredGraph, usize) {
    assert!(delta >= 1, "delta must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let palette = (2 * delta + 2) as Color;
    loop {
        let (v_colors, w_colors) = match case {
            BridgeCase::Wide => (delta + 1, delta + rng.gen_range(0..=1)),
            BridgeCase::Tight => (delta, delta),
        };
        let mut edges: Vec<(VertexId, VertexId, Color)> = Vec::new();
        let mut next = 0;
        let v = block(&mut rng, delta, v_colors, palette, &mut next, &mut edges);
        let w = block(&mut rng, delta, w_colors, palette, &mut next, &mut edges);
        edges.push((v, w, 1));
        let n = next;
        let mut label: Vec<VertexId> = (0..n).collect();
        label.shuffle(&mut rng);
        let mut relabeled: Vec<(VertexId, VertexId, Color)> =
            edges.iter().map(|&(a, b, c)| (label[a], label[b], c)).collect();
        relabeled.shuffle(&mut rng);
        let (bv, bw) = (label[v], label[w]);
        let g = EdgeColoredGraph::new(n, relabeled).expect("blocks are simple");
        if g.min_color_degree() != delta {
            continue;
        }
        let e = g.edge_between(bv, bw).expect("joining edge present");
        return (g, e);
    }
}

/// Appends a block: a hub adjacent to `hub_colors` others with pairwise
/// distinct colors (one of them color 1), and a randomly colored clique on
/// the others in which every vertex sees at least `delta` colors.
fn block(
    rng: &mut ChaCha8Rng,
    delta: usize,
    hub_colors: usize,
    palette: Color,
    next: &mut usize,
    edges: &mut Vec<(VertexId, VertexId, Color)>,
) -> VertexId {
    let others = hub_colors.max(delta + 1) + rng.gen_range(0..=2);
    let hub = *next;
    let first = hub + 1;
    *next += others + 1;
    loop {
        let mut local = Vec::new();
        let mut hub_palette: Vec<Color> = (2..=palette).collect();
        hub_palette.shuffle(rng);
        let mut hub_edge_colors = vec![1];
        hub_edge_colors.extend(hub_palette.into_iter().take(hub_colors - 1));
        let mut targets: Vec<VertexId> = (first..first + others).collect();
        targets.shuffle(rng);
        for (&t, &c) in targets.iter().zip(&hub_edge_colors) {
            local.push((hub, t, c));
        }
        for a in first..first + others {
            for b in a + 1..first + others {
                local.push((a, b, rng.gen_range(1..=palette)));
            }
        }
        let seen = |x: VertexId| {
            let mut cs: Vec<Color> = local
                .iter()
                .filter(|&&(a, b, _)| a == x || b == x)
                .map(|&(_, _, c)| c)
                .collect();
            cs.sort_unstable();
            cs.dedup();
            cs.len()
        };
        if (first..first + others).all(|x| seen(x) >= delta) {
            edges.extend(local);
            return hub;
        }
    }
}

/// A graphic view and a partition view of `graph` on a shared random ground
/// set: a random vertex subset, an optional restriction and contraction
/// applied to both, and some forbidden colors. The two views come back in
/// random order.
pub fn random_matroid_pair(graph: &EdgeColoredGraph, seed: u64) -> (MatroidView<'_>, MatroidView<'_>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut vertices = VertexSet::new(graph.n());
    for v in 0..graph.n() {
        if rng.gen_bool(0.85) {
            vertices.insert(v);
        }
    }
    let mut graphic = MatroidView::graphic(graph, &vertices);
    let mut partition = MatroidView::partition(graph, graphic.ground().to_vec());
    if rng.gen_bool(0.3) {
        let keep: Vec<EdgeId> = graphic.ground().iter().copied().filter(|_| rng.gen_bool(0.8)).collect();
        graphic = graphic.restrict(&keep);
        partition = partition.restrict(&keep);
    }
    if rng.gen_bool(0.3) && !graphic.ground().is_empty() {
        let f = vec![graphic.ground()[rng.gen_range(0..graphic.ground().len())]];
        graphic = graphic.contract(&f);
        partition = partition.contract(&f);
    }
    if rng.gen_bool(0.3) {
        let palette = graph.palette();
        if !palette.is_empty() {
            partition = partition.forbid_colors([palette[rng.gen_range(0..palette.len())]]);
        }
    }
    if rng.gen_bool(0.5) {
        (graphic, partition)
    } else {
        (partition, graphic)
    }
}
