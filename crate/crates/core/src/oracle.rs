//! Brute-force reference implementations. Exponential by design and guarded
//! by explicit size bounds; never used on the production path.

use std::collections::HashSet;

use crate::error::OracleError;
use crate::graph::{EdgeColoredGraph, EdgeId, VertexId};
use crate::matroid::MatroidView;
use crate::sat::CnfFormula;
use crate::tree::{ColoredTree, TreeMode};
use crate::union_find::UnionFind;

pub const DEFAULT_BOUND: usize = 12;
pub const BOUND_ENV: &str = "PCTREE_ORACLE_BOUND";
const MATROID_GROUND_LIMIT: usize = 16;
const SAT_VARIABLE_LIMIT: usize = 20;
const VERTEX_LIMIT: usize = 64;

/// Vertex bound for [`max_colored_tree`], from `PCTREE_ORACLE_BOUND` when set.
pub fn oracle_bound() -> usize {
    std::env::var(BOUND_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_BOUND)
}

/// Largest tree satisfying `mode`, for graphs with at most [`oracle_bound`] vertices.
pub fn max_colored_tree(graph: &EdgeColoredGraph, mode: TreeMode) -> Result<(usize, ColoredTree), OracleError> {
    max_colored_tree_bounded(graph, mode, oracle_bound())
}

pub fn max_colored_tree_bounded(
    graph: &EdgeColoredGraph,
    mode: TreeMode,
    bound: usize,
) -> Result<(usize, ColoredTree), OracleError> {
    let tree = search(graph, mode, bound, graph.n())?;
    Ok((tree.order(), tree))
}

/// Some tree of order at least `target` satisfying `mode`, if one exists.
pub fn find_colored_tree(
    graph: &EdgeColoredGraph,
    mode: TreeMode,
    target: usize,
    bound: usize,
) -> Result<Option<ColoredTree>, OracleError> {
    let tree = search(graph, mode, bound, target)?;
    Ok((tree.order() >= target).then_some(tree))
}

/// Depth-first growth over partial trees from every root. A state is the
/// vertex set plus exactly the information that constrains future growth:
/// for rainbow trees, the used colors that still occur outside the set; for
/// properly colored trees, which boundary edges are blocked.
fn search(graph: &EdgeColoredGraph, mode: TreeMode, bound: usize, stop_at: usize) -> Result<ColoredTree, OracleError> {
    let n = graph.n();
    if n > bound.min(VERTEX_LIMIT) {
        return Err(OracleError::BoundExceeded {
            size: n,
            bound: bound.min(VERTEX_LIMIT),
        });
    }
    if n == 0 || !graph.is_connected() {
        return Err(OracleError::NotConnected);
    }
    let mut best = ColoredTree::single(0, mode);
    let mut seen: HashSet<(u64, Vec<usize>)> = HashSet::new();
    let mut stack: Vec<(u64, Vec<EdgeId>)> = Vec::new();
    for root in 0..n {
        stack.push((1u64 << root, Vec::new()));
        while let Some((mask, edges)) = stack.pop() {
            if edges.len() + 1 > best.order() {
                best = ColoredTree::from_edges(graph, edges.iter().copied(), mode);
                if best.order() >= stop_at {
                    return Ok(best);
                }
            }
            for e in extensions(graph, mode, mask, &edges) {
                let edge = graph.edge(e);
                let next_mask = mask | (1u64 << edge.u) | (1u64 << edge.v);
                let mut next_edges = edges.clone();
                next_edges.push(e);
                let key = (next_mask, state_key(graph, mode, next_mask, &next_edges));
                if seen.insert(key) {
                    stack.push((next_mask, next_edges));
                }
            }
        }
    }
    Ok(best)
}

fn inside(mask: u64, v: VertexId) -> bool {
    mask >> v & 1 == 1
}

fn extensions(graph: &EdgeColoredGraph, mode: TreeMode, mask: u64, edges: &[EdgeId]) -> Vec<EdgeId> {
    let mut out = Vec::new();
    for (e, edge) in graph.edges().iter().enumerate() {
        let (a, b) = (inside(mask, edge.u), inside(mask, edge.v));
        if a == b {
            continue;
        }
        let x = if a { edge.u } else { edge.v };
        let blocked = edges.iter().any(|&f| {
            let other = graph.edge(f);
            other.color == edge.color && (mode == TreeMode::Rainbow || other.touches(x))
        });
        if !blocked {
            out.push(e);
        }
    }
    out
}

fn state_key(graph: &EdgeColoredGraph, mode: TreeMode, mask: u64, edges: &[EdgeId]) -> Vec<usize> {
    match mode {
        TreeMode::Rainbow => {
            let mut used: Vec<usize> = edges
                .iter()
                .map(|&e| graph.color(e))
                .filter(|&c| {
                    graph
                        .edges()
                        .iter()
                        .any(|x| x.color == c && !(inside(mask, x.u) && inside(mask, x.v)))
                })
                .map(|c| c as usize)
                .collect();
            used.sort_unstable();
            used
        }
        TreeMode::ProperlyColored => {
            let open = extensions(graph, mode, mask, edges);
            graph
                .edges()
                .iter()
                .enumerate()
                .filter(|&(e, x)| inside(mask, x.u) != inside(mask, x.v) && open.binary_search(&e).is_err())
                .map(|(e, _)| e)
                .collect()
        }
    }
}

/// Size of a largest common independent set, by subset enumeration.
pub fn brute_matroid_intersection(m1: &MatroidView<'_>, m2: &MatroidView<'_>) -> Result<usize, OracleError> {
    let ground = m1.ground();
    if ground != m2.ground() {
        return Err(crate::error::MatroidError::MismatchedGrounds.into());
    }
    if ground.len() > MATROID_GROUND_LIMIT {
        return Err(OracleError::BoundExceeded {
            size: ground.len(),
            bound: MATROID_GROUND_LIMIT,
        });
    }
    let mut best = 0;
    for mask in 0u32..(1u32 << ground.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let subset: Vec<EdgeId> = (0..ground.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| ground[i])
            .collect();
        if m1.is_independent(&subset)? && m2.is_independent(&subset)? {
            best = size;
        }
    }
    Ok(best)
}

/// Largest number of simultaneously satisfiable clauses.
pub fn max_sat_brute(formula: &CnfFormula) -> Result<usize, OracleError> {
    let s = formula.vars();
    if s > SAT_VARIABLE_LIMIT {
        return Err(OracleError::BoundExceeded {
            size: s,
            bound: SAT_VARIABLE_LIMIT,
        });
    }
    let mut best = 0;
    let mut assignment = vec![false; s];
    for bits in 0u32..(1u32 << s) {
        for (i, slot) in assignment.iter_mut().enumerate() {
            *slot = bits >> i & 1 == 1;
        }
        best = best.max(formula.satisfied(&assignment));
    }
    Ok(best)
}

/// Cut edges found by deleting each edge and recounting components.
pub fn naive_cut_edges(graph: &EdgeColoredGraph) -> Vec<EdgeId> {
    let count = |skip: Option<EdgeId>| {
        let mut uf = UnionFind::new(graph.n());
        let mut parts = graph.n();
        for (e, edge) in graph.edges().iter().enumerate() {
            if Some(e) != skip && uf.union(edge.u, edge.v) {
                parts -= 1;
            }
        }
        parts
    };
    let base = count(None);
    (0..graph.m()).filter(|&e| count(Some(e)) > base).collect()
}

/// Independent tree check by plain adjacency scans: `edges` must form a
/// tree and satisfy `mode`.
pub fn naive_is_colored_tree(graph: &EdgeColoredGraph, edges: &[EdgeId], mode: TreeMode) -> bool {
    if edges.iter().any(|&e| e >= graph.m()) {
        return false;
    }
    let mut vertices: Vec<VertexId> = edges.iter().flat_map(|&e| [graph.edge(e).u, graph.edge(e).v]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    if !edges.is_empty() && vertices.len() != edges.len() + 1 {
        return false;
    }
    // connectivity by repeated relaxation
    if let Some(&start) = vertices.first() {
        let mut reached = vec![start];
        let mut changed = true;
        while changed {
            changed = false;
            for &e in edges {
                let edge = graph.edge(e);
                let (a, b) = (reached.contains(&edge.u), reached.contains(&edge.v));
                if a != b {
                    reached.push(if a { edge.v } else { edge.u });
                    changed = true;
                }
            }
        }
        if reached.len() != vertices.len() {
            return false;
        }
    }
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            if e == f {
                return false;
            }
            let (x, y) = (graph.edge(e), graph.edge(f));
            let adjacent = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
            let conflict = match mode {
                TreeMode::Rainbow => x.color == y.color,
                TreeMode::ProperlyColored => adjacent && x.color == y.color,
            };
            if conflict {
                return false;
            }
        }
    }
    true
}
