use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Color, EdgeColoredGraph, EdgeId, VertexId};
use crate::union_find::UnionFind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TreeMode {
    /// All edge colors pairwise distinct.
    Rainbow,
    /// Edges sharing an endpoint have distinct colors.
    ProperlyColored,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredTree {
    /// Ascending.
    pub vertices: Vec<VertexId>,
    /// Ascending edge ids of the graph the tree lives in.
    pub edges: Vec<EdgeId>,
    pub mode: TreeMode,
}

impl ColoredTree {
    pub fn single(v: VertexId, mode: TreeMode) -> Self {
        ColoredTree {
            vertices: vec![v],
            edges: Vec::new(),
            mode,
        }
    }

    /// Vertex set is read off the edges; `edges` must be nonempty.
    pub fn from_edges(graph: &EdgeColoredGraph, edges: impl IntoIterator<Item = EdgeId>, mode: TreeMode) -> Self {
        let mut edges: Vec<EdgeId> = edges.into_iter().collect();
        edges.sort_unstable();
        edges.dedup();
        let vertices: BTreeSet<VertexId> = edges
            .iter()
            .flat_map(|&e| {
                let edge = graph.edge(e);
                [edge.u, edge.v]
            })
            .collect();
        ColoredTree {
            vertices: vertices.into_iter().collect(),
            edges,
            mode,
        }
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn with_mode(mut self, mode: TreeMode) -> Self {
        self.mode = mode;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeDefect {
    Empty,
    EdgeOutOfRange(EdgeId),
    VertexOutOfRange(VertexId),
    EdgeCount { vertices: usize, edges: usize },
    EdgeLeavesVertexSet(EdgeId),
    NotAcyclic(EdgeId),
    RepeatedColor(Color),
    ClashAt { vertex: VertexId, color: Color },
}

impl fmt::Display for TreeDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeDefect::Empty => write!(f, "tree has no vertices"),
            TreeDefect::EdgeOutOfRange(e) => write!(f, "edge id {e} not in graph"),
            TreeDefect::VertexOutOfRange(v) => write!(f, "vertex {v} not in graph"),
            TreeDefect::EdgeCount { vertices, edges } => {
                write!(f, "{edges} edges on {vertices} vertices")
            }
            TreeDefect::EdgeLeavesVertexSet(e) => write!(f, "edge {e} has an endpoint outside the tree"),
            TreeDefect::NotAcyclic(e) => write!(f, "edge {e} closes a cycle"),
            TreeDefect::RepeatedColor(c) => write!(f, "color {c} used twice"),
            TreeDefect::ClashAt { vertex, color } => {
                write!(f, "two edges of color {color} meet at vertex {vertex}")
            }
        }
    }
}

/// Checks every structural and coloring invariant of `tree` against `graph`.
pub fn check_tree(graph: &EdgeColoredGraph, tree: &ColoredTree) -> Result<(), TreeDefect> {
    if tree.vertices.is_empty() {
        return Err(TreeDefect::Empty);
    }
    let mut members = vec![false; graph.n()];
    for &v in &tree.vertices {
        if v >= graph.n() {
            return Err(TreeDefect::VertexOutOfRange(v));
        }
        members[v] = true;
    }
    let distinct_vertices = members.iter().filter(|&&b| b).count();
    let distinct_edges: BTreeSet<EdgeId> = tree.edges.iter().copied().collect();
    if distinct_vertices != tree.vertices.len()
        || distinct_edges.len() != tree.edges.len()
        || tree.edges.len() + 1 != tree.vertices.len()
    {
        return Err(TreeDefect::EdgeCount {
            vertices: tree.vertices.len(),
            edges: tree.edges.len(),
        });
    }
    let mut uf = UnionFind::new(graph.n());
    for &e in &tree.edges {
        if e >= graph.m() {
            return Err(TreeDefect::EdgeOutOfRange(e));
        }
        let edge = graph.edge(e);
        if !members[edge.u] || !members[edge.v] {
            return Err(TreeDefect::EdgeLeavesVertexSet(e));
        }
        if !uf.union(edge.u, edge.v) {
            return Err(TreeDefect::NotAcyclic(e));
        }
    }
    match tree.mode {
        TreeMode::Rainbow => {
            let mut seen = BTreeSet::new();
            for &e in &tree.edges {
                let c = graph.color(e);
                if !seen.insert(c) {
                    return Err(TreeDefect::RepeatedColor(c));
                }
            }
        }
        TreeMode::ProperlyColored => {
            let mut seen = BTreeSet::new();
            for &e in &tree.edges {
                let edge = graph.edge(e);
                for x in [edge.u, edge.v] {
                    if !seen.insert((x, edge.color)) {
                        return Err(TreeDefect::ClashAt {
                            vertex: x,
                            color: edge.color,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn verify_tree(graph: &EdgeColoredGraph, tree: &ColoredTree) -> bool {
    check_tree(graph, tree).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path4() -> EdgeColoredGraph {
        // 0-1 c1, 1-2 c2, 2-3 c1
        EdgeColoredGraph::new(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1)]).unwrap()
    }

    #[test]
    fn cherry_is_proper_but_not_rainbow() {
        let g = path4();
        let t = ColoredTree::from_edges(&g, [0, 1, 2], TreeMode::Rainbow);
        assert_eq!(check_tree(&g, &t), Err(TreeDefect::RepeatedColor(1)));
        assert!(verify_tree(&g, &t.with_mode(TreeMode::ProperlyColored)));
    }

    #[test]
    fn equal_colors_at_a_vertex_clash() {
        let g = EdgeColoredGraph::new(3, [(0, 1, 4), (1, 2, 4)]).unwrap();
        let t = ColoredTree::from_edges(&g, [0, 1], TreeMode::ProperlyColored);
        assert_eq!(check_tree(&g, &t), Err(TreeDefect::ClashAt { vertex: 1, color: 4 }));
    }

    #[test]
    fn rejects_cycles_and_wrong_counts() {
        let g = EdgeColoredGraph::new(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)]).unwrap();
        let cyc = ColoredTree {
            vertices: vec![0, 1, 2],
            edges: vec![0, 1, 2],
            mode: TreeMode::Rainbow,
        };
        assert!(matches!(check_tree(&g, &cyc), Err(TreeDefect::EdgeCount { .. })));
        let stray = ColoredTree {
            vertices: vec![0, 1],
            edges: vec![1],
            mode: TreeMode::Rainbow,
        };
        assert_eq!(check_tree(&g, &stray), Err(TreeDefect::EdgeLeavesVertexSet(1)));
        assert!(verify_tree(&g, &ColoredTree::single(2, TreeMode::Rainbow)));
    }
}
