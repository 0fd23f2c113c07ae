//! Rainbow trees in connected star-colored graphs.
//!
//! The tree grows from a root. A boundary edge with an unused color is
//! attached directly; otherwise the tree is rebuilt on its own vertex set
//! (one-edge exchange) or on its vertex set minus one vertex (two-edge
//! exchange) by a max rainbow forest computation that avoids the colors of
//! the edges about to be attached. Every accepted step grows the tree by one
//! vertex, and the loop stops at `min(n, 2δᶜ + 1)` vertices or when no step
//! applies.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::RainbowError;
use crate::graph::{Color, EdgeColoredGraph, EdgeId, VertexId, VertexSet};
use crate::matroid::max_rainbow_forest;
use crate::tree::{check_tree, ColoredTree, TreeMode};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RainbowTrace {
    pub greedy_steps: usize,
    pub one_edge_exchanges: usize,
    pub two_edge_exchanges: usize,
}

#[derive(Clone, Debug)]
pub struct RainbowRun {
    pub tree: ColoredTree,
    pub trace: RainbowTrace,
}

/// Builds a rainbow tree rooted at vertex 0.
pub fn build_rainbow_tree(graph: &EdgeColoredGraph) -> Result<ColoredTree, RainbowError> {
    build_rainbow_tree_from(graph, 0).map(|run| run.tree)
}

pub fn build_rainbow_tree_from(graph: &EdgeColoredGraph, root: VertexId) -> Result<RainbowRun, RainbowError> {
    if root >= graph.n() {
        return Err(RainbowError::BadRoot(root));
    }
    if !graph.is_connected() {
        return Err(RainbowError::NotConnected);
    }
    if let Some(color) = graph.first_non_star_color() {
        return Err(RainbowError::NotStarColored(color));
    }

    let target = graph.target_order();
    let mut state = Growth::new(graph, root);
    let mut trace = RainbowTrace::default();

    while state.order() < target {
        if state.greedy_step() {
            trace.greedy_steps += 1;
        } else if state.one_edge_exchange() {
            trace.one_edge_exchanges += 1;
        } else if state.two_edge_exchange() {
            trace.two_edge_exchanges += 1;
        } else {
            break;
        }
        debug_assert!(check_tree(graph, &state.tree()).is_ok());
    }

    Ok(RainbowRun {
        tree: state.tree(),
        trace,
    })
}

struct Growth<'g> {
    graph: &'g EdgeColoredGraph,
    members: VertexSet,
    edges: Vec<EdgeId>,
    used: BTreeSet<Color>,
}

impl<'g> Growth<'g> {
    fn new(graph: &'g EdgeColoredGraph, root: VertexId) -> Self {
        let mut members = VertexSet::new(graph.n());
        members.insert(root);
        Growth {
            graph,
            members,
            edges: Vec::new(),
            used: BTreeSet::new(),
        }
    }

    fn order(&self) -> usize {
        self.members.len()
    }

    fn tree(&self) -> ColoredTree {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        ColoredTree {
            vertices: self.members.to_vec(),
            edges,
            mode: TreeMode::Rainbow,
        }
    }

    /// `(edge, inside endpoint, outside endpoint)` for every boundary edge,
    /// ascending by edge id.
    fn boundary(&self) -> Vec<(EdgeId, VertexId, VertexId)> {
        self.graph
            .boundary(&self.members)
            .into_iter()
            .map(|e| {
                let edge = self.graph.edge(e);
                if self.members.contains(edge.u) {
                    (e, edge.u, edge.v)
                } else {
                    (e, edge.v, edge.u)
                }
            })
            .collect()
    }

    fn replace(&mut self, members: VertexSet, edges: Vec<EdgeId>) {
        self.used = edges.iter().map(|&e| self.graph.color(e)).collect();
        debug_assert_eq!(self.used.len(), edges.len(), "replacement tree must be rainbow");
        debug_assert_eq!(edges.len() + 1, members.len());
        self.members = members;
        self.edges = edges;
    }

    fn greedy_step(&mut self) -> bool {
        let Some((e, _, x)) = self
            .boundary()
            .into_iter()
            .find(|&(e, _, _)| !self.used.contains(&self.graph.color(e)))
        else {
            return false;
        };
        self.members.insert(x);
        self.edges.push(e);
        self.used.insert(self.graph.color(e));
        true
    }

    fn one_edge_exchange(&mut self) -> bool {
        let spanning = self.order() - 1;
        let mut memo: HashMap<Color, bool> = HashMap::new();
        for (e, _, x) in self.boundary() {
            let color = self.graph.color(e);
            if memo.get(&color) == Some(&false) {
                continue;
            }
            let forest = max_rainbow_forest(self.graph, &self.members, [color]);
            if forest.len() == spanning {
                let mut members = self.members.clone();
                members.insert(x);
                let mut edges = forest;
                edges.push(e);
                self.replace(members, edges);
                return true;
            }
            memo.insert(color, false);
        }
        false
    }

    fn two_edge_exchange(&mut self) -> bool {
        let order = self.order();
        let mut failed: HashMap<(VertexId, Color, Color), ()> = HashMap::new();
        for (e0, u, x) in self.boundary() {
            let c0 = self.graph.color(e0);
            let mut pendants: Vec<(EdgeId, VertexId)> = self
                .graph
                .neighbors(x)
                .iter()
                .filter(|&&(y, e)| !self.members.contains(y) && self.graph.color(e) != c0)
                .map(|&(y, e)| (e, y))
                .collect();
            pendants.sort_unstable();
            for (e, y) in pendants {
                let c1 = self.graph.color(e);
                let key_colors = (c0.min(c1), c0.max(c1));
                for v in self.members.iter().filter(|&v| v != u).collect::<Vec<_>>() {
                    let key = (v, key_colors.0, key_colors.1);
                    if failed.contains_key(&key) {
                        continue;
                    }
                    let mut reduced = self.members.clone();
                    reduced.remove(v);
                    let forest = max_rainbow_forest(self.graph, &reduced, [c0, c1]);
                    if forest.len() + 2 == order {
                        reduced.insert(x);
                        reduced.insert(y);
                        let mut edges = forest;
                        edges.push(e0);
                        edges.push(e);
                        self.replace(reduced, edges);
                        return true;
                    }
                    failed.insert(key, ());
                }
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::verify_tree;

    #[test]
    fn star_with_distinct_leaves_is_grown_greedily() {
        let g = EdgeColoredGraph::new(4, [(0, 1, 1), (0, 2, 2), (0, 3, 3)]).unwrap();
        let run = build_rainbow_tree_from(&g, 0).unwrap();
        assert!(run.tree.order() >= 3);
        assert!(verify_tree(&g, &run.tree));
        assert_eq!(run.trace.one_edge_exchanges + run.trace.two_edge_exchanges, 0);
    }

    #[test]
    fn rainbow_path_is_followed() {
        let g = EdgeColoredGraph::new(5, [(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 4, 4)]).unwrap();
        let t = build_rainbow_tree(&g).unwrap();
        assert_eq!(t.order(), 3);
        assert!(verify_tree(&g, &t));
    }

    #[test]
    fn rejects_non_star_colored_and_disconnected() {
        let p4 = EdgeColoredGraph::new(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1)]).unwrap();
        assert_eq!(build_rainbow_tree(&p4), Err(RainbowError::NotStarColored(1)));
        let split = EdgeColoredGraph::new(3, [(0, 1, 1)]).unwrap();
        assert_eq!(build_rainbow_tree(&split), Err(RainbowError::NotConnected));
        assert!(matches!(
            build_rainbow_tree_from(&split, 9),
            Err(RainbowError::BadRoot(9))
        ));
    }

    #[test]
    fn exchange_recovers_a_blocked_color() {
        // greedy from 0 takes 0-1 (c3) and 0-2 (c1); vertex 3 is reachable only
        // through 2-3 (c1), so the tree on {0,1,2} must be rebuilt without c1.
        let g = EdgeColoredGraph::new(4, [(0, 2, 1), (1, 2, 2), (0, 1, 3), (2, 3, 1)]).unwrap();
        assert!(g.is_star_colored());
        let run = build_rainbow_tree_from(&g, 0).unwrap();
        assert!(verify_tree(&g, &run.tree));
        assert_eq!(run.tree.order(), g.target_order());
    }
}
