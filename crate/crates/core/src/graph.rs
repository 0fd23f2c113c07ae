//! Edge-colored simple graphs and the structural primitives the solvers share.
//!
//! Vertices are dense ids `0..n`. Edges are stored with `u < v` and keep the
//! id they were inserted with, so derived graphs can map back to their source.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::union_find::UnionFind;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Color = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub color: Color,
}

impl Edge {
    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

/// Membership set over dense ids; used for both vertex and edge subsets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IdSet {
    bits: Vec<bool>,
    len: usize,
}

pub type VertexSet = IdSet;
pub type EdgeSet = IdSet;

impl IdSet {
    pub fn new(universe: usize) -> Self {
        IdSet {
            bits: vec![false; universe],
            len: 0,
        }
    }

    pub fn full(universe: usize) -> Self {
        IdSet {
            bits: vec![true; universe],
            len: universe,
        }
    }

    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut set = IdSet::new(universe);
        for id in ids {
            set.insert(id);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, id: usize) -> bool {
        self.bits.get(id).copied().unwrap_or(false)
    }

    /// Panics if `id` is outside the universe.
    pub fn insert(&mut self, id: usize) -> bool {
        let fresh = !self.bits[id];
        if fresh {
            self.bits[id] = true;
            self.len += 1;
        }
        fresh
    }

    pub fn remove(&mut self, id: usize) -> bool {
        let present = self.contains(id);
        if present {
            self.bits[id] = false;
            self.len -= 1;
        }
        present
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl EdgeColoredGraph {
    /// Builds a simple graph; rejects loops, parallel edges, color 0 and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (VertexId, VertexId, Color)>) -> Result<Self, GraphError> {
        let mut g = EdgeColoredGraph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            index: HashMap::new(),
        };
        for (u, v, color) in edges {
            g.push_edge(u, v, color)?;
        }
        Ok(g)
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId, color: Color) -> Result<EdgeId, GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if color == 0 {
            return Err(GraphError::ZeroColor(u, v));
        }
        let (a, b) = (u.min(v), u.max(v));
        if self.index.contains_key(&(a, b)) {
            return Err(GraphError::ParallelEdge(a, b));
        }
        let id = self.edges.len();
        self.edges.push(Edge { u: a, v: b, color });
        self.adjacency[a].push((b, id));
        self.adjacency[b].push((a, id));
        self.index.insert((a, b), id);
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        self.edges[e]
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.edges[e].color
    }

    /// `(neighbor, edge id)` pairs in insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.index.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn max_color(&self) -> Color {
        self.edges.iter().map(|e| e.color).max().unwrap_or(0)
    }

    /// Distinct colors in ascending order.
    pub fn palette(&self) -> Vec<Color> {
        let mut colors: Vec<Color> = self.edges.iter().map(|e| e.color).collect();
        colors.sort_unstable();
        colors.dedup();
        colors
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Sorted distinct colors on edges at `v`.
    pub fn colors_at(&self, v: VertexId) -> Vec<Color> {
        let mut colors: Vec<Color> = self.adjacency[v].iter().map(|&(_, e)| self.edges[e].color).collect();
        colors.sort_unstable();
        colors.dedup();
        colors
    }

    pub fn color_degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.colors_at(v).len())
    }

    /// Minimum color degree; 0 for the empty graph.
    pub fn min_color_degree(&self) -> usize {
        (0..self.n).map(|v| self.colors_at(v).len()).min().unwrap_or(0)
    }

    /// Number of vertices a threshold tree must reach: `min(n, 2δᶜ + 1)`.
    pub fn target_order(&self) -> usize {
        self.n.min(2 * self.min_color_degree() + 1)
    }

    pub fn vertex_set(&self, ids: impl IntoIterator<Item = VertexId>) -> Result<VertexSet, GraphError> {
        let mut set = VertexSet::new(self.n);
        for v in ids {
            self.check_vertex(v)?;
            set.insert(v);
        }
        Ok(set)
    }

    /// Edges with exactly one endpoint in `x`, ascending by id.
    pub fn boundary(&self, x: &VertexSet) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| x.contains(e.u) != x.contains(e.v))
            .map(|(id, _)| id)
            .collect()
    }

    /// Edges with both endpoints in `x`, ascending by id.
    pub fn inner_edges(&self, x: &VertexSet) -> Vec<EdgeId> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| x.contains(e.u) && x.contains(e.v))
            .map(|(id, _)| id)
            .collect()
    }

    pub fn induced_subgraph(&self, x: &VertexSet) -> Subgraph {
        let vertex_origin: Vec<VertexId> = x.iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in vertex_origin.iter().enumerate() {
            new_id[v] = i;
        }
        let edge_origin = self.inner_edges(x);
        let graph = EdgeColoredGraph::new(
            vertex_origin.len(),
            edge_origin.iter().map(|&e| {
                let edge = self.edges[e];
                (new_id[edge.u], new_id[edge.v], edge.color)
            }),
        )
        .expect("induced subgraph of a simple graph is simple");
        Subgraph {
            graph,
            vertex_origin,
            edge_origin,
        }
    }

    /// Same vertex set, only the listed edges (kept in ascending id order),
    /// each recolored by `recolor`.
    pub fn spanning_subgraph(&self, keep: &[EdgeId], mut recolor: impl FnMut(EdgeId) -> Color) -> Subgraph {
        let mut edge_origin = keep.to_vec();
        edge_origin.sort_unstable();
        edge_origin.dedup();
        let graph = EdgeColoredGraph::new(
            self.n,
            edge_origin.iter().map(|&e| {
                let edge = self.edges[e];
                (edge.u, edge.v, recolor(e))
            }),
        )
        .expect("spanning subgraph of a simple graph is simple");
        Subgraph {
            graph,
            vertex_origin: (0..self.n).collect(),
            edge_origin,
        }
    }

    pub fn components(&self) -> ComponentLabels {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for v in 0..self.n {
            let root = uf.find(v);
            if label[root] == usize::MAX {
                label[root] = count;
                count += 1;
            }
            label[v] = label[root];
        }
        ComponentLabels { labels: label, count }
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().count <= 1
    }

    /// Bridges, ascending by id, via iterative DFS lowpoints.
    pub fn cut_edges(&self) -> Vec<EdgeId> {
        const UNSEEN: usize = usize::MAX;
        let mut disc = vec![UNSEEN; self.n];
        let mut low = vec![0usize; self.n];
        let mut bridges = Vec::new();
        let mut clock = 0;
        for start in 0..self.n {
            if disc[start] != UNSEEN {
                continue;
            }
            disc[start] = clock;
            low[start] = clock;
            clock += 1;
            // (vertex, edge used to enter it, next adjacency index)
            let mut stack: Vec<(VertexId, Option<EdgeId>, usize)> = vec![(start, None, 0)];
            while let Some(top) = stack.last_mut() {
                let (v, parent_edge, cursor) = *top;
                if let Some(&(w, e)) = self.adjacency[v].get(cursor) {
                    top.2 += 1;
                    if Some(e) == parent_edge {
                        continue;
                    }
                    if disc[w] == UNSEEN {
                        disc[w] = clock;
                        low[w] = clock;
                        clock += 1;
                        stack.push((w, Some(e), 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let (Some(e), Some(&(parent, _, _))) = (parent_edge, stack.last()) {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            bridges.push(e);
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// Connected components of every color class, ordered by smallest edge id.
    pub fn monochromatic_components(&self) -> Vec<MonoComponent> {
        let mut by_color: BTreeMap<Color, Vec<EdgeId>> = BTreeMap::new();
        for (id, e) in self.edges.iter().enumerate() {
            by_color.entry(e.color).or_default().push(id);
        }
        let mut out: Vec<MonoComponent> = Vec::new();
        for (color, ids) in by_color {
            let mut local: HashMap<VertexId, usize> = HashMap::new();
            for &id in &ids {
                let e = self.edges[id];
                for x in [e.u, e.v] {
                    let next = local.len();
                    local.entry(x).or_insert(next);
                }
            }
            let mut uf = UnionFind::new(local.len());
            for &id in &ids {
                let e = self.edges[id];
                uf.union(local[&e.u], local[&e.v]);
            }
            let mut groups: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
            for &id in &ids {
                groups.entry(uf.find(local[&self.edges[id].u])).or_default().push(id);
            }
            out.extend(groups.into_values().map(|edges| MonoComponent { color, edges }));
        }
        out.sort_by_key(|c| c.edges[0]);
        out
    }

    /// Admissible star centers of an edge set: `Ok(None)` when the edges do
    /// not share a common endpoint, one center for larger stars, both
    /// endpoints (lower id first) for a single edge.
    pub fn star_centers(&self, comp: &[EdgeId]) -> Result<Option<Vec<VertexId>>, GraphError> {
        let first = match comp.first() {
            Some(&e) => self.edges[e],
            None => return Err(GraphError::EmptyComponent),
        };
        if comp.len() == 1 {
            return Ok(Some(vec![first.u, first.v]));
        }
        let centers: Vec<VertexId> = [first.u, first.v]
            .into_iter()
            .filter(|&c| comp.iter().all(|&e| self.edges[e].touches(c)))
            .collect();
        Ok(if centers.is_empty() { None } else { Some(centers) })
    }

    pub fn is_star(&self, comp: &[EdgeId]) -> Result<bool, GraphError> {
        Ok(self.star_centers(comp)?.is_some())
    }

    /// Every color class, taken as a whole, is a star.
    pub fn is_star_colored(&self) -> bool {
        self.first_non_star_color().is_none()
    }

    pub(crate) fn first_non_star_color(&self) -> Option<Color> {
        let mut by_color: BTreeMap<Color, Vec<EdgeId>> = BTreeMap::new();
        for (id, e) in self.edges.iter().enumerate() {
            by_color.entry(e.color).or_default().push(id);
        }
        by_color
            .into_iter()
            .find(|(_, ids)| !matches!(self.star_centers(ids), Ok(Some(_))))
            .map(|(c, _)| c)
    }

    /// Every monochromatic component is a star (weaker than star-colored:
    /// a color may form several vertex-disjoint stars).
    pub fn components_are_stars(&self) -> bool {
        self.monochromatic_components()
            .iter()
            .all(|c| matches!(self.star_centers(&c.edges), Ok(Some(_))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoComponent {
    pub color: Color,
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabels {
    pub labels: Vec<usize>,
    pub count: usize,
}

/// A graph derived from another one, with maps back to the source ids.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: EdgeColoredGraph,
    /// new vertex id -> source vertex id
    pub vertex_origin: Vec<VertexId>,
    /// new edge id -> source edge id
    pub edge_origin: Vec<EdgeId>,
}
