//! Graphic and rank-1 partition matroids over the edge ids of a host graph,
//! and maximum common independent sets by shortest augmenting paths in the
//! exchange digraph.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{GraphError, MatroidError};
use crate::graph::{Color, EdgeColoredGraph, EdgeId, VertexId, VertexSet};
use crate::union_find::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatroidKind {
    /// Forests of the host graph restricted to `vertices`. Edges in
    /// `contracted` are treated as already present: `I` is independent iff
    /// `I ∪ contracted` is a forest.
    Graphic {
        vertices: VertexSet,
        contracted: Vec<EdgeId>,
    },
    /// At most one edge per color, none of a forbidden color.
    Partition { forbidden: BTreeSet<Color> },
}

#[derive(Clone, Debug)]
pub struct MatroidView<'g> {
    graph: &'g EdgeColoredGraph,
    ground: Vec<EdgeId>,
    kind: MatroidKind,
}

impl<'g> MatroidView<'g> {
    /// Graphic matroid of `G[vertices]`.
    pub fn graphic(graph: &'g EdgeColoredGraph, vertices: &VertexSet) -> Self {
        MatroidView {
            graph,
            ground: graph.inner_edges(vertices),
            kind: MatroidKind::Graphic {
                vertices: vertices.clone(),
                contracted: Vec::new(),
            },
        }
    }

    /// Rank-1-per-color partition matroid on `ground`.
    pub fn partition(graph: &'g EdgeColoredGraph, ground: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut ground: Vec<EdgeId> = ground.into_iter().collect();
        ground.sort_unstable();
        ground.dedup();
        MatroidView {
            graph,
            ground,
            kind: MatroidKind::Partition {
                forbidden: BTreeSet::new(),
            },
        }
    }

    pub fn ground(&self) -> &[EdgeId] {
        &self.ground
    }

    pub fn kind(&self) -> &MatroidKind {
        &self.kind
    }

    pub fn graph(&self) -> &'g EdgeColoredGraph {
        self.graph
    }

    /// `M|X`: keep only ground elements that are also in `keep`.
    pub fn restrict(&self, keep: &[EdgeId]) -> Self {
        let keep: BTreeSet<EdgeId> = keep.iter().copied().collect();
        MatroidView {
            graph: self.graph,
            ground: self.ground.iter().copied().filter(|e| keep.contains(e)).collect(),
            kind: self.kind.clone(),
        }
    }

    /// `M/F`. The edges of `f` leave the ground set. For a partition matroid
    /// this forbids every color of `f`; for a graphic matroid the edges are
    /// pre-merged into every forest check.
    pub fn contract(&self, f: &[EdgeId]) -> Self {
        let removed: BTreeSet<EdgeId> = f.iter().copied().collect();
        let ground = self.ground.iter().copied().filter(|e| !removed.contains(e)).collect();
        let kind = match &self.kind {
            MatroidKind::Partition { forbidden } => {
                let mut forbidden = forbidden.clone();
                forbidden.extend(f.iter().map(|&e| self.graph.color(e)));
                MatroidKind::Partition { forbidden }
            }
            MatroidKind::Graphic { vertices, contracted } => {
                let mut contracted = contracted.clone();
                contracted.extend(f.iter().copied());
                MatroidKind::Graphic {
                    vertices: vertices.clone(),
                    contracted,
                }
            }
        };
        MatroidView {
            graph: self.graph,
            ground,
            kind,
        }
    }

    /// Forbids the given colors outright (partition only; graphic views are
    /// returned unchanged).
    pub fn forbid_colors(&self, colors: impl IntoIterator<Item = Color>) -> Self {
        let mut out = self.clone();
        if let MatroidKind::Partition { forbidden } = &mut out.kind {
            forbidden.extend(colors);
        }
        out
    }

    fn in_ground(&self, e: EdgeId) -> bool {
        self.ground.binary_search(&e).is_ok()
    }

    pub fn is_independent(&self, set: &[EdgeId]) -> Result<bool, MatroidError> {
        for &e in set {
            if !self.in_ground(e) {
                return Err(MatroidError::OutsideGround(e));
            }
        }
        if let MatroidKind::Graphic { vertices, .. } = &self.kind {
            for &e in set {
                let edge = self.graph.edge(e);
                if !vertices.contains(edge.u) || !vertices.contains(edge.v) {
                    return Err(MatroidError::EdgeOutsideVertexSet { edge: e });
                }
            }
        }
        Ok(self.independent_unchecked(set))
    }

    fn independent_unchecked(&self, set: &[EdgeId]) -> bool {
        match &self.kind {
            MatroidKind::Graphic { contracted, .. } => {
                let mut uf = UnionFind::new(self.graph.n());
                contracted.iter().chain(set.iter()).all(|&e| {
                    let edge = self.graph.edge(e);
                    uf.union(edge.u, edge.v)
                })
            }
            MatroidKind::Partition { forbidden } => {
                let mut seen = BTreeSet::new();
                set.iter().all(|&e| {
                    let c = self.graph.color(e);
                    !forbidden.contains(&c) && seen.insert(c)
                })
            }
        }
    }

    fn circuits(&self, current: &[EdgeId], in_set: &[bool]) -> Vec<Option<Vec<EdgeId>>> {
        match &self.kind {
            MatroidKind::Graphic { contracted, .. } => {
                let forest = RootedForest::new(self.graph, contracted.iter().chain(current.iter()).copied());
                self.ground
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| {
                        if in_set[i] {
                            return None;
                        }
                        let edge = self.graph.edge(e);
                        forest
                            .path(edge.u, edge.v)
                            .map(|path| path.into_iter().filter(|f| current.contains(f)).collect())
                    })
                    .collect()
            }
            MatroidKind::Partition { forbidden } => {
                let holder: std::collections::BTreeMap<Color, EdgeId> =
                    current.iter().map(|&e| (self.graph.color(e), e)).collect();
                self.ground
                    .iter()
                    .enumerate()
                    .map(|(i, &e)| {
                        if in_set[i] {
                            return None;
                        }
                        let c = self.graph.color(e);
                        if forbidden.contains(&c) {
                            Some(Vec::new())
                        } else {
                            holder.get(&c).map(|&f| vec![f])
                        }
                    })
                    .collect()
            }
        }
    }
}

/// Parent pointers of a forest, for fundamental-circuit paths.
struct RootedForest {
    parent: Vec<Option<(VertexId, EdgeId)>>,
    depth: Vec<usize>,
    root: Vec<VertexId>,
}

impl RootedForest {
    fn new(graph: &EdgeColoredGraph, edges: impl Iterator<Item = EdgeId>) -> Self {
        let n = graph.n();
        let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        for e in edges {
            let edge = graph.edge(e);
            adj[edge.u].push((edge.v, e));
            adj[edge.v].push((edge.u, e));
        }
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut root = vec![usize::MAX; n];
        for s in 0..n {
            if root[s] != usize::MAX {
                continue;
            }
            root[s] = s;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(w, e) in &adj[v] {
                    if root[w] == usize::MAX {
                        root[w] = s;
                        parent[w] = Some((v, e));
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        RootedForest { parent, depth, root }
    }

    /// Edge ids on the forest path between `a` and `b`, or `None` when they
    /// lie in different trees.
    fn path(&self, mut a: VertexId, mut b: VertexId) -> Option<Vec<EdgeId>> {
        if self.root[a] != self.root[b] {
            return None;
        }
        let mut path = Vec::new();
        while self.depth[a] > self.depth[b] {
            let (p, e) = self.parent[a].expect("non-root has a parent");
            path.push(e);
            a = p;
        }
        while self.depth[b] > self.depth[a] {
            let (p, e) = self.parent[b].expect("non-root has a parent");
            path.push(e);
            b = p;
        }
        while a != b {
            let (pa, ea) = self.parent[a].expect("non-root has a parent");
            let (pb, eb) = self.parent[b].expect("non-root has a parent");
            path.push(ea);
            path.push(eb);
            a = pa;
            b = pb;
        }
        Some(path)
    }
}

/// Maximum-cardinality set independent in both views, by repeated shortest
/// augmenting paths (BFS, ties broken by smallest edge id). Returns the set
/// in ascending edge id order.
pub fn max_common_independent(m1: &MatroidView<'_>, m2: &MatroidView<'_>) -> Result<Vec<EdgeId>, MatroidError> {
    if m1.ground != m2.ground {
        return Err(MatroidError::MismatchedGrounds);
    }
    let ground = &m1.ground;
    let size = ground.len();
    let mut in_set = vec![false; size];
    let mut current: Vec<EdgeId> = Vec::new();

    loop {
        let circuit1 = m1.circuits(&current, &in_set);
        let circuit2 = m2.circuits(&current, &in_set);
        let index_of = |e: EdgeId| ground.binary_search(&e).expect("circuit element in ground");

        // arcs y -> x (y in I, x outside) when I - y + x is M1-independent
        let mut out_of_member: Vec<Vec<usize>> = vec![Vec::new(); size];
        for (x, circuit) in circuit1.iter().enumerate() {
            if let Some(circuit) = circuit {
                for &y in circuit {
                    out_of_member[index_of(y)].push(x);
                }
            }
        }

        let mut pred = vec![usize::MAX; size];
        let mut seen = vec![false; size];
        let mut queue = VecDeque::new();
        for x in 0..size {
            if !in_set[x] && circuit1[x].is_none() {
                seen[x] = true;
                queue.push_back(x);
            }
        }
        let mut sink = None;
        while let Some(node) = queue.pop_front() {
            if in_set[node] {
                for &x in &out_of_member[node] {
                    if !seen[x] {
                        seen[x] = true;
                        pred[x] = node;
                        queue.push_back(x);
                    }
                }
            } else {
                match &circuit2[node] {
                    None => {
                        sink = Some(node);
                        break;
                    }
                    Some(circuit) => {
                        let mut next: Vec<usize> = circuit.iter().map(|&y| index_of(y)).collect();
                        next.sort_unstable();
                        for y in next {
                            if !seen[y] {
                                seen[y] = true;
                                pred[y] = node;
                                queue.push_back(y);
                            }
                        }
                    }
                }
            }
        }

        let Some(mut node) = sink else { break };
        loop {
            in_set[node] = !in_set[node];
            if pred[node] == usize::MAX {
                break;
            }
            node = pred[node];
        }
        current = (0..size).filter(|&i| in_set[i]).map(|i| ground[i]).collect();
    }

    debug_assert!(m1.independent_unchecked(&current) && m2.independent_unchecked(&current));
    Ok(current)
}

/// Maximum rainbow forest of `G[vertices]` avoiding `forbidden` colors.
pub fn max_rainbow_forest(
    graph: &EdgeColoredGraph,
    vertices: &VertexSet,
    forbidden: impl IntoIterator<Item = Color>,
) -> Vec<EdgeId> {
    let graphic = MatroidView::graphic(graph, vertices);
    let partition = MatroidView::partition(graph, graphic.ground().to_vec()).forbid_colors(forbidden);
    max_common_independent(&graphic, &partition).expect("views share a ground set")
}

/// Whether a connected graph has a spanning tree with pairwise distinct colors.
pub fn has_rainbow_spanning_tree(graph: &EdgeColoredGraph) -> Result<bool, GraphError> {
    if !graph.is_connected() {
        return Err(GraphError::NotConnected);
    }
    if graph.n() == 0 {
        return Ok(true);
    }
    let forest = max_rainbow_forest(graph, &VertexSet::full(graph.n()), []);
    Ok(forest.len() == graph.n() - 1)
}
