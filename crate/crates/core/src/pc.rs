//! Properly colored trees of order `min(n, 2δᶜ + 1)` in connected graphs.
//!
//! Small color degree is settled by exhaustive search. Otherwise the graph is
//! checked against the families that provably lack such a tree, then
//! removable edges (deleting them keeps both endpoint color degrees) are
//! stripped. A removable cut edge yields a tree directly; otherwise every
//! monochromatic component is a star, so recoloring each component with its
//! own color turns properly colored trees into rainbow trees, which the
//! rainbow builder finds. When the recolored graph is itself extremal, one
//! deleted edge is put back and a few conflicting edges are removed first.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::SolveError;
use crate::extremal::{recognize, FamilyInstance, FamilyTag};
use crate::graph::{Color, EdgeColoredGraph, EdgeId, Subgraph, VertexId};
use crate::rainbow::{build_rainbow_tree_from, RainbowTrace};
use crate::tree::{check_tree, ColoredTree, TreeMode};
use crate::union_find::UnionFind;

pub const DEFAULT_DELTA0: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoWitness {
    /// Exhaustive search over all properly colored trees found none of the
    /// target order.
    SmallDeltaExhausted {
        min_color_degree: usize,
        target: usize,
    },
    ExtremalFamily(FamilyInstance),
}

impl NoWitness {
    pub fn kind(&self) -> &'static str {
        match self {
            NoWitness::SmallDeltaExhausted { .. } => "small-delta-exhausted",
            NoWitness::ExtremalFamily(_) => "extremal-family",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Edge ids refer to the input graph.
    Tree(ColoredTree),
    No(NoWitness),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Exhaustive,
    ExtremalNo,
    Bridge,
    Plain,
    Repair(FamilyTag),
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Branch::Exhaustive => f.write_str("exhaustive"),
            Branch::ExtremalNo => f.write_str("extremal-no"),
            Branch::Bridge => f.write_str("bridge"),
            Branch::Plain => f.write_str("plain"),
            Branch::Repair(tag) => write!(f, "repair({tag})"),
        }
    }
}

impl Serialize for Branch {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepairInfo {
    pub tag: FamilyTag,
    /// Input-graph id of the restored edge.
    pub restored: EdgeId,
    /// Input-graph ids of the removed conflict edges.
    pub removed: Vec<EdgeId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub branch: Branch,
    pub n: usize,
    pub m: usize,
    pub min_color_degree: usize,
    pub delta0: usize,
    pub target: usize,
    pub deleted_edges: usize,
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub repair: Option<RepairInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rainbow: Option<RainbowTrace>,
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub outcome: SolveOutcome,
    pub report: RunReport,
}

/// Runs the full pipeline on a connected graph.
pub fn build_pc_tree(graph: &EdgeColoredGraph, delta0: usize) -> Result<Solution, SolveError> {
    if delta0 < 2 {
        return Err(SolveError::InvalidDelta0(delta0));
    }
    if graph.n() == 0 || !graph.is_connected() {
        return Err(SolveError::NotConnected);
    }
    let delta = graph.min_color_degree();
    let target = graph.target_order();
    let mut report = RunReport {
        branch: Branch::Exhaustive,
        n: graph.n(),
        m: graph.m(),
        min_color_degree: delta,
        delta0,
        target,
        deleted_edges: 0,
        order: None,
        witness: None,
        repair: None,
        rainbow: None,
    };

    if delta <= delta0 {
        let outcome = match exhaustive_threshold_search(graph, target) {
            Some(tree) => SolveOutcome::Tree(tree),
            None => SolveOutcome::No(NoWitness::SmallDeltaExhausted {
                min_color_degree: delta,
                target,
            }),
        };
        return finish(graph, outcome, report);
    }

    if let Some(inst) = recognize(graph, &FamilyTag::PC_EXTREMAL) {
        report.branch = Branch::ExtremalNo;
        return finish(graph, SolveOutcome::No(NoWitness::ExtremalFamily(inst)), report);
    }

    let pre = preprocess_removable_edges(graph);
    report.deleted_edges = pre.deleted.len();
    if let Some(bridge) = pre.cut_event {
        report.branch = Branch::Bridge;
        let local = pre
            .graph
            .edge_origin
            .binary_search(&bridge)
            .expect("bridge is a kept edge");
        let tree = bridge_certificate(&pre.graph.graph, local)
            .map_err(|e| SolveError::InternalGuaranteeViolation(format!("bridge certificate failed: {e}")))?;
        return finish(graph, SolveOutcome::Tree(lift(graph, &pre.graph, &tree)), report);
    }

    let g_prime = &pre.graph;
    let stars_ok = g_prime.graph.components_are_stars();
    if !stars_ok || g_prime.graph.min_color_degree() != delta || !g_prime.graph.is_connected() {
        return Err(SolveError::InternalGuaranteeViolation(
            "preprocessed graph lost connectivity, color degree or star components".into(),
        ));
    }
    let (g_bar, map) = recolor_stars(&g_prime.graph)?;

    match recognize(&g_bar, &FamilyTag::RAINBOW_EXTREMAL) {
        Some(inst) => {
            report.branch = Branch::Repair(inst.tag);
            for candidate in repair_candidates(graph, &pre.kept, &pre.deleted) {
                let (g_second, second_map) = recolor_stars(&candidate.graph.graph)?;
                let run = rainbow(&g_second)?;
                if run.tree.order() >= target {
                    let restored = restore_colors(&candidate.graph.graph, &run.tree, &second_map)?;
                    report.repair = Some(RepairInfo {
                        tag: inst.tag,
                        restored: candidate.restored,
                        removed: candidate.removed.clone(),
                    });
                    report.rainbow = Some(run.trace);
                    return finish(
                        graph,
                        SolveOutcome::Tree(lift(graph, &candidate.graph, &restored)),
                        report,
                    );
                }
            }
            Err(SolveError::NoValidRepair)
        }
        None => {
            report.branch = Branch::Plain;
            let run = rainbow(&g_bar)?;
            report.rainbow = Some(run.trace.clone());
            let restored = restore_colors(&g_prime.graph, &run.tree, &map)?;
            finish(graph, SolveOutcome::Tree(lift(graph, g_prime, &restored)), report)
        }
    }
}

fn rainbow(graph: &EdgeColoredGraph) -> Result<crate::rainbow::RainbowRun, SolveError> {
    build_rainbow_tree_from(graph, 0)
        .map_err(|e| SolveError::InternalGuaranteeViolation(format!("rainbow builder rejected its input: {e}")))
}

/// Maps a tree on a spanning subgraph back to input-graph edge ids.
fn lift(graph: &EdgeColoredGraph, sub: &Subgraph, tree: &ColoredTree) -> ColoredTree {
    if tree.edges.is_empty() {
        return ColoredTree::single(sub.vertex_origin[tree.vertices[0]], TreeMode::ProperlyColored);
    }
    ColoredTree::from_edges(
        graph,
        tree.edges.iter().map(|&e| sub.edge_origin[e]),
        TreeMode::ProperlyColored,
    )
}

/// Final check on every outcome against the input graph.
fn finish(graph: &EdgeColoredGraph, outcome: SolveOutcome, mut report: RunReport) -> Result<Solution, SolveError> {
    match &outcome {
        SolveOutcome::Tree(tree) => {
            check_tree(graph, tree).map_err(|d| {
                SolveError::InternalGuaranteeViolation(format!(
                    "{} branch produced an invalid tree: {d}",
                    report.branch
                ))
            })?;
            if tree.order() < report.target {
                return Err(SolveError::InternalGuaranteeViolation(format!(
                    "{} branch produced order {} below target {}",
                    report.branch,
                    tree.order(),
                    report.target
                )));
            }
            report.order = Some(tree.order());
        }
        SolveOutcome::No(witness) => report.witness = Some(witness.kind()),
    }
    Ok(Solution { outcome, report })
}

/// Finds a properly colored tree on exactly `target` vertices, if any.
///
/// Every subtree is generated once: the root is its smallest vertex, and
/// each branch includes one candidate edge while excluding all earlier
/// candidates for the rest of that branch.
pub fn exhaustive_threshold_search(graph: &EdgeColoredGraph, target: usize) -> Option<ColoredTree> {
    if target == 0 || graph.n() == 0 {
        return None;
    }
    if target == 1 {
        return Some(ColoredTree::single(0, TreeMode::ProperlyColored));
    }
    for root in 0..graph.n() {
        let mut search = Enumeration {
            graph,
            target,
            root,
            in_tree: vec![false; graph.n()],
            edges: Vec::new(),
        };
        search.in_tree[root] = true;
        let candidates: Vec<EdgeId> = search.fresh_candidates(root, None);
        if search.grow(candidates) {
            let tree = ColoredTree::from_edges(graph, search.edges, TreeMode::ProperlyColored);
            debug_assert!(check_tree(graph, &tree).is_ok());
            return Some(tree);
        }
    }
    None
}

struct Enumeration<'g> {
    graph: &'g EdgeColoredGraph,
    target: usize,
    root: VertexId,
    in_tree: Vec<bool>,
    edges: Vec<EdgeId>,
}

impl Enumeration<'_> {
    /// Edges from `v` to vertices above the root outside the tree, skipping
    /// the color already used at `v`.
    fn fresh_candidates(&self, v: VertexId, used: Option<Color>) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self
            .graph
            .neighbors(v)
            .iter()
            .filter(|&&(z, e)| z > self.root && !self.in_tree[z] && Some(self.graph.color(e)) != used)
            .map(|&(_, e)| e)
            .collect();
        out.sort_unstable();
        out
    }

    fn grow(&mut self, candidates: Vec<EdgeId>) -> bool {
        if self.edges.len() + 1 == self.target {
            return true;
        }
        for (i, &e) in candidates.iter().enumerate() {
            let edge = self.graph.edge(e);
            let (x, y) = if self.in_tree[edge.u] {
                (edge.u, edge.v)
            } else {
                (edge.v, edge.u)
            };
            let color = edge.color;
            let mut next: Vec<EdgeId> = candidates[i + 1..]
                .iter()
                .copied()
                .filter(|&f| {
                    let other = self.graph.edge(f);
                    !other.touches(y) && !(other.touches(x) && other.color == color)
                })
                .collect();
            self.in_tree[y] = true;
            self.edges.push(e);
            next.extend(self.fresh_candidates(y, Some(color)));
            if self.grow(next) {
                return true;
            }
            self.edges.pop();
            self.in_tree[y] = false;
        }
        false
    }
}

#[derive(Clone, Debug)]
pub struct Preprocessed {
    /// The graph after deletions, as a spanning subgraph of the input.
    pub graph: Subgraph,
    /// Input-graph ids of surviving edges, ascending.
    pub kept: Vec<EdgeId>,
    /// Input-graph ids of deleted edges, in deletion order.
    pub deleted: Vec<EdgeId>,
    /// Input-graph id of a removable cut edge, if the scan stopped on one.
    pub cut_event: Option<EdgeId>,
}

/// Deletes removable non-cut edges in ascending id order. An edge is
/// removable when both endpoints keep its color through another edge.
/// Deletions only lower color multiplicities, so an edge that was not
/// removable never becomes removable and one ascending pass suffices.
pub fn preprocess_removable_edges(graph: &EdgeColoredGraph) -> Preprocessed {
    let mut multiplicity: HashMap<(VertexId, Color), usize> = HashMap::new();
    for edge in graph.edges() {
        *multiplicity.entry((edge.u, edge.color)).or_default() += 1;
        *multiplicity.entry((edge.v, edge.color)).or_default() += 1;
    }
    let mut alive = vec![true; graph.m()];
    let mut deleted = Vec::new();
    let mut cut_event = None;
    for e in 0..graph.m() {
        let edge = graph.edge(e);
        if multiplicity[&(edge.u, edge.color)] < 2 || multiplicity[&(edge.v, edge.color)] < 2 {
            continue;
        }
        if is_cut_edge(graph, &alive, e) {
            cut_event = Some(e);
            break;
        }
        alive[e] = false;
        deleted.push(e);
        *multiplicity.get_mut(&(edge.u, edge.color)).unwrap() -= 1;
        *multiplicity.get_mut(&(edge.v, edge.color)).unwrap() -= 1;
    }
    let kept: Vec<EdgeId> = (0..graph.m()).filter(|&e| alive[e]).collect();
    let sub = graph.spanning_subgraph(&kept, |e| graph.color(e));
    debug_assert!(cut_event.is_some() || sub.graph.components_are_stars());
    debug_assert_eq!(sub.graph.min_color_degree(), graph.min_color_degree());
    Preprocessed {
        graph: sub,
        kept,
        deleted,
        cut_event,
    }
}

fn is_cut_edge(graph: &EdgeColoredGraph, alive: &[bool], e: EdgeId) -> bool {
    let mut uf = UnionFind::new(graph.n());
    for (f, edge) in graph.edges().iter().enumerate() {
        if f != e && alive[f] {
            uf.union(edge.u, edge.v);
        }
    }
    let edge = graph.edge(e);
    !uf.same(edge.u, edge.v)
}

/// Properly colored tree on `2δᶜ + 1` vertices around a removable cut edge
/// `e = vw`: two stars with pairwise distinct colors at `v` and `w` joined by
/// `vw`, each avoiding the color of `vw`; when both stars are one leaf short,
/// an extra leaf is hung off one star leaf.
pub fn bridge_certificate(g0: &EdgeColoredGraph, e: EdgeId) -> Result<ColoredTree, SolveError> {
    if e >= g0.m() {
        return Err(SolveError::PreconditionViolated(format!("edge {e} not in graph")));
    }
    let delta = g0.min_color_degree();
    let bridge = g0.edge(e);
    let alive = vec![true; g0.m()];
    if !is_cut_edge(g0, &alive, e) {
        return Err(SolveError::PreconditionViolated(format!("edge {e} is not a cut edge")));
    }
    if delta < 2 {
        return Err(SolveError::PreconditionViolated(
            "minimum color degree must be at least 2".into(),
        ));
    }
    let c = bridge.color;
    let mut v_side = distinct_color_neighbors(g0, bridge.u, bridge.v, c)?;
    let mut w_side = distinct_color_neighbors(g0, bridge.v, bridge.u, c)?;
    let (mut v, mut w) = (bridge.u, bridge.v);
    if v_side.len() < delta + 1 && w_side.len() > delta {
        std::mem::swap(&mut v_side, &mut w_side);
        std::mem::swap(&mut v, &mut w);
    }
    // v_side[0] and w_side[0] are the witnesses u and x carrying color c
    let mut edges = vec![e];
    if v_side.len() > delta {
        edges.extend(v_side[1..=delta].iter().map(|&(_, f)| f));
        edges.extend(w_side[1..delta].iter().map(|&(_, f)| f));
    } else {
        if v_side.len() != delta || w_side.len() != delta {
            return Err(SolveError::PreconditionViolated(
                "an endpoint is below the minimum color degree".into(),
            ));
        }
        edges.extend(v_side[1..].iter().map(|&(_, f)| f));
        edges.extend(w_side[1..].iter().map(|&(_, f)| f));
        let u = v_side[0].0;
        let leaf = v_side[1..].iter().find_map(|&(y, yv)| {
            let blocked: BTreeSet<VertexId> = v_side
                .iter()
                .map(|&(a, _)| a)
                .filter(|&a| a != u && a != y)
                .chain([v])
                .collect();
            let yv_color = g0.color(yv);
            g0.neighbors(y)
                .iter()
                .filter(|&&(z, yz)| !blocked.contains(&z) && g0.color(yz) != yv_color)
                .map(|&(_, yz)| yz)
                .min()
        });
        match leaf {
            Some(yz) => edges.push(yz),
            None => return Err(SolveError::PreconditionViolated("no extra leaf exists".into())),
        }
    }
    let tree = ColoredTree::from_edges(g0, edges, TreeMode::ProperlyColored);
    check_tree(g0, &tree).map_err(|d| SolveError::InternalGuaranteeViolation(format!("bridge tree: {d}")))?;
    if tree.order() != 2 * delta + 1 {
        return Err(SolveError::InternalGuaranteeViolation(format!(
            "bridge tree has order {}",
            tree.order()
        )));
    }
    Ok(tree)
}

/// One neighbor of `v` per color, skipping `w`; the first entry carries
/// color `c`. Ties go to the smallest neighbor id.
fn distinct_color_neighbors(
    g: &EdgeColoredGraph,
    v: VertexId,
    w: VertexId,
    c: Color,
) -> Result<Vec<(VertexId, EdgeId)>, SolveError> {
    let mut by_color: HashMap<Color, (VertexId, EdgeId)> = HashMap::new();
    for &(a, f) in g.neighbors(v) {
        if a == w {
            continue;
        }
        let slot = by_color.entry(g.color(f)).or_insert((a, f));
        if a < slot.0 {
            *slot = (a, f);
        }
    }
    let witness = by_color
        .remove(&c)
        .ok_or_else(|| SolveError::PreconditionViolated(format!("vertex {v} has no other edge of the bridge color")))?;
    let mut rest: Vec<(Color, (VertexId, EdgeId))> = by_color.into_iter().collect();
    rest.sort_unstable();
    Ok(std::iter::once(witness)
        .chain(rest.into_iter().map(|(_, p)| p))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecolorMap {
    /// New color of each edge.
    pub fresh: Vec<Color>,
    /// Color of each edge before recoloring.
    pub original: Vec<Color>,
    /// Fresh color and edge set of every monochromatic component.
    pub classes: Vec<(Color, Vec<EdgeId>)>,
}

/// Gives every monochromatic component its own color, above the current
/// palette. Same vertices and edge ids.
pub fn recolor_stars(graph: &EdgeColoredGraph) -> Result<(EdgeColoredGraph, RecolorMap), SolveError> {
    let base = graph.max_color();
    let mut fresh = vec![0; graph.m()];
    let mut classes = Vec::new();
    for (i, comp) in graph.monochromatic_components().into_iter().enumerate() {
        if !graph.is_star(&comp.edges).unwrap_or(false) {
            return Err(SolveError::PreconditionViolated(format!(
                "monochromatic component of color {} containing edge {} is not a star",
                comp.color, comp.edges[0]
            )));
        }
        let color = base + 1 + i as Color;
        for &e in &comp.edges {
            fresh[e] = color;
        }
        classes.push((color, comp.edges));
    }
    let recolored = EdgeColoredGraph::new(
        graph.n(),
        graph.edges().iter().enumerate().map(|(e, x)| (x.u, x.v, fresh[e])),
    )
    .expect("recoloring keeps the graph simple");
    debug_assert!((0..graph.n()).all(|v| graph.colors_at(v).len() == recolored.colors_at(v).len()));
    let original = graph.edges().iter().map(|x| x.color).collect();
    Ok((
        recolored,
        RecolorMap {
            fresh,
            original,
            classes,
        },
    ))
}

/// Reinterprets a rainbow tree of the recolored graph in `graph`, where it
/// must be properly colored.
pub fn restore_colors(
    graph: &EdgeColoredGraph,
    tree: &ColoredTree,
    map: &RecolorMap,
) -> Result<ColoredTree, SolveError> {
    if map.original.len() != graph.m() || graph.edges().iter().zip(&map.original).any(|(x, &c)| x.color != c) {
        return Err(SolveError::PreconditionViolated(
            "recolor map does not belong to this graph".into(),
        ));
    }
    let restored = tree.clone().with_mode(TreeMode::ProperlyColored);
    check_tree(graph, &restored)
        .map_err(|d| SolveError::InternalGuaranteeViolation(format!("restored tree is not properly colored: {d}")))?;
    Ok(restored)
}

#[derive(Clone, Debug)]
pub struct RepairCandidate {
    /// Input-graph id of the restored deleted edge.
    pub restored: EdgeId,
    /// Input-graph ids of removed conflict edges, ascending.
    pub removed: Vec<EdgeId>,
    /// The repaired graph as a spanning subgraph of the input.
    pub graph: Subgraph,
}

/// Repaired graph for an extremal recolored graph: the first valid
/// candidate from [`repair_candidates`].
pub fn repair_extremal(
    graph: &EdgeColoredGraph,
    kept: &[EdgeId],
    deleted: &[EdgeId],
    inst: &FamilyInstance,
) -> Result<RepairCandidate, SolveError> {
    if !FamilyTag::RAINBOW_EXTREMAL.contains(&inst.tag) {
        return Err(SolveError::PreconditionViolated(format!(
            "{} is not a rainbow-extremal family",
            inst.tag
        )));
    }
    repair_candidates(graph, kept, deleted)
        .into_iter()
        .next()
        .ok_or(SolveError::NoValidRepair)
}

/// All valid repairs, deleted edges in ascending id order and, per edge,
/// smallest conflict sets first. A repair puts one deleted edge `e0 = xy`
/// back and removes an inclusion-minimal set of edges of its color so that
/// every monochromatic component is a star again, while color degrees stay
/// at the minimum and the graph stays connected. The component of `e0`
/// becomes a star centered at `x` or at `y`.
pub fn repair_candidates(graph: &EdgeColoredGraph, kept: &[EdgeId], deleted: &[EdgeId]) -> Vec<RepairCandidate> {
    let delta = graph.min_color_degree();
    let mut order: Vec<EdgeId> = deleted.to_vec();
    order.sort_unstable();
    let mut out = Vec::new();
    for e0 in order {
        let mut present = vec![false; graph.m()];
        for &f in kept {
            present[f] = true;
        }
        present[e0] = true;
        let alpha = graph.color(e0);
        let same_color_at = |v: VertexId, present: &[bool], skip: &BTreeSet<EdgeId>| -> Vec<EdgeId> {
            let mut at: Vec<EdgeId> = graph
                .neighbors(v)
                .iter()
                .map(|&(_, f)| f)
                .filter(|&f| f != e0 && present[f] && graph.color(f) == alpha && !skip.contains(&f))
                .collect();
            at.sort_unstable();
            at
        };
        let edge0 = graph.edge(e0);
        let mut sets: Vec<BTreeSet<EdgeId>> = Vec::new();
        for (center, other) in [(edge0.u, edge0.v), (edge0.v, edge0.u)] {
            let base: BTreeSet<EdgeId> = same_color_at(other, &present, &BTreeSet::new()).into_iter().collect();
            let at_center = same_color_at(center, &present, &base);
            let mut options: Vec<BTreeSet<EdgeId>> = vec![BTreeSet::new()];
            if let [only] = at_center[..] {
                let hub = graph.edge(only).other(center);
                let mut skip = base.clone();
                skip.insert(only);
                let hub_rest = same_color_at(hub, &present, &skip);
                if !hub_rest.is_empty() {
                    options = vec![BTreeSet::from([only]), hub_rest.into_iter().collect()];
                }
            }
            for option in options {
                let mut set = base.clone();
                set.extend(option);
                if !sets.contains(&set) {
                    sets.push(set);
                }
            }
        }
        sets.sort_by_key(|s| (s.len(), s.iter().copied().collect::<Vec<_>>()));

        let valid = |removed: &BTreeSet<EdgeId>| -> Option<Subgraph> {
            let keep: Vec<EdgeId> = (0..graph.m())
                .filter(|&f| present[f] && !removed.contains(&f))
                .collect();
            let sub = graph.spanning_subgraph(&keep, |f| graph.color(f));
            let ok =
                sub.graph.components_are_stars() && sub.graph.min_color_degree() == delta && sub.graph.is_connected();
            ok.then_some(sub)
        };
        let mut accepted: Vec<BTreeSet<EdgeId>> = Vec::new();
        for mut set in sets {
            if valid(&set).is_none() {
                continue;
            }
            // shrink by putting single edges back while the set stays valid
            'shrink: loop {
                for f in set.clone() {
                    let mut smaller = set.clone();
                    smaller.remove(&f);
                    if valid(&smaller).is_some() {
                        set = smaller;
                        continue 'shrink;
                    }
                }
                break;
            }
            if accepted.contains(&set) {
                continue;
            }
            let sub = valid(&set).expect("shrinking keeps validity");
            accepted.push(set.clone());
            out.push(RepairCandidate {
                restored: e0,
                removed: set.into_iter().collect(),
                graph: sub,
            });
        }
    }
    out
}
