//! The six extremal families: generators, recognizers and a membership check.
//!
//! Vertices are described by [`Role`]s. Clique vertices are `Clique(i)`
//! (1-based), the independent set is `Indep(j)` (1-based), `W` and `V0` are
//! the special vertices of G3/G4, and `Hub(1)`, `Hub(2)` are the two
//! universal vertices of G2 (its other vertices are `Indep(i)`).
//!
//! Membership is checked directly against the defining constraints on the
//! actual colors, which makes it invariant under any renaming of colors.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::FamilyError;
use crate::graph::{Color, EdgeColoredGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyTag {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 6] = [
        FamilyTag::G1,
        FamilyTag::G2,
        FamilyTag::G3,
        FamilyTag::G4,
        FamilyTag::G5,
        FamilyTag::G6,
    ];

    /// Families that have no properly colored tree reaching the target order.
    pub const PC_EXTREMAL: [FamilyTag; 4] = [FamilyTag::G1, FamilyTag::G2, FamilyTag::G3, FamilyTag::G5];

    /// Families that have no rainbow tree reaching the target order.
    pub const RAINBOW_EXTREMAL: [FamilyTag; 4] = [FamilyTag::G1, FamilyTag::G2, FamilyTag::G4, FamilyTag::G6];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::G1 => "G1",
            FamilyTag::G2 => "G2",
            FamilyTag::G3 => "G3",
            FamilyTag::G4 => "G4",
            FamilyTag::G5 => "G5",
            FamilyTag::G6 => "G6",
        }
    }

    /// Minimum color degree of every member with parameters `(m, k)`.
    pub fn min_color_degree(self, m: usize, _k: usize) -> usize {
        match self {
            FamilyTag::G1 => m.div_ceil(2),
            FamilyTag::G2 => 2,
            FamilyTag::G3 | FamilyTag::G4 => m + 1,
            FamilyTag::G5 | FamilyTag::G6 => m,
        }
    }

    /// Vertex count of a member with parameters `(m, k)`.
    pub fn order(self, m: usize, k: usize) -> usize {
        match self {
            FamilyTag::G1 => m + k,
            FamilyTag::G2 => k + 2,
            FamilyTag::G3 | FamilyTag::G4 => 2 * m + k + 2,
            FamilyTag::G5 | FamilyTag::G6 => 2 * m + k,
        }
    }

    pub fn check_parameters(self, m: usize, k: usize) -> Result<(), FamilyError> {
        let bad = |reason: &str| {
            Err(FamilyError::InvalidParameters {
                tag: self.name(),
                reason: reason.into(),
            })
        };
        match self {
            FamilyTag::G1 if m < 3 || m.is_multiple_of(2) => bad("m must be odd and at least 3"),
            FamilyTag::G1 if k < 2 => bad("k must be at least 2"),
            FamilyTag::G2 if k < 3 => bad("k must be at least 3"),
            FamilyTag::G3 | FamilyTag::G4 | FamilyTag::G5 | FamilyTag::G6 if m < 1 || k < 1 => {
                bad("m and k must be at least 1")
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FamilyTag::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown family tag {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Clique(usize),
    Indep(usize),
    Hub(usize),
    W,
    V0,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub tag: FamilyTag,
    /// Unused by G2 and stored as 0.
    pub m: usize,
    pub k: usize,
    /// Role of each vertex, indexed by vertex id.
    pub roles: Vec<Role>,
    /// G1 only: arcs `(i, j)` of the regular tournament, as clique indices.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tournament: Vec<(usize, usize)>,
    /// G1 only: `attachments[j - 1]` lists the clique indices adjacent to `Indep(j)`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub attachments: Vec<Vec<usize>>,
    /// G2 only: indices `i` with `Indep(i)` in the primed part.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub primed: Vec<usize>,
}

impl FamilyInstance {
    pub fn vertex(&self, role: Role) -> Option<VertexId> {
        self.roles.iter().position(|&r| r == role)
    }

    pub fn min_color_degree(&self) -> usize {
        self.tag.min_color_degree(self.m, self.k)
    }

    fn independent_count(&self) -> usize {
        match self.tag {
            FamilyTag::G1 | FamilyTag::G2 => self.k,
            _ => self.m + self.k,
        }
    }

    fn expected_roles(&self) -> Vec<Role> {
        let mut roles = Vec::new();
        match self.tag {
            FamilyTag::G2 => roles.extend([Role::Hub(1), Role::Hub(2)]),
            FamilyTag::G3 | FamilyTag::G4 => roles.extend([Role::V0, Role::W]),
            _ => {}
        }
        if self.tag != FamilyTag::G2 {
            roles.extend((1..=self.m).map(Role::Clique));
        }
        roles.extend((1..=self.independent_count()).map(Role::Indep));
        roles
    }

    /// Clique vertices in the order used for the clique constraints.
    fn clique_roles(&self) -> Vec<Role> {
        let mut roles = Vec::new();
        if matches!(self.tag, FamilyTag::G3 | FamilyTag::G4) {
            roles.push(Role::V0);
        }
        if self.tag != FamilyTag::G2 {
            roles.extend((1..=self.m).map(Role::Clique));
        }
        roles
    }

    fn expected_pairs(&self) -> Vec<(Role, Role)> {
        let mut pairs = Vec::new();
        let clique = self.clique_roles();
        for (a, &x) in clique.iter().enumerate() {
            for &y in &clique[a + 1..] {
                pairs.push((x, y));
            }
        }
        let indep = self.independent_count();
        match self.tag {
            FamilyTag::G1 => {
                for (j, attached) in self.attachments.iter().enumerate() {
                    for &i in attached {
                        pairs.push((Role::Clique(i), Role::Indep(j + 1)));
                    }
                }
            }
            FamilyTag::G2 => {
                pairs.push((Role::Hub(1), Role::Hub(2)));
                for i in 1..=indep {
                    pairs.push((Role::Hub(1), Role::Indep(i)));
                    pairs.push((Role::Hub(2), Role::Indep(i)));
                }
            }
            FamilyTag::G3 | FamilyTag::G4 => {
                pairs.push((Role::V0, Role::W));
                for j in 1..=indep {
                    pairs.push((Role::W, Role::Indep(j)));
                }
                for i in 1..=self.m {
                    pairs.push((Role::Clique(i), Role::W));
                    for j in 1..=indep {
                        pairs.push((Role::Clique(i), Role::Indep(j)));
                    }
                }
            }
            FamilyTag::G5 | FamilyTag::G6 => {
                for i in 1..=self.m {
                    for j in 1..=indep {
                        pairs.push((Role::Clique(i), Role::Indep(j)));
                    }
                }
            }
        }
        pairs
    }
}

/// Builds a member of `tag` with parameters `(m, k)`. Seed 0 gives the
/// canonical layout; other seeds permute vertex labels and, where the family
/// allows it, sample the free choices (G1 attachment sets, the G2 partition).
pub fn generate(
    tag: FamilyTag,
    m: usize,
    k: usize,
    seed: u64,
) -> Result<(EdgeColoredGraph, FamilyInstance), FamilyError> {
    let m = if tag == FamilyTag::G2 { 0 } else { m };
    tag.check_parameters(m, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let randomize = seed != 0;

    let mut inst = FamilyInstance {
        tag,
        m,
        k,
        roles: Vec::new(),
        tournament: Vec::new(),
        attachments: Vec::new(),
        primed: Vec::new(),
    };
    match tag {
        FamilyTag::G1 => {
            let half = (m - 1) / 2;
            for i in 1..=m {
                for j in 1..=m {
                    if i != j && (1..=half).contains(&((j + m - i) % m)) {
                        inst.tournament.push((i, j));
                    }
                }
            }
            for _ in 1..=k {
                let mut attached: Vec<usize> = (1..=m).collect();
                if randomize {
                    let size = rng.gen_range(m.div_ceil(2)..=m);
                    attached.shuffle(&mut rng);
                    attached.truncate(size);
                    attached.sort_unstable();
                }
                inst.attachments.push(attached);
            }
        }
        FamilyTag::G2 => {
            inst.primed = if randomize {
                let mut picked: Vec<usize> = (1..=k).filter(|_| rng.gen_bool(0.5)).collect();
                if picked.is_empty() {
                    picked.push(rng.gen_range(1..=k));
                }
                picked
            } else {
                vec![k]
            };
        }
        _ => {}
    }

    let mut layout = canonical_layout(&inst);
    if randomize {
        layout.shuffle(&mut rng);
    }
    inst.roles = layout;
    let graph = realize(&inst)?;
    debug_assert_eq!(graph.min_color_degree(), inst.min_color_degree());
    Ok((graph, inst))
}

/// Clique vertices (v0 first for G3/G4), then w, then the independent set;
/// G2 puts the hubs first.
pub fn canonical_layout(inst: &FamilyInstance) -> Vec<Role> {
    let mut layout = inst.clique_roles();
    match inst.tag {
        FamilyTag::G2 => layout.extend([Role::Hub(1), Role::Hub(2)]),
        FamilyTag::G3 | FamilyTag::G4 => layout.push(Role::W),
        _ => {}
    }
    layout.extend((1..=inst.independent_count()).map(Role::Indep));
    layout
}

/// The graph described by a witness, with canonical colors: G1 uses color
/// `i` for clique vertex `i`; G2 uses 1, 2, 3 for the unprimed, primed and
/// second-hub colors; G3/G5 color the clique properly by `(a + b) mod s`
/// and G4/G6 rainbow, with spoke colors fresh above the clique palette.
pub fn realize(inst: &FamilyInstance) -> Result<EdgeColoredGraph, FamilyError> {
    let (tag, m) = (inst.tag, inst.m);
    let invalid = |reason: &str| FamilyError::InvalidParameters {
        tag: tag.name(),
        reason: reason.into(),
    };
    tag.check_parameters(m, inst.k)?;
    if tag == FamilyTag::G1 && !g1_witness_shape(inst) {
        return Err(invalid("tournament or attachment sets are malformed"));
    }
    let mut colored: Vec<(Role, Role, Color)> = Vec::new();
    match tag {
        FamilyTag::G1 => {
            for &(i, j) in &inst.tournament {
                colored.push((Role::Clique(i), Role::Clique(j), i as Color));
            }
            for (j, attached) in inst.attachments.iter().enumerate() {
                for &i in attached {
                    colored.push((Role::Clique(i), Role::Indep(j + 1), i as Color));
                }
            }
        }
        FamilyTag::G2 => {
            let (c1, c1p, c2) = (1, 2, 3);
            colored.push((Role::Hub(1), Role::Hub(2), c1));
            for i in 1..=inst.k {
                colored.push((Role::Hub(2), Role::Indep(i), c2));
                let c = if inst.primed.contains(&i) { c1p } else { c1 };
                colored.push((Role::Hub(1), Role::Indep(i), c));
            }
        }
        FamilyTag::G3 | FamilyTag::G4 | FamilyTag::G5 | FamilyTag::G6 => {
            let clique = inst.clique_roles();
            let proper = matches!(tag, FamilyTag::G3 | FamilyTag::G5);
            let mut next: Color = 1;
            let s = clique.len();
            for a in 0..s {
                for b in a + 1..s {
                    let c = if proper {
                        ((a + b) % s) as Color + 1
                    } else {
                        next += 1;
                        next - 1
                    };
                    colored.push((clique[a], clique[b], c));
                }
            }
            let base = if proper { s as Color } else { next - 1 };
            let indep = inst.independent_count();
            if matches!(tag, FamilyTag::G3 | FamilyTag::G4) {
                let c = base + 1;
                colored.push((Role::V0, Role::W, c));
                for j in 1..=indep {
                    colored.push((Role::W, Role::Indep(j), c));
                }
                for i in 1..=m {
                    colored.push((Role::Clique(i), Role::W, c + i as Color));
                    for j in 1..=indep {
                        colored.push((Role::Clique(i), Role::Indep(j), c + i as Color));
                    }
                }
            } else {
                for i in 1..=m {
                    for j in 1..=indep {
                        colored.push((Role::Clique(i), Role::Indep(j), base + i as Color));
                    }
                }
            }
        }
    }
    let expected: BTreeSet<Role> = inst.expected_roles().into_iter().collect();
    let actual: BTreeSet<Role> = inst.roles.iter().copied().collect();
    if actual.len() != inst.roles.len() || actual != expected {
        return Err(invalid("role list does not match the parameters"));
    }
    let position: HashMap<Role, VertexId> = inst.roles.iter().enumerate().map(|(v, &r)| (r, v)).collect();
    let graph = EdgeColoredGraph::new(
        inst.roles.len(),
        colored.iter().map(|&(a, b, c)| (position[&a], position[&b], c)),
    )
    .expect("family templates are simple graphs with positive colors");
    if !verify_membership(&graph, inst) {
        return Err(invalid("witness does not describe a family member"));
    }
    Ok(graph)
}

/// Checks that `inst` is a valid witness that `graph` belongs to `inst.tag`.
pub fn verify_membership(graph: &EdgeColoredGraph, inst: &FamilyInstance) -> bool {
    if inst.tag.check_parameters(inst.m, inst.k).is_err() || inst.roles.len() != graph.n() {
        return false;
    }
    let expected: BTreeSet<Role> = inst.expected_roles().into_iter().collect();
    let actual: BTreeSet<Role> = inst.roles.iter().copied().collect();
    if actual.len() != inst.roles.len() || actual != expected {
        return false;
    }
    if inst.tag == FamilyTag::G1 && !g1_witness_shape(inst) {
        return false;
    }
    if inst.tag == FamilyTag::G2 {
        let primed: BTreeSet<usize> = inst.primed.iter().copied().collect();
        if primed.is_empty() || primed.len() != inst.primed.len() || primed.iter().any(|&i| i < 1 || i > inst.k) {
            return false;
        }
    }

    let position: HashMap<Role, VertexId> = inst.roles.iter().enumerate().map(|(v, &r)| (r, v)).collect();
    let pairs = inst.expected_pairs();
    if pairs.len() != graph.m() {
        return false;
    }
    let mut colors: HashMap<(Role, Role), Color> = HashMap::with_capacity(2 * pairs.len());
    for &(a, b) in &pairs {
        let Some(e) = graph.edge_between(position[&a], position[&b]) else {
            return false;
        };
        colors.insert((a, b), graph.color(e));
        colors.insert((b, a), graph.color(e));
    }
    let col = |a: Role, b: Role| colors[&(a, b)];

    match inst.tag {
        FamilyTag::G1 => {
            let palette: Vec<Color> = (1..=inst.m)
                .map(|i| {
                    let &(_, j) = inst
                        .tournament
                        .iter()
                        .find(|&&(a, _)| a == i)
                        .expect("regular tournament");
                    col(Role::Clique(i), Role::Clique(j))
                })
                .collect();
            all_distinct(&palette)
                && inst
                    .tournament
                    .iter()
                    .all(|&(i, j)| col(Role::Clique(i), Role::Clique(j)) == palette[i - 1])
                && inst.attachments.iter().enumerate().all(|(j, attached)| {
                    attached
                        .iter()
                        .all(|&i| col(Role::Clique(i), Role::Indep(j + 1)) == palette[i - 1])
                })
        }
        FamilyTag::G2 => {
            let c1 = col(Role::Hub(1), Role::Hub(2));
            let c2 = col(Role::Hub(2), Role::Indep(1));
            let c1p = col(Role::Hub(1), Role::Indep(inst.primed[0]));
            all_distinct(&[c1, c1p, c2])
                && (1..=inst.k).all(|i| {
                    let want = if inst.primed.contains(&i) { c1p } else { c1 };
                    col(Role::Hub(2), Role::Indep(i)) == c2 && col(Role::Hub(1), Role::Indep(i)) == want
                })
        }
        FamilyTag::G3 | FamilyTag::G4 | FamilyTag::G5 | FamilyTag::G6 => {
            let indep = inst.independent_count();
            let with_w = matches!(inst.tag, FamilyTag::G3 | FamilyTag::G4);
            // (clique vertex, its spoke color); v0's spoke color is c
            let mut spokes: Vec<(Role, Color)> = Vec::new();
            if with_w {
                let c = col(Role::V0, Role::W);
                if (1..=indep).any(|j| col(Role::W, Role::Indep(j)) != c) {
                    return false;
                }
                spokes.push((Role::V0, c));
            }
            for i in 1..=inst.m {
                let ci = col(Role::Clique(i), Role::Indep(1));
                if (1..=indep).any(|j| col(Role::Clique(i), Role::Indep(j)) != ci)
                    || (with_w && col(Role::Clique(i), Role::W) != ci)
                {
                    return false;
                }
                spokes.push((Role::Clique(i), ci));
            }
            let spoke_colors: Vec<Color> = spokes.iter().map(|&(_, c)| c).collect();
            if !all_distinct(&spoke_colors) {
                return false;
            }
            let clique = inst.clique_roles();
            let proper = matches!(inst.tag, FamilyTag::G3 | FamilyTag::G5);
            if proper {
                spokes.iter().all(|&(x, cx)| {
                    let at_x: Vec<Color> = clique.iter().filter(|&&y| y != x).map(|&y| col(x, y)).collect();
                    all_distinct(&at_x) && !at_x.contains(&cx)
                })
            } else {
                let mut clique_colors = Vec::new();
                for (a, &x) in clique.iter().enumerate() {
                    for &y in &clique[a + 1..] {
                        clique_colors.push(col(x, y));
                    }
                }
                all_distinct(&clique_colors) && clique_colors.iter().all(|c| !spoke_colors.contains(c))
            }
        }
    }
}

fn all_distinct(colors: &[Color]) -> bool {
    colors.iter().collect::<BTreeSet<_>>().len() == colors.len()
}

/// Tournament is complete and regular; attachment sets are large enough.
fn g1_witness_shape(inst: &FamilyInstance) -> bool {
    let m = inst.m;
    let arcs: BTreeSet<(usize, usize)> = inst.tournament.iter().copied().collect();
    if arcs.len() != inst.tournament.len() || arcs.len() != m * (m - 1) / 2 {
        return false;
    }
    let mut out = vec![0usize; m + 1];
    for &(i, j) in &arcs {
        if i < 1 || i > m || j < 1 || j > m || i == j || arcs.contains(&(j, i)) {
            return false;
        }
        out[i] += 1;
    }
    if out[1..].iter().any(|&d| d != (m - 1) / 2) {
        return false;
    }
    inst.attachments.len() == inst.k
        && inst.attachments.iter().all(|a| {
            let set: BTreeSet<usize> = a.iter().copied().collect();
            set.len() == a.len() && set.len() >= m.div_ceil(2) && set.iter().all(|&i| (1..=m).contains(&i))
        })
}

/// Returns a verified witness for the first tag in `tags` that `graph` belongs to.
pub fn recognize(graph: &EdgeColoredGraph, tags: &[FamilyTag]) -> Option<FamilyInstance> {
    tags.iter().find_map(|&tag| {
        let inst = match tag {
            FamilyTag::G1 => recognize_g1(graph),
            FamilyTag::G2 => recognize_g2(graph),
            FamilyTag::G3 | FamilyTag::G4 => recognize_g34(graph, tag),
            FamilyTag::G5 | FamilyTag::G6 => recognize_g56(graph, tag),
        }?;
        debug_assert!(verify_membership(graph, &inst));
        Some(inst)
    })
}

fn universal_split(graph: &EdgeColoredGraph) -> (Vec<VertexId>, Vec<VertexId>) {
    (0..graph.n()).partition(|&v| graph.degree(v) + 1 == graph.n())
}

fn recognize_g56(graph: &EdgeColoredGraph, tag: FamilyTag) -> Option<FamilyInstance> {
    let (clique, rest) = universal_split(graph);
    let m = clique.len();
    if m == 0 || rest.len() <= m {
        return None;
    }
    let k = rest.len() - m;
    let mut roles = vec![Role::W; graph.n()];
    for (i, &v) in clique.iter().enumerate() {
        roles[v] = Role::Clique(i + 1);
    }
    for (j, &v) in rest.iter().enumerate() {
        roles[v] = Role::Indep(j + 1);
    }
    let inst = FamilyInstance {
        tag,
        m,
        k,
        roles,
        tournament: Vec::new(),
        attachments: Vec::new(),
        primed: Vec::new(),
    };
    verify_membership(graph, &inst).then_some(inst)
}

fn recognize_g34(graph: &EdgeColoredGraph, tag: FamilyTag) -> Option<FamilyInstance> {
    let (hubs, rest) = universal_split(graph);
    if hubs.len() < 2 || rest.len() < hubs.len() + 1 {
        return None;
    }
    let m = hubs.len() - 1;
    let k = rest.len() - m - 1;
    for &w in &hubs {
        // w sees a single color towards the non-universal side
        let mut towards: BTreeSet<Color> = BTreeSet::new();
        for &(x, e) in graph.neighbors(w) {
            if !hubs.contains(&x) {
                towards.insert(graph.color(e));
            }
        }
        if towards.len() != 1 {
            continue;
        }
        for &v0 in &rest {
            let mut roles = vec![Role::W; graph.n()];
            roles[v0] = Role::V0;
            for (i, &v) in hubs.iter().filter(|&&v| v != w).enumerate() {
                roles[v] = Role::Clique(i + 1);
            }
            for (j, &v) in rest.iter().filter(|&&v| v != v0).enumerate() {
                roles[v] = Role::Indep(j + 1);
            }
            let inst = FamilyInstance {
                tag,
                m,
                k,
                roles,
                tournament: Vec::new(),
                attachments: Vec::new(),
                primed: Vec::new(),
            };
            if verify_membership(graph, &inst) {
                return Some(inst);
            }
        }
    }
    None
}

fn recognize_g2(graph: &EdgeColoredGraph) -> Option<FamilyInstance> {
    let (hubs, rest) = universal_split(graph);
    if hubs.len() != 2 || rest.len() < 3 {
        return None;
    }
    for (u1, u2) in [(hubs[0], hubs[1]), (hubs[1], hubs[0])] {
        let c1 = graph.color(graph.edge_between(u1, u2)?);
        let mut roles = vec![Role::W; graph.n()];
        roles[u1] = Role::Hub(1);
        roles[u2] = Role::Hub(2);
        let mut primed = Vec::new();
        for (i, &v) in rest.iter().enumerate() {
            roles[v] = Role::Indep(i + 1);
            if graph.edge_between(u1, v).map(|e| graph.color(e)) != Some(c1) {
                primed.push(i + 1);
            }
        }
        let inst = FamilyInstance {
            tag: FamilyTag::G2,
            m: 0,
            k: rest.len(),
            roles,
            tournament: Vec::new(),
            attachments: Vec::new(),
            primed,
        };
        if verify_membership(graph, &inst) {
            return Some(inst);
        }
    }
    None
}

fn recognize_g1(graph: &EdgeColoredGraph) -> Option<FamilyInstance> {
    let palette = graph.palette();
    let m = palette.len();
    if m < 3 || m.is_multiple_of(2) || graph.n() < m + 2 {
        return None;
    }
    // each color class is a star centered at its clique vertex
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); m];
    for (e, edge) in graph.edges().iter().enumerate() {
        classes[palette.binary_search(&edge.color).ok()?].push(e);
    }
    let mut options: Vec<Vec<VertexId>> = Vec::with_capacity(m);
    for class in &classes {
        options.push(graph.star_centers(class).ok()??);
    }
    let mut centers = Vec::with_capacity(m);
    search_g1(graph, &options, &mut centers)
}

fn search_g1(
    graph: &EdgeColoredGraph,
    options: &[Vec<VertexId>],
    centers: &mut Vec<VertexId>,
) -> Option<FamilyInstance> {
    if centers.len() == options.len() {
        return g1_from_centers(graph, centers);
    }
    for &c in &options[centers.len()] {
        if centers.contains(&c) {
            continue;
        }
        centers.push(c);
        if let Some(inst) = search_g1(graph, options, centers) {
            return Some(inst);
        }
        centers.pop();
    }
    None
}

fn g1_from_centers(graph: &EdgeColoredGraph, centers: &[VertexId]) -> Option<FamilyInstance> {
    let m = centers.len();
    let mut index = vec![0usize; graph.n()];
    for (i, &v) in centers.iter().enumerate() {
        index[v] = i + 1;
    }
    let mut roles = vec![Role::W; graph.n()];
    let mut indep = Vec::new();
    for v in 0..graph.n() {
        if index[v] > 0 {
            roles[v] = Role::Clique(index[v]);
        } else {
            indep.push(v);
            roles[v] = Role::Indep(indep.len());
        }
    }
    let palette = graph.palette();
    let class_of = |color: Color| palette.binary_search(&color).ok().map(|p| p + 1);
    let mut tournament = Vec::new();
    for (a, &x) in centers.iter().enumerate() {
        for &y in &centers[a + 1..] {
            let color = graph.color(graph.edge_between(x, y)?);
            let owner = class_of(color)?;
            if owner == index[x] {
                tournament.push((index[x], index[y]));
            } else if owner == index[y] {
                tournament.push((index[y], index[x]));
            } else {
                return None;
            }
        }
    }
    tournament.sort_unstable();
    let attachments = indep
        .iter()
        .map(|&u| {
            let mut attached: Vec<usize> = graph.neighbors(u).iter().map(|&(x, _)| index[x]).collect();
            attached.sort_unstable();
            attached
        })
        .collect();
    let inst = FamilyInstance {
        tag: FamilyTag::G1,
        m,
        k: indep.len(),
        roles,
        tournament,
        attachments,
        primed: Vec::new(),
    };
    verify_membership(graph, &inst).then_some(inst)
}
