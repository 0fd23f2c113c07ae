//! Hand-built inputs that drive the pipeline into its repair branch.
//!
//! Each input is an extremal graph (with minimum color degree 3) plus one
//! extra edge `e0` that reuses a color already present at both of its
//! endpoints. The extra edge gets id 0, so it is the first removable edge
//! and the preprocessing deletes it, leaving exactly the extremal graph.
//! Because the minimum color degree is 3, the pipeline only reaches this
//! branch with `delta0 = 2`.

use crate::extremal::{canonical_layout, realize, FamilyInstance, FamilyTag, Role};
use crate::graph::{Color, EdgeColoredGraph, VertexId};

#[derive(Clone, Debug)]
pub struct RepairFixture {
    pub name: &'static str,
    pub graph: EdgeColoredGraph,
    /// Family the recolored preprocessed graph belongs to.
    pub family: FamilyTag,
    /// Endpoints of the edge the repair restores (edge id 0).
    pub restored: (VertexId, VertexId),
    /// Endpoints of the conflict edges a minimal repair removes.
    pub removed: Vec<(VertexId, VertexId)>,
}

/// Delta0 under which the fixtures reach the repair branch.
pub const FIXTURE_DELTA0: usize = 2;

fn instance(tag: FamilyTag, m: usize, k: usize, attachments: Vec<Vec<usize>>) -> FamilyInstance {
    let mut inst = FamilyInstance {
        tag,
        m,
        k,
        roles: Vec::new(),
        tournament: Vec::new(),
        attachments,
        primed: Vec::new(),
    };
    if tag == FamilyTag::G1 {
        let half = (m - 1) / 2;
        for i in 1..=m {
            for j in 1..=m {
                if i != j && (1..=half).contains(&((j + m - i) % m)) {
                    inst.tournament.push((i, j));
                }
            }
        }
    }
    inst.roles = canonical_layout(&inst);
    inst
}

/// Prepends `(a, b)` with `color`, optionally recoloring existing edges.
fn with_extra_edge(
    base: &EdgeColoredGraph,
    inst: &FamilyInstance,
    a: Role,
    b: Role,
    color: Color,
    recolor: &[(Role, Role, Color)],
) -> (EdgeColoredGraph, (VertexId, VertexId)) {
    let at = |r: Role| inst.vertex(r).expect("role present");
    let (x, y) = (at(a), at(b));
    let mut edges = vec![(x, y, color)];
    for e in base.edges() {
        let c = recolor
            .iter()
            .find(|&&(p, q, _)| {
                let (p, q) = (at(p), at(q));
                (p.min(q), p.max(q)) == (e.u, e.v)
            })
            .map_or(e.color, |&(_, _, c)| c);
        edges.push((e.u, e.v, c));
    }
    (
        EdgeColoredGraph::new(base.n(), edges).expect("extra edge joins non-adjacent vertices"),
        (x, y),
    )
}

fn spoke_color(graph: &EdgeColoredGraph, inst: &FamilyInstance, center: Role, leaf: Role) -> Color {
    let e = graph
        .edge_between(inst.vertex(center).unwrap(), inst.vertex(leaf).unwrap())
        .unwrap();
    graph.color(e)
}

fn pairs(inst: &FamilyInstance, list: &[(Role, Role)]) -> Vec<(VertexId, VertexId)> {
    list.iter()
        .map(|&(a, b)| {
            let (x, y) = (inst.vertex(a).unwrap(), inst.vertex(b).unwrap());
            (x.min(y), x.max(y))
        })
        .collect()
}

/// G6 with m = 3, k = 1 plus an edge between two independent vertices in the
/// spoke color of clique vertex 1.
pub fn g6_independent_pair() -> RepairFixture {
    let inst = instance(FamilyTag::G6, 3, 1, Vec::new());
    let base = realize(&inst).expect("valid instance");
    let alpha = spoke_color(&base, &inst, Role::Clique(1), Role::Indep(1));
    let (graph, restored) = with_extra_edge(&base, &inst, Role::Indep(1), Role::Indep(4), alpha, &[]);
    RepairFixture {
        name: "g6-independent-pair",
        graph,
        family: FamilyTag::G6,
        restored,
        removed: pairs(
            &inst,
            &[(Role::Clique(1), Role::Indep(1)), (Role::Clique(1), Role::Indep(4))],
        ),
    }
}

/// G4 with m = 2, k = 1 plus the edge v0-u1 in the spoke color of clique
/// vertex 2; the clique edge v0-v1 carries the same color as a separate
/// single-edge component, so v0 already sees that color.
pub fn g4_apex_to_independent() -> RepairFixture {
    let inst = instance(FamilyTag::G4, 2, 1, Vec::new());
    let base = realize(&inst).expect("valid instance");
    let alpha = spoke_color(&base, &inst, Role::Clique(2), Role::Indep(1));
    let (graph, restored) = with_extra_edge(
        &base,
        &inst,
        Role::V0,
        Role::Indep(1),
        alpha,
        &[(Role::V0, Role::Clique(1), alpha)],
    );
    RepairFixture {
        name: "g4-apex-to-independent",
        graph,
        family: FamilyTag::G4,
        restored,
        removed: pairs(&inst, &[(Role::Clique(2), Role::Indep(1))]),
    }
}

/// G4 with m = 2, k = 1 plus an edge between independent vertices 1 and 3
/// in the spoke color of clique vertex 1.
pub fn g4_independent_pair() -> RepairFixture {
    let inst = instance(FamilyTag::G4, 2, 1, Vec::new());
    let base = realize(&inst).expect("valid instance");
    let alpha = spoke_color(&base, &inst, Role::Clique(1), Role::Indep(1));
    let (graph, restored) = with_extra_edge(&base, &inst, Role::Indep(1), Role::Indep(3), alpha, &[]);
    RepairFixture {
        name: "g4-independent-pair",
        graph,
        family: FamilyTag::G4,
        restored,
        removed: pairs(
            &inst,
            &[(Role::Clique(1), Role::Indep(1)), (Role::Clique(1), Role::Indep(3))],
        ),
    }
}

/// G1 with m = 5, k = 2 (full attachments) plus an edge between the two
/// independent vertices in the color of clique vertex 1. A minimal repair
/// must detach both independent vertices from clique vertex 1: keeping
/// either spoke would leave a monochromatic path of length 3.
pub fn g1_independent_pair() -> RepairFixture {
    let inst = instance(FamilyTag::G1, 5, 2, vec![(1..=5).collect(), (1..=5).collect()]);
    let base = realize(&inst).expect("valid instance");
    let alpha = spoke_color(&base, &inst, Role::Clique(1), Role::Indep(1));
    let (graph, restored) = with_extra_edge(&base, &inst, Role::Indep(1), Role::Indep(2), alpha, &[]);
    RepairFixture {
        name: "g1-independent-pair",
        graph,
        family: FamilyTag::G1,
        restored,
        removed: pairs(
            &inst,
            &[(Role::Clique(1), Role::Indep(1)), (Role::Clique(1), Role::Indep(2))],
        ),
    }
}

/// G1 with m = 5, k = 2 where independent vertex 1 misses clique vertex 3,
/// plus the edge u1-v3 in the color of clique vertex 2 (which owns the arc
/// v2 -> v3). A minimal repair removes both color-2 edges at u1 and v3.
pub fn g1_independent_to_clique() -> RepairFixture {
    let inst = instance(FamilyTag::G1, 5, 2, vec![vec![1, 2, 4, 5], (1..=5).collect()]);
    let base = realize(&inst).expect("valid instance");
    let alpha = spoke_color(&base, &inst, Role::Clique(2), Role::Indep(1));
    let (graph, restored) = with_extra_edge(&base, &inst, Role::Indep(1), Role::Clique(3), alpha, &[]);
    RepairFixture {
        name: "g1-independent-to-clique",
        graph,
        family: FamilyTag::G1,
        restored,
        removed: pairs(
            &inst,
            &[(Role::Clique(2), Role::Clique(3)), (Role::Clique(2), Role::Indep(1))],
        ),
    }
}

pub fn repair_fixtures() -> Vec<RepairFixture> {
    vec![
        g6_independent_pair(),
        g4_apex_to_independent(),
        g4_independent_pair(),
        g1_independent_pair(),
        g1_independent_to_clique(),
    ]
}
