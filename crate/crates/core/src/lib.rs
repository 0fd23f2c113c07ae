//! Properly colored and rainbow trees in edge-colored graphs.
//!
//! The main entry points are [`build_pc_tree`], which returns either a
//! properly colored tree of order at least `min(n, 2δᶜ + 1)` or a structural
//! certificate that none exists, and [`build_rainbow_tree`] for star-colored
//! graphs.

pub mod error;
pub mod extremal;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod matroid;
pub mod oracle;
pub mod pc;
pub mod rainbow;
pub mod random;
pub mod sat;
pub mod tree;
pub mod union_find;

pub use error::{FamilyError, FormatError, GraphError, MatroidError, OracleError, RainbowError, SatError, SolveError};
pub use extremal::{
    canonical_layout, generate, realize, recognize, verify_membership, FamilyInstance, FamilyTag, Role,
};
pub use format::{parse_graph, parse_tree, write_graph, write_tree};
pub use graph::{Color, Edge, EdgeColoredGraph, EdgeId, EdgeSet, IdSet, Subgraph, VertexId, VertexSet};
pub use matroid::{has_rainbow_spanning_tree, max_common_independent, max_rainbow_forest, MatroidKind, MatroidView};
pub use pc::{
    bridge_certificate, build_pc_tree, exhaustive_threshold_search, preprocess_removable_edges, recolor_stars,
    repair_candidates, repair_extremal, restore_colors, Branch, NoWitness, Preprocessed, RecolorMap, RepairCandidate,
    RepairInfo, RunReport, Solution, SolveOutcome, DEFAULT_DELTA0,
};
pub use rainbow::{build_rainbow_tree, build_rainbow_tree_from, RainbowRun, RainbowTrace};
pub use random::{
    random_bridge_instance, random_connected_graph, random_matroid_pair, random_star_colored_graph, BridgeCase,
};
pub use sat::{build_tree_from_assignment, extract_assignment, reduce, CnfFormula, ReductionMap};
pub use tree::{check_tree, verify_tree, ColoredTree, TreeDefect, TreeMode};
