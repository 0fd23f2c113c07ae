use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("edge {edge} out of range for graph with {m} edges")]
    EdgeOutOfRange { edge: EdgeId, m: usize },
    #[error("loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("edge {0}-{1} has color 0; colors must be positive")]
    ZeroColor(VertexId, VertexId),
    #[error("empty edge set")]
    EmptyComponent,
    #[error("graph is not connected")]
    NotConnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        FormatError {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("edge {0} is not in the ground set")]
    OutsideGround(EdgeId),
    #[error("matroids are defined over different ground sets")]
    MismatchedGrounds,
    #[error("edge {edge} does not lie inside the allowed vertex set")]
    EdgeOutsideVertexSet { edge: EdgeId },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RainbowError {
    #[error("input graph is not connected")]
    NotConnected,
    #[error("input graph is not star-colored (color {0} is not a star)")]
    NotStarColored(u32),
    #[error("root {0} is not a vertex of the graph")]
    BadRoot(VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters for {tag}: {reason}")]
    InvalidParameters { tag: &'static str, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("input graph is not connected")]
    NotConnected,
    #[error("delta0 must be at least 2, got {0}")]
    InvalidDelta0(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no deleted edge admits a valid repair set")]
    NoValidRepair,
    #[error("internal guarantee violated: {0}")]
    InternalGuaranteeViolation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance size {size} exceeds oracle bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("input graph is not connected")]
    NotConnected,
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("literal {literal} refers to a variable outside 1..={vars}")]
    LiteralOutOfRange { literal: i64, vars: usize },
    #[error("clause {0} is empty")]
    EmptyClause(usize),
    #[error("clause {clause} repeats literal {literal}")]
    DuplicateLiteral { clause: usize, literal: i64 },
    #[error("formula needs at least one variable")]
    NoVariables,
    #[error("tree does not belong to the reduced graph: {0}")]
    ForeignTree(String),
    #[error("assignment has {got} values, formula has {expected} variables")]
    AssignmentLength { expected: usize, got: usize },
    #[error(transparent)]
    Format(#[from] FormatError),
}
