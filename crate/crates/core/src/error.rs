//! Crate-wide error type.

/// Errors produced by graph construction, parsing and the guarded
/// (exponential) routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("duplicate vertex label '{0}'")]
    DuplicateLabel(String),

    #[error("invalid vertex label '{0}'")]
    InvalidLabel(String),

    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),

    #[error("vertex index {index} out of range (graph has {n} vertices)")]
    VertexOutOfRange { index: u32, n: usize },

    #[error("self-loop on vertex '{0}'")]
    SelfLoop(String),

    #[error("duplicate edge {0}")]
    DuplicateEdge(String),

    #[error("directed cycle through vertex '{0}'")]
    DirectedCycle(String),

    #[error("graph type '{gtype}' does not allow edge {edge}")]
    EdgeKindForbidden { gtype: String, edge: String },

    #[error("more than one edge between '{0}' and '{1}' (type 'mag' allows at most one)")]
    MultiEdgeInMag(String, String),

    #[error("undirected edge {0} touches a vertex with parents or siblings")]
    UndirectedNotTop(String),

    #[error("not a summary graph: {0}")]
    NotSummary(String),

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("head must be nonempty")]
    EmptyHead,

    #[error("'{0}' lies in the undirected part; heads are defined on the directed part only")]
    HeadInUndirectedPart(String),

    #[error("{0} is not a head")]
    NotAHead(String),

    #[error("input is not a MAG: {0}")]
    NotAMag(String),

    #[error("vertex sets differ: {0}")]
    VertexSetMismatch(String),

    #[error("problem too large for exhaustive search: {0}")]
    GuardExceeded(String),

    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
