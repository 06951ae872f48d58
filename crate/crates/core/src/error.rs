use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    Loop { edge: usize, vertex: usize },
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph has connectivity {found}, need at least {required}")]
    ConnectivityTooLow { required: usize, found: usize },
    #[error("shore must be a nonempty proper subset of the vertex set")]
    InvalidShore,
    #[error("cut of size {0} is even")]
    EvenCut(usize),
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("vertices {0} and {1} lie in the same color class")]
    SameColorClass(usize, usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("invalid edge bijection: {0}")]
    InvalidBijection(String),
    #[error("edge {0} does not exist")]
    NoSuchEdge(usize),
    #[error("graph has {n} vertices, above the enumeration cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("unknown named graph {0:?}")]
    UnknownName(String),
    #[error("{0}")]
    InvalidArgument(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("graph has no perfect matching")]
    NotMatchable,
    #[error("not a {0}-cut")]
    NotKCut(usize),
}
