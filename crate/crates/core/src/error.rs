use thiserror::Error;

/// Errors raised by graph construction, the domination engine, generators and
/// parsers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    InvalidEdge(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("label {0:?} is used by more than one vertex")]
    LabelConflict(String),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("graph order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("vertex {0} is not a member of the set")]
    VertexNotInSet(usize),
    #[error("set is not dominating")]
    NotDominating,
    #[error("order {order} exceeds the exact-computation cap {cap}")]
    ExactCapExceeded { order: usize, cap: usize },
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("no closed-form prediction for {0}")]
    UnsupportedOperation(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("labeled enumeration is capped at order {cap}, requested {order}")]
    EnumerationCapExceeded { order: usize, cap: usize },
    #[error("line {line}: malformed entry {text:?}")]
    MalformedLine { line: usize, text: String },
    #[error("line {line}: self-loop on {label:?}")]
    SelfLoop { line: usize, label: String },
}

pub type Result<T> = std::result::Result<T, Error>;
