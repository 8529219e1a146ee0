use thiserror::Error;

use crate::quiver::DiagramType;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex name {0:?} is empty or contains whitespace")]
    InvalidVertexName(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("more than one arrow between {0} and {1}")]
    ParallelArrows(String, String),
    #[error("loop at {0} is not allowed in hereditary mode")]
    LoopInHereditary(String),
    #[error("quiver has a directed cycle")]
    CyclicQuiver,
    #[error("quiver is not connected")]
    NotConnected,
    #[error("operation requires a hereditary-mode quiver")]
    NotHereditaryMode,
    #[error("operation requires a {0}-mode quiver")]
    WrongMode(&'static str),

    #[error("dimension sequence needs at least 3 entries, got {0}")]
    TooShort(usize),
    #[error("dimension sequence entries must be positive")]
    NonPositiveEntry,
    #[error("{0:?} is not a (cyclic) dimension sequence")]
    InvalidSequence(Vec<u32>),
    #[error("invalid valuation ({0},{1})")]
    InvalidValuation(u32, u32),

    #[error("vertex {0} is not a sink")]
    NotASink(String),
    #[error("vertex {0} is not a source")]
    NotASource(String),
    #[error("iteration cap of {0} steps exceeded")]
    CapExceeded(usize),
    #[error("component is not representation-finite")]
    NotRepresentationFinite,

    #[error("valuations admit no symmetrizer")]
    NotSymmetrizable,
    #[error("B(e_k, e_k) vanishes at vertex {0}")]
    DegenerateVertex(String),
    #[error("{0} does not carry a positive definite form")]
    NotDynkin(DiagramType),
    #[error("no closed-form root list for this family")]
    UnsupportedType,

    #[error("component is not simply laced (all labels must be trivial)")]
    NotSimplyLaced,
    #[error("subspaces do not form a subrepresentation")]
    IncompatibleSubrep,
    #[error("vertex path is not an arm of the quiver")]
    NotAnArm,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: invalid arrow label: {message}")]
    InvalidLabel { line: usize, message: String },
}
