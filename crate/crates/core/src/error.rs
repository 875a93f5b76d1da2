use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} is out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(i64),
    #[error("unknown vertex label {0}")]
    UnknownLabel(i64),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("header declares {declared} edges but {found} were read")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("not a matching of the graph: {0}")]
    InvalidMatching(String),
    #[error("matching is not perfect")]
    NotPerfect,
    #[error("graph is not matchable")]
    NotMatchable,
    #[error("graph of order {n} exceeds the {what} bound of {bound} vertices")]
    TooLarge {
        what: &'static str,
        n: usize,
        bound: usize,
    },
    #[error("edge ({0}, {1}) is not an edge of the KE part")]
    NotKeEdge(usize, usize),
    #[error("graph order must be even, got {0}")]
    OddOrder(usize),
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
}

impl Error {
    /// Stable machine-readable tag used in JSON error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::LoopEdge(_) => "loop_edge",
            Error::EndpointOutOfRange { .. } => "endpoint_out_of_range",
            Error::DuplicateEdge(..) => "duplicate_edge",
            Error::VertexOutOfRange { .. } => "vertex_out_of_range",
            Error::MissingEdge(..) => "missing_edge",
            Error::DuplicateLabel(_) => "duplicate_label",
            Error::UnknownLabel(_) => "unknown_label",
            Error::Parse { .. } => "parse",
            Error::EdgeCountMismatch { .. } => "edge_count_mismatch",
            Error::InvalidMatching(_) => "invalid_matching",
            Error::NotPerfect => "not_perfect",
            Error::NotMatchable => "not_matchable",
            Error::TooLarge { .. } => "too_large",
            Error::NotKeEdge(..) => "not_ke_edge",
            Error::OddOrder(_) => "odd_order",
            Error::InvalidProbability(_) => "invalid_probability",
        }
    }
}
