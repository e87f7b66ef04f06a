use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not chordal")]
    NotChordal,

    #[error("graph is not an interval graph")]
    NotInterval,

    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("invalid ordering: {0}")]
    InvalidOrdering(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed instance: {0}")]
    Instance(String),

    #[error("assignment does not satisfy clause {0}")]
    Unsatisfied(usize),

    #[error("cross-check failed: {0}")]
    Disagreement(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
