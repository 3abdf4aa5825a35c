use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("{what} requires n >= {min}, got {n}")]
    TooSmall { what: &'static str, n: usize, min: usize },

    #[error("{what} supports at most {max} vertices, got {n}")]
    TooLarge { what: &'static str, n: usize, max: usize },

    #[error("invalid graph6 string: {0}")]
    Graph6(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("expected {expected} parts, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("{0} is not a verified permis")]
    UnverifiedPermis(String),

    #[error("index {index} out of range (word length {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("configuration width {got} does not match graph order {expected}")]
    WidthMismatch { expected: usize, got: usize },
}
