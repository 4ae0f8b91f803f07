use thiserror::Error;

/// Errors shared across the library. Every variant starts its message with a
/// stable machine-readable code so callers (and the CLI) can match on text.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("SELF_LOOP: edge ({0}, {0}) is a self-loop")]
    SelfLoop(usize),

    #[error("VERTEX_OUT_OF_RANGE: vertex {id} not in 0..{order}")]
    VertexOutOfRange { id: usize, order: usize },

    #[error("SAME_VERTEX: {op} needs two distinct vertices, got {v} twice")]
    SameVertex { op: &'static str, v: usize },

    #[error("DIFFERENT_COMPONENTS: vertices {0} and {1} lie in different components")]
    DifferentComponents(usize, usize),

    #[error("DISCONNECTED_INPUT: {0} requires a connected graph")]
    DisconnectedInput(&'static str),

    #[error("ORDER_TOO_SMALL: {op} requires order >= {min}, got {actual}")]
    OrderTooSmall {
        op: &'static str,
        min: usize,
        actual: usize,
    },

    #[error("SIZE_LIMIT_EXCEEDED: {op} is capped at {limit} vertices, got {actual}")]
    SizeLimitExceeded {
        op: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("INVALID_PARAMS: {0}")]
    InvalidParams(String),

    #[error("PARSE_ERROR: line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
