use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{0} is not an edge")]
    NotAnEdge(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("orientation is not optimum for k = {0}")]
    NotOptimum(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("matrix is not a skew-symmetric {{0, 1, -1}} matrix: {0}")]
    BadSkewMatrix(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("infeasible: {0}")]
    Infeasible(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
