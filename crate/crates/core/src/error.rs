use thiserror::Error;

/// Errors raised across the analysis toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic error: {0}")]
    Arithmetic(String),

    /// A variable was used outside the domain of a point or substitution.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two values that must share a variable set do not.
    #[error("environment mismatch: {0}")]
    Environment(String),

    #[error("flow graph is not reducible: {0}")]
    Irreducible(String),

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Input(String),
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

pub type Result<T, E = Error> = std::result::Result<T, E>;
