use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A hypothesis of one of the domination constructions that the input failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    Connected,
    Regular,
    /// The graph is r-regular but r is below the minimum the construction needs.
    DegreeAtLeast {
        required: usize,
        found: usize,
    },
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::Connected => write!(f, "graph must be connected"),
            Hypothesis::Regular => write!(f, "graph must be regular"),
            Hypothesis::DegreeAtLeast { required, found } => {
                write!(
                    f,
                    "graph must be r-regular with r >= {required}, found r = {found}"
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition violated: {0}")]
    Precondition(Hypothesis),
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("DIMACS parse error on line {line}: {message}")]
    Dimacs { line: usize, message: String },
    #[error("generation failed: {0}")]
    Generation(String),
    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidInput(message.into())
    }
}
