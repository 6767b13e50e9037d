use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid vertex pair ({u}, {v}) for n = {n}")]
    InvalidPair { u: usize, v: usize, n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("search budget exceeded after {nodes} nodes ({seconds:.3} s)")]
    BudgetExceeded { nodes: u64, seconds: f64 },

    #[error("graph with {vertices} vertices exceeds the materialization cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },

    #[error("labels violate the two-ones-of-four property on quadruple {quadruple:?}")]
    LabelProperty { quadruple: [usize; 4] },

    #[error("unresolved graph descriptor {0:?}")]
    UnresolvedDescriptor(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}
