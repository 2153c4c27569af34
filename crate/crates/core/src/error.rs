use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("size limit exceeded: {what} reached {reached} (limit {limit})")]
    LimitExceeded { what: &'static str, limit: u128, reached: u128 },

    #[error("partition {0} is not an element of this bond lattice")]
    NotInLattice(String),

    #[error("graph is disconnected: {0}")]
    Disconnected(String),

    /// A quantity that must be an integer came out fractional. Never expected.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
