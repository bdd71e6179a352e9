use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order t must be a positive integer")]
    ZeroOrder,

    #[error("Laguerre polynomials of order {0} are undefined: the order must be odd")]
    EvenLaguerreOrder(u32),

    #[error("series constant term is not invertible")]
    NonInvertibleConstant,

    #[error("exp requires a series with zero constant term")]
    NonZeroExpConstant,

    #[error("coefficient is not exactly divisible by {0}")]
    InexactDivision(u64),

    #[error("series orders differ ({0} vs {1})")]
    OrderMismatch(usize, usize),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("malformed step word: {0}")]
    MalformedWord(String),

    #[error("unknown generating-function identity `{0}`")]
    UnknownIdentity(String),

    #[error("L-fraction depth {depth} is insufficient for order {order} (need at least {required})")]
    InsufficientDepth {
        depth: usize,
        order: usize,
        required: usize,
    },

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
