use thiserror::Error;

/// Errors raised by the ideal engine and the experiment harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("variable count mismatch: expected {expected}, found {found}")]
    NvarsMismatch { expected: usize, found: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("ideal is not m-primary (quotient has infinite length)")]
    NotMPrimary,

    #[error("complement of the Newton polyhedron is unbounded (infinite volume)")]
    InfiniteVolume,

    #[error("order undefined: every generator lies in the defining ideal")]
    UndefinedOrder,

    #[error("operand is the zero ideal")]
    ZeroIdeal,

    #[error("operand is the unit ideal")]
    UnitIdeal,

    #[error("unsupported dimension {0}: exact volume is implemented for at most 3 variables")]
    UnsupportedDimension(usize),

    #[error("insufficient data: need n_max > {dim}, got {n_max}")]
    InsufficientData { dim: usize, n_max: u32 },

    #[error("unsatisfiable sampler configuration: {0}")]
    UnsatisfiableConfig(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unknown experiment family `{0}`")]
    UnknownFamily(String),

    #[error("invalid parameter: {0}")]
    BadParam(String),

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
