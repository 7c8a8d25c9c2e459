use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("point {point} repeated in cycle notation")]
    RepeatedPoint { point: usize },

    #[error("image array is not a bijection")]
    NotBijective,

    #[error("parse error at position {position} in {input:?}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("{what} bound exceeded: need {required}, limit is {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        required: u128,
    },

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("induction requires index 2, got index {0}")]
    IndexNotTwo(u128),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("characters live on different class data")]
    MismatchedClassData,

    #[error("expected a rational integer, got {value} ({context})")]
    NonIntegral { context: String, value: String },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("character table construction failed: {0}")]
    TableFailure(String),

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),

    #[error("unknown profile {0:?}")]
    UnknownProfile(String),
}
