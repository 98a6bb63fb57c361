use thiserror::Error;

/// Errors produced by the clustering, degrees-of-freedom and selection routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("data matrix must have at least one row and one column")]
    Empty,
    #[error("expected {expected} values for the matrix shape, got {got}")]
    ShapeMismatch { expected: usize, got: usize },
    #[error("non-finite value at row {row}, column {col}")]
    NonFinite { row: usize, col: usize },
    #[error("column {0} has zero variance")]
    ConstantColumn(usize),
    #[error("k = {k} exceeds the number of rows n = {n}")]
    KTooLarge { k: usize, n: usize },
    #[error("only {distinct} distinct rows, cannot form k = {k} clusters")]
    DegenerateData { distinct: usize, k: usize },
    #[error("the k' = {k_prime} fit has zero residual; choose a smaller k'")]
    ZeroResidual { k_prime: usize },
    #[error("every residual sum of squares is at the numerical floor")]
    AllDegenerate,
    #[error("label vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("ideal ARI must be positive, got {0}")]
    NonpositiveIdeal(f64),
    #[error("could not place component means after {0} attempts")]
    RejectionFailure(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
