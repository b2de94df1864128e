//! Crate-wide error type.

/// Errors produced by kernel evaluation, the dual solvers, the dataset
/// generators, and the I/O layer.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("non-finite value in {context}")]
    NonFinite { context: &'static str },

    #[error("empty input: {context}")]
    EmptyInput { context: &'static str },

    #[error("kernel domain mismatch: {details}")]
    DomainMismatch { details: String },

    /// The real part of the complex Gaussian exponent left the safe range
    /// ±700; the complex Gaussian is unbounded, so this must be loud instead
    /// of silently returning Inf.
    #[error("complex exponent real part {exponent} outside the safe range +-700")]
    ExponentRange { exponent: f64 },

    #[error("precomputed gram index {index} out of range for n = {n}")]
    GramIndex { index: usize, n: usize },

    #[error("gram entry ({row}, {col}): {source}")]
    GramEntry {
        row: usize,
        col: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("gram matrix not symmetric at ({row}, {col})")]
    NonSymmetricGram { row: usize, col: usize },

    #[error("single-class input: {channel} channel has only one label value")]
    SingleClass { channel: &'static str },

    #[error("labels must be +1 or -1 (index {index})")]
    InvalidLabel { index: usize },

    #[error("infeasible dual coefficients: empty bias interval [{lo}, {hi}]")]
    InconsistentDual { lo: f64, hi: f64 },

    #[error("instance too large for brute-force search: n = {n} (max {max})")]
    BruteforceTooLarge { n: usize, max: usize },

    #[error("grid resolution {got} below the minimum of {min}")]
    GridResolution { got: usize, min: usize },

    #[error("csv error at line {line}, column {col}: {msg}")]
    Csv { line: usize, col: usize, msg: String },

    #[error("model mismatch: {details}")]
    ModelMismatch { details: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
