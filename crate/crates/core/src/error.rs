use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("physical constant `{name}` must be finite and positive, got {value}")]
    InvalidConstant { name: &'static str, value: f64 },

    #[error("composite dimension {dim} exceeds the limit of {limit}")]
    DimensionTooLarge { dim: usize, limit: usize },

    #[error("{component} index {value} out of range (max {max})")]
    IndexOutOfRange {
        component: &'static str,
        value: usize,
        max: usize,
    },

    #[error("flat index {flat} out of range for dimension {dim}")]
    FlatIndexOutOfRange { flat: usize, dim: usize },

    #[error("single-mode dimension must be at least 1")]
    EmptyMode,

    #[error("dimension mismatch: {left:?} vs {right:?}")]
    BasisMismatch { left: String, right: String },

    #[error("matrix data has {len} entries, expected {expected}")]
    BadEntryCount { len: usize, expected: usize },

    #[error("kept levels {keep} exceed the Landau cutoff {cutoff}")]
    KeepExceedsCutoff { keep: usize, cutoff: usize },

    #[error("matrix is not Hermitian: max |A - A^dagger| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("momentum grid needs at least 3 points, got {0}")]
    GridTooSmall(usize),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("oscillator level {level} exceeds the supported maximum {max}")]
    LevelTooHigh { level: usize, max: usize },

    #[error("unknown Hamiltonian form `{0}` (expected `ladder` or `quadratic`)")]
    UnknownForm(String),

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),
}
