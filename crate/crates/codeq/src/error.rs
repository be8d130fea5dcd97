use std::path::PathBuf;

/// Errors produced by the optimization, neural, data and benchmark layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid bounds: lower bound {lb} must be strictly below upper bound {ub}")]
    InvalidBounds { lb: f64, ub: f64 },

    #[error("population size {size} is too small; at least {min} members are required")]
    PopulationTooSmall { size: usize, min: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("population has no fitness cache; evaluate it first")]
    Unevaluated,

    #[error("member index {index} out of range for population of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("quantum mutation factor u must lie strictly inside (0,1), got {0}")]
    InvalidU(f64),

    #[error("chaotic state requires values strictly inside (0,1), got c={c}, p={p}")]
    InvalidChaoticState { c: f64, p: f64 },

    #[error("evaluation budget {budget} cannot cover one evaluation of a population of {pop_size}")]
    InvalidBudget { budget: usize, pop_size: usize },

    #[error("parameter vector has length {got} but the topology needs {expected}")]
    ParamLengthMismatch { expected: usize, got: usize },

    #[error("dataset has no rows")]
    EmptyDataset,

    #[error("class label {label} out of range for {classes} classes")]
    LabelOutOfRange { label: usize, classes: usize },

    #[error("invalid train size {n_train}: must satisfy 0 < n_train < {rows}")]
    InvalidTrainSize { n_train: usize, rows: usize },

    #[error("each sample must contain at least {min} values")]
    SampleTooSmall { min: usize },

    #[error("need at least {min} runs per algorithm, got {got}")]
    InsufficientRuns { min: usize, got: usize },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: row {row}: {message}")]
    Parse {
        path: PathBuf,
        row: usize,
        message: String,
    },

    #[error("schema mismatch: {0}")]
    Schema(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
