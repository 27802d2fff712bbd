use thiserror::Error;

/// Errors produced by model construction, data validation and inference.
#[derive(Debug, Error)]
pub enum Error {
    /// Invalid changepoint-frequency prior (weights, atom locations, ...).
    #[error("invalid prior: {0}")]
    Prior(String),

    /// Likelihood hyperparameters violate their positivity constraints.
    #[error("invalid hyperparameters for {family}: {message}")]
    Hyperparameters { family: &'static str, message: String },

    /// A data value lies outside the support of the active likelihood family.
    #[error("value {value} at row {row}, column {col} outside support of {family} family")]
    Support {
        family: &'static str,
        row: usize,
        col: usize,
        value: f64,
    },

    /// Matrix shapes disagree or violate an invariant.
    #[error("shape error: {0}")]
    Shape(String),

    /// A delimited input file failed to parse.
    #[error("parse error at line {line}, field {field}: {message}")]
    Parse {
        line: usize,
        field: usize,
        message: String,
    },

    /// Exhaustive enumeration was requested beyond its hard cap.
    #[error("enumeration over {bits} binary variables exceeds the cap of {cap}")]
    EnumerationCap { bits: usize, cap: usize },

    /// The conjugate posterior mean does not exist for this segment.
    #[error("posterior mean undefined for {family} family: {message}")]
    PosteriorMeanUndefined { family: &'static str, message: String },

    /// Generic configuration problem.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// I/O failure while reading or writing files.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
