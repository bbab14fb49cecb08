use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Argument outside a function's domain.
    #[error("domain error: {0}")]
    Domain(String),
    /// A pole or other singularity was hit (or approached too closely).
    #[error("singularity: {0}")]
    Singular(String),
    /// A series hit its term cap before reaching the requested tolerance.
    #[error("series did not converge: {0}")]
    NoConverge(String),
    /// An operator or input did not have the required shape.
    #[error("shape error: {0}")]
    Shape(String),
    /// Parameter bundle failed a family's validity predicate.
    #[error("parameter error: {0}")]
    Param(String),
    /// Expression parse error with byte offset into the source.
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    /// Numeric overflow in an evaluator (growth guard).
    #[error("overflow: {0}")]
    Overflow(String),
    /// Unknown registry id.
    #[error("unknown id: {0}")]
    UnknownId(String),
    /// Grid/resolution constraint violated.
    #[error("resolution error: {0}")]
    Resolution(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
