use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Incompatible array dimensions; carries both offending shapes.
    #[error("shape mismatch in {op}: {lhs} vs {rhs}")]
    Shape { op: String, lhs: String, rhs: String },

    /// Input outside the mathematical domain of an operation.
    #[error("{0}")]
    Domain(String),

    /// API misuse (stale cache, inconsistent arguments).
    #[error("invalid usage: {0}")]
    Usage(String),

    /// Malformed input file; `line` is 1-based and counts the header.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// External data failed validation; every offender is listed.
    #[error("validation of {name} failed: {}", issues.join("; "))]
    Validation { name: String, issues: Vec<String> },

    /// Training produced a non-finite loss.
    #[error("training diverged at epoch {epoch}: non-finite loss")]
    Diverged { epoch: usize },

    /// Least-squares system could not be solved.
    #[error("estimation failed: {0}")]
    Estimation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    pub fn shape(op: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Error::Shape {
            op: op.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
