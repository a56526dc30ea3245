use thiserror::Error;

use crate::report::CheckReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("invalid metric: {0}")]
    InvalidMetric(String),

    #[error("frame failed validation")]
    InvalidFrame(CheckReport),

    #[error("precondition failed: {what}")]
    Precondition { what: String, report: CheckReport },

    #[error("frame is not adapted to xi: {0}")]
    AdaptedFrame(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("preset `{name}` is undefined in dimension {dim} (zero denominator)")]
    DegeneratePreset { name: String, dim: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// The validation report attached to a refusal, if any.
    pub fn report(&self) -> Option<&CheckReport> {
        match self {
            Error::InvalidFrame(r) => Some(r),
            Error::Precondition { report, .. } => Some(report),
            _ => None,
        }
    }
}
