use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Caller passed arguments outside an operation's domain.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("LabelingInvalid: {0}")]
    LabelingInvalid(String),

    /// A family parameter is outside its valid range.
    #[error("InvalidSpec: {0}")]
    InvalidSpec(String),

    /// The parameters are valid for the family but no constructive labeling covers them.
    #[error("UnsupportedParameters: {0}")]
    UnsupportedParameters(String),

    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(String),

    /// The input graph does not have the shape a constructive labeler requires.
    #[error("UnsupportedStructure: {0}")]
    UnsupportedStructure(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    /// True when the constructive route gave up and the exact search is the fallback.
    pub fn suggests_search(&self) -> bool {
        matches!(
            self,
            Error::UnsupportedParameters(_) | Error::UnsupportedStructure(_)
        )
    }
}
