use thiserror::Error;

/// Errors raised while building frameworks or running analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input. `line` is 1-based when known.
    #[error("{}{message}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Input {
        line: Option<usize>,
        message: String,
    },

    /// A configured size limit was exceeded. Results are never truncated.
    #[error("{what} exceeds the configured cap of {cap}")]
    Capacity { what: String, cap: usize },

    /// The operation requires a flat framework.
    #[error("framework is not flat: assumption `{0}` is deducible from other assumptions")]
    NotFlat(String),
}

impl Error {
    pub(crate) fn input(line: Option<usize>, message: impl Into<String>) -> Self {
        Error::Input {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn capacity(what: impl Into<String>, cap: usize) -> Self {
        Error::Capacity {
            what: what.into(),
            cap,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
