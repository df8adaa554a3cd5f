/// Failures that end a run before any output is written.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Domain(#[from] polysys_core::Error),
}

impl CliError {
    /// 2 for bad invocations and unreadable inputs, 3 for errors raised by the algebra.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Domain(_) => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
