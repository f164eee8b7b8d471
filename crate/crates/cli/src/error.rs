use thiserror::Error;
use twistcox::CoxError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Input(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] CoxError),
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            line,
            message: message.into(),
        }
    }

    /// 1 verification failure, 2 input error, 3 resource exhaustion.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoxError::VerificationFailed(_)) => 1,
            CliError::Core(
                CoxError::RadiusExhausted { .. }
                | CoxError::CapExhausted { .. }
                | CoxError::InconclusiveRadius { .. },
            ) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
