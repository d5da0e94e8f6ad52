use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Usage(String),

    /// A manifest that names an unknown operation or malformed arguments.
    #[error("manifest: {0}")]
    Config(String),

    #[error(transparent)]
    Core(#[from] monophonic_core::Error),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn parse(line: usize, message: impl Into<String>) -> Self {
        CliError::Parse { line, message: message.into() }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// 1 when a search ran out of budget, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(monophonic_core::Error::BudgetExceeded { .. }) => 1,
            _ => 2,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
