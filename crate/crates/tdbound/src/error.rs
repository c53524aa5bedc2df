use thiserror::Error;

/// Errors surfaced by the command layer.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] tdbound_core::Error),
    #[error("usage: {0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

impl CliError {
    /// 2 for invalid input, 1 for failures during computation or output.
    pub fn exit_code(&self) -> u8 {
        use tdbound_core::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(E::InvalidArgument(_) | E::NotDominant | E::IncompatibleMethod | E::DimensionCap { .. }) => {
                2
            }
            _ => 1,
        }
    }
}
