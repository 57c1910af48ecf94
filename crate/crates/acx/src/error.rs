use thiserror::Error;

#[derive(Debug, Error)]
pub enum AcxError {
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },

    #[error("unknown input `{0}`: not a file and not a catalog entry")]
    UnknownInput(String),

    #[error("cannot read {path}: {source}")]
    Read { path: String, source: std::io::Error },

    #[error("validation failed: {0}")]
    Validation(#[from] acx_core::Error),

    #[error("validation failed: flag `{flag}` is declared {expected} but does not hold")]
    Flag { flag: String, expected: bool },

    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl AcxError {
    pub fn exit_code(&self) -> u8 {
        match self {
            AcxError::Parse { .. } | AcxError::UnknownInput(_) | AcxError::Read { .. } => 2,
            AcxError::Validation(_) | AcxError::Flag { .. } | AcxError::Io(_) => 1,
        }
    }
}
