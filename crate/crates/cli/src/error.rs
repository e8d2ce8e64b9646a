use thiserror::Error;

/// Exit code for malformed or inconsistent configuration.
pub const EXIT_CONFIG: i32 = 2;
/// Exit code for inputs outside the physical domain (e.g. v ≥ c).
pub const EXIT_PHYSICS: i32 = 3;
pub const EXIT_IO: i32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error in `{field}`: {message}")]
    Config { field: String, message: String },
    #[error("physics-domain error in `{field}`: {source}")]
    Physics {
        field: String,
        #[source]
        source: gemwit_core::Error,
    },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> CliError {
        CliError::Config {
            field: field.into(),
            message: message.into(),
        }
    }

    pub fn physics(field: impl Into<String>, source: gemwit_core::Error) -> CliError {
        CliError::Physics {
            field: field.into(),
            source,
        }
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> CliError {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config { .. } => EXIT_CONFIG,
            CliError::Physics { .. } => EXIT_PHYSICS,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
