//! Commands behind the `doodle` binary.
//!
//! Every command renders into a `String` or a writer so that output can be
//! checked without spawning a process.

pub mod commands;
pub mod output;

use std::path::PathBuf;

use doodle_core::{Error as CoreError, SizeLimit};
use thiserror::Error;

/// Largest `n` for which `classify` builds the naming table.
pub const NAME_TABLE_MAX_N: usize = 6;

/// Environment variable overriding the default size guard.
pub const MAX_N_VAR: &str = "DOODLE_MAX_N";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(CoreError),
    #[error("{0}; pass --force or set {MAX_N_VAR} to go further")]
    SizeGuard(CoreError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::SizeGuard(_) => 3,
            CliError::Io { .. } => 4,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::SizeLimitExceeded { .. } | CoreError::ZeroSize => CliError::SizeGuard(e),
            e => CliError::Parse(e),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;

/// The size guard: `--force` lifts it, otherwise `DOODLE_MAX_N` or the
/// library default applies.
pub fn size_limit(force: bool, env_value: Option<&str>) -> Result<SizeLimit> {
    if force {
        return Ok(SizeLimit::unbounded());
    }
    match env_value {
        None => Ok(SizeLimit::default()),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .map(SizeLimit::new)
            .map_err(|_| CliError::Usage(format!("{MAX_N_VAR} must be a number, got {v:?}"))),
    }
}
