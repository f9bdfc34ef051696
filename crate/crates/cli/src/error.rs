use std::path::PathBuf;

use thiserror::Error;
use wlp_core::{AlgebraError, BettiError, HilbertError, MacaulayError, VerifyError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Macaulay(#[from] MacaulayError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Betti(#[from] BettiError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verify(VerifyError::Guard { .. }) => 4,
            _ => 3,
        }
    }
}
