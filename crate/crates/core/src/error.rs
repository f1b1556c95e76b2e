use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} components, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("component index {index} out of range for {n} components")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("{what} supports at most {max} components, got {n}")]
    SizeLimit {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("network has a negative loop on component {component}")]
    NegativeLoop { component: usize },

    #[error("invalid network: {0}")]
    InvalidNetwork(String),

    #[error("invalid configuration literal {literal:?}: {reason}")]
    InvalidLiteral { literal: String, reason: String },

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub(crate) fn check_size(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::SizeLimit { what, n, max })
    } else {
        Ok(())
    }
}
