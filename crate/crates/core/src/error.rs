use thiserror::Error;

use crate::scalar::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("scaling parameter {0} is outside (1, 2]")]
    InvalidScaling(Rational),

    #[error("chain of {segments} segment(s) is too short to rescale with s = {s}")]
    ChainTooShort { segments: usize, s: Rational },

    #[error("{requested} smoothing steps requested, at most {max} possible")]
    TooManySteps { requested: usize, max: usize },

    #[error("parse error at row {row}, column {column}: {message}")]
    Parse {
        row: u64,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
