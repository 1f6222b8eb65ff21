//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An overlap amplitude of unit-norm states must satisfy |q| <= 1.
    #[error("overlap magnitude {0} exceeds 1")]
    InvalidOverlap(f64),

    /// The superposition norm 2 + 2 Re(q1 q2) vanishes; the two branches
    /// cancel and no normalized state exists.
    #[error("destructively interfering alternatives: normalization vanishes")]
    DegenerateNormalization,

    /// A two-alternative bipartite state has delta in [0, 1/4].
    #[error("delta {0} outside [0, 1/4]")]
    DeltaOutOfRange(f64),

    #[error("expected {expected} coordinates, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("need at least {min} samples, got {got}")]
    TooFewSamples { min: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
