use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: u32, right: u32 },

    #[error("comparison degree {degree} exceeds truncation {qmax}")]
    DegreeExceedsTruncation { degree: u32, qmax: u32 },

    #[error("geometric factor with q-exponent 0 does not converge")]
    NonConvergentFactor,

    #[error("monomials of color-type {left:?} and {right:?} are not comparable")]
    ColorTypeMismatch { left: (u32, u32), right: (u32, u32) },

    #[error("invalid quasi-particle: {0}")]
    InvalidQuasiParticle(String),

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("level must be at least 1")]
    InvalidLevel,

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
