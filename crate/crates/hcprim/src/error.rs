//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("bad field: {0}")]
    BadField(String),

    #[error("elements belong to different fields")]
    OwnerMismatch,

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("l = {l} divides q = {q}: defining characteristic")]
    DefiningCharacteristic { q: u64, l: u64 },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("vector not in the span of the given basis")]
    NotInSpan,

    #[error("inconclusive after retry budget: {0}")]
    Inconclusive(String),

    #[error("non-split endomorphism field of degree {degree}: extend scalars")]
    ExtendScalars { degree: u32 },

    #[error("no cuspidal module: {0}")]
    NoCuspidal(String),

    #[error("invalid input: {0}")]
    BadInput(String),

    #[error("verification mismatch: {0}")]
    Verification(String),
}
