use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("zero vector has no primitive representative")]
    ZeroVector,
    #[error("no input vectors")]
    Empty,
    #[error("cone is not pointed (it contains a line)")]
    NotPointed,
    #[error("cone is not full-dimensional")]
    NotFullDimensional,
    #[error("cone generator {0:?} is not an extreme ray")]
    RedundantGenerator(Vec<BigInt>),
    #[error("ring is not Q-Gorenstein: no w with <w, n_i> = 1 for every cone generator")]
    NotQGorenstein,
    #[error("exponent {0:?} lies outside the semigroup of the ring")]
    OutsideSemigroup(Vec<BigInt>),
    #[error("ideals live in different rings")]
    RingMismatch,
    #[error("operation requires a polynomial (orthant) ring: {0}")]
    UnsupportedRing(&'static str),
    #[error("the zero ideal is not allowed here")]
    ZeroIdeal,
    #[error("scale factor must be nonnegative")]
    NegativeScale,
    #[error("generator search did not saturate below degree {0}")]
    EnumerationBound(BigInt),
    #[error("{q} is not a power of {p}")]
    NotPrimePower { q: u64, p: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
