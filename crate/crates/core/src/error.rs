//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("exponent overflow in monomial arithmetic")]
    ExponentOverflow,
    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,
    #[error("operation requires a proper ideal")]
    UnitIdeal,
    #[error("colon by the zero ideal is undefined")]
    ColonByZeroIdeal,
    #[error("resource cap exceeded: {what} (limit {limit})")]
    ResourceCap { what: &'static str, limit: usize },
    #[error("quotient is not Cohen-Macaulay: projective dimension {pd} != height {ht}")]
    NotCohenMacaulay { pd: usize, ht: usize },
    #[error("ideal is not stable")]
    NotStable,
    #[error("input must be homogeneous")]
    NonHomogeneous,
    #[error("term order is not global; polynomial division requires a well-order")]
    NonGlobalOrder,
    #[error("no Artinian reduction found after {tries} random draws")]
    NonArtinianReduction { tries: u32 },
    #[error("generic initial ideal: independent seeds disagree even after widening the coefficient range")]
    GinSeedsDisagree,
    #[error("weight inequality system infeasible; this indicates an internal inconsistency")]
    InfeasibleWeights,
    #[error("invalid semigroup parameters: need distinct primes p < q, got p={p}, q={q}")]
    InvalidSemigroup { p: u64, q: u64 },
    #[error("need at least {need} data points, got {got}")]
    NotEnoughData { need: usize, got: usize },
    #[error("search reached its stated upper bound; result would be unreliable")]
    SearchBoundHit,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
