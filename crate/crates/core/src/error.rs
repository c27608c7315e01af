use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arguments are not coprime: gcd({a}, {b}) > 1")]
    NotCoprime { a: BigInt, b: BigInt },

    #[error("modulus must be at least {min}, got {got}")]
    BadModulus { got: BigInt, min: i64 },

    #[error("cyclic polynomial moduli differ: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },

    #[error("operation is only defined on the canonical (minus) Seifert structure")]
    UnsupportedStructure,

    #[error("continued fraction evaluation hit a zero intermediate denominator")]
    ZeroDenominator,

    #[error("intersection form is not negative definite")]
    NotNegativeDefinite,

    #[error("r-dependence did not cancel in 4*eta_dir + eta_sign")]
    RDependenceNonzero,
}

pub type Result<T> = std::result::Result<T, Error>;
