//! Error type shared by the whole crate.

use thiserror::Error;

/// Errors raised by exact-arithmetic preconditions, reduction loops and
/// parsing. Every variant corresponds to a violated documented
/// precondition or an external-input problem; no variant is reachable
/// from valid inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no standard associate of zero")]
    StandardAssociateOfZero,

    #[error("gcd certificate undefined for (0, 0)")]
    ExtGcdOfZeroPair,

    #[error("residue system undefined for modulus zero")]
    ZeroModulus,

    #[error("matrix has a non Gaussian-integer entry: {0}")]
    NotGaussian(String),

    #[error("matrix is not unimodular: det = {0}")]
    NotUnimodular(String),

    #[error("matrix has determinant zero")]
    SingularMatrix,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("factorization budget exceeded: norm(N) = {norm} > {bound}")]
    FactorizationBudget { norm: String, bound: u64 },

    #[error("point reduction did not converge within {0} iterations")]
    NonConvergence(usize),

    #[error("point must have y > 0")]
    NonPositiveHeight,

    #[error("matrix entry is not real: {0}")]
    NonRealEntry(String),

    #[error("element does not stabilize the first Iwasawa coordinate")]
    NotPhi1Stabilizer,

    #[error("unknown domain tag: {0}")]
    UnknownDomain(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
