use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and the matrix constructors.
///
/// Verification failures are never reported through this type; they are
/// data carried by [`crate::report::Verification`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("operands live in different rings ({left} vs {right})")]
    MixedRings { left: String, right: String },

    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("matrix of order {order} is singular (rank {rank})")]
    Singular { order: usize, rank: usize },

    #[error("division by a non-invertible element: {0}")]
    NotInvertible(String),

    #[error("map not applicable to entry {entry}: {reason}")]
    InapplicableMap { entry: String, reason: String },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("expected a monic quadratic, got degree {degree:?} with leading coefficient {leading}")]
    NotMonicQuadratic { degree: Option<usize>, leading: String },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("unsupported modulus {0} (closed forms exist for 3 and 5)")]
    UnsupportedModulus(u64),

    #[error("eigenspace for {eigenvalue} has dimension {dimension}, expected 1")]
    KernelDimension { eigenvalue: String, dimension: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
