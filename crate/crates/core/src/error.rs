use thiserror::Error;

/// Errors produced by the exact kernels and the algebraic constructions built on them.
///
/// `NonRationalSpectrum` and `BoundExceeded` are capability errors: the input is
/// well formed but lies outside what the exact tooling handles. Batch drivers are
/// expected to skip or report them rather than abort.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("characteristic polynomial does not split over Q")]
    NonRationalSpectrum,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("point does not satisfy [X,Y] + ij = 0")]
    NotOnVariety,
    #[error("Y does not have pairwise distinct eigenvalues")]
    NonGeneric,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("no common invariant flag exists (commutator rank > 1?)")]
    NoCommonFlag,
    #[error("dimension vector is not in Sigma'_lambda: decomposition {witness:?} has p-sum {p_sum} > {p_alpha}")]
    NotSigmaPrime {
        witness: Vec<Vec<u32>>,
        p_sum: i64,
        p_alpha: i64,
    },
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("result is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that signal an input outside the exact tool's scope.
    pub fn is_capability(&self) -> bool {
        matches!(self, Error::NonRationalSpectrum | Error::BoundExceeded(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
