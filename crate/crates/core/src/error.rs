use thiserror::Error;

/// Errors raised by the exact-arithmetic kernel and the geometry built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomials live over different variable sets")]
    VarSetMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("form matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("form matrix is singular")]
    NotInvertible,
    #[error("matrix is not in sp(2n)")]
    NotSymplectic,
    #[error("not an sl2-triple")]
    InvalidTriple,
    #[error("flag type {0:?} is not a palindromic composition of the ambient dimension")]
    BadFlagType(Vec<usize>),
    #[error("partitions have different sums ({0} vs {1})")]
    UnequalSums(usize, usize),
    #[error("matrix does not have the slice block shape")]
    NotSliceShape,
    #[error("Z2 block is not symmetric")]
    AsymmetricBlock,
    #[error("point does not satisfy the slice equations")]
    OffVariety,
    #[error("malformed flag: {0}")]
    MalformedFlag(String),
    #[error("odd characteristic-polynomial coefficient is nonzero: {0}")]
    OddInvariant(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
