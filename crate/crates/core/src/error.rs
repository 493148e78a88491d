use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoebiusError {
    #[error("degenerate linear-fractional map (ad - bc = 0)")]
    Degenerate,
    #[error("denominator vanishes on the closed unit disk")]
    PoleInClosedDisk,
    #[error("map does not send the unit disk into itself")]
    NotSelfMap,
    #[error("parameter b must satisfy |b| < 1")]
    ParameterOutsideDisk,
    #[error("parameters violate |a| + |b(1-a)| <= 1")]
    Inadmissible,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by the zero function")]
    DivisionByZero,
    #[error("surd powers or surd radicands do not match")]
    SurdMismatch,
    #[error("surd radicand must be a positive rational")]
    BadSurd,
    #[error("substitution produces an identically zero denominator")]
    DegenerateSubstitution,
    #[error("parameter b must be real")]
    NonRealParameter,
    #[error(transparent)]
    Symbol(#[from] MoebiusError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardyError {
    #[error(transparent)]
    Symbol(#[from] MoebiusError),
    #[error("block size {k} exceeds truncation order {n}")]
    BlockTooLarge { k: usize, n: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("row and column 0 are not the first basis vector (symbol does not fix 0)")]
    NotReducing,
}
