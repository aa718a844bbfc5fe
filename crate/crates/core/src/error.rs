use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution makes the denominator {0} vanish")]
    DenominatorVanishes(String),
    #[error("equation is not linear in the unknowns: {0}")]
    NotLinear(String),
    #[error("solution leaves a nonzero residual: {0}")]
    ResidualNonZero(String),
    #[error("slot {slot} out of range for a rank-{rank} tensor")]
    SlotOutOfRange { slot: usize, rank: usize },
    #[error("expected a rank-{expected} tensor, found rank {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("cannot combine tensors of rank {left} and {right}")]
    MixedRank { left: usize, right: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },
    #[error("matrix shape {rows}x{cols} does not fit dimension {dim}")]
    Shape { rows: usize, cols: usize, dim: usize },
    #[error("recursion references unresolved antipode value S({blade}) while expanding {at}")]
    RecursionNotGrounded { at: String, blade: String },
}

pub type Result<T> = std::result::Result<T, Error>;
