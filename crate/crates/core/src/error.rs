use thiserror::Error;

/// Syntax error in polynomial or rational text, with a byte offset.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("valuation of the zero polynomial is undefined")]
    ZeroValuation,
    #[error("negative derivative order {0}")]
    NegativeOrder(i64),
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("invalid module parameters: {0}")]
    InvalidParams(String),
    #[error("operation not available for this parameter branch: {0}")]
    UnsupportedBranch(String),

    #[error("polynomial {poly} exceeds the bounds s <= {s_bound}, t <= {t_bound}")]
    OutOfBounds { poly: String, s_bound: u32, t_bound: u32 },
    #[error("degree bound {bound} is below the t-degree {degree} of the input")]
    BoundTooSmall { bound: u32, degree: u32 },

    #[error("{0} is not irreducible")]
    Reducible(String),
    #[error("canonical form violates its invariants: {0}")]
    BrokenInvariant(String),
    #[error("dichotomy violated while canonicalizing: {0}")]
    Dichotomy(String),

    #[error("slot index {index} out of range for {slots} slots")]
    SlotOutOfRange { index: usize, slots: usize },
    #[error("repeated node lambda = {0}: the extraction system is singular")]
    RepeatedNode(String),
    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("singular linear system")]
    Singular,
    #[error("degenerate sample pairs: {0}")]
    DegenerateSamples(String),
    #[error("component index j up to {needed} needed, got jmax = {got}")]
    JmaxTooSmall { needed: u32, got: u32 },
    #[error("tensor element has {got} exponents per term, expected {expected}")]
    Arity { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
