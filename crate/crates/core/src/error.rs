use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("a ring needs at least one variable")]
    EmptyRing,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("rings share variable `{0}`")]
    OverlappingRings(String),
    #[error("ring mismatch: `{left}` vs `{right}`")]
    RingMismatch { left: String, right: String },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{op} is undefined for the {which} ideal")]
    DegenerateIdeal { op: &'static str, which: &'static str },
    #[error("colon by the zero ideal")]
    ColonByZero,
    #[error("prime {0} is not associated to the ideal")]
    NotAssociated(String),
    #[error("a monomial prime needs at least one variable")]
    EmptyPrime,
    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),
    #[error("ideal is not square-free")]
    NotSquareFree,
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("internal: associated prime {0} has no colon witness")]
    CertificationFailed(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
