use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown variable `{name}` at byte {offset}")]
    UnknownVariable { name: String, offset: usize },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("exponent vector has length {found}, ring arity is {expected}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for a ring with {arity} variables")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("operation is undefined for the zero operator")]
    ZeroOperator,

    #[error("division is not exact")]
    NotDivisible,

    #[error("the curve is constant")]
    ConstantCurve,

    #[error("the curve is not reduced (f has a repeated factor)")]
    NotSquarefree,

    #[error("curve does not pass through the origin")]
    MissesOrigin,

    #[error(
        "curve has singular points away from the origin (saturated singular ideal: {witness})"
    )]
    SingularAwayFromOrigin { witness: String },

    #[error("no stopping point found up to order {cap}")]
    CapExceeded { cap: usize },

    #[error("no generic plane found among the {tried} candidate points")]
    NoGenericPoint { tried: usize },

    #[error("the direction (0,0) does not define a plane")]
    ZeroDirection,

    #[error("Reiffen curves need p >= 4 and q >= p+1, got p={p}, q={q}")]
    InvalidReiffen { p: u32, q: u32 },

    #[error("{0}")]
    InvalidArgument(String),
}
