use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime modulus")]
    NotPrime(u32),
    #[error("modulus {0} is too large (must be below 65536)")]
    ModulusTooLarge(u32),
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,
    #[error("subspace is not closed under the cyclic shift")]
    NotShiftClosed,
    #[error("vector has length {got}, expected {expected}")]
    WrongVectorLength { expected: usize, got: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal contract violated: {0}")]
    Contract(String),
    #[error("enumerating {p}^{dim} codewords exceeds the budget of {budget}{}", bound_note(.upper_bound))]
    BudgetExceeded {
        p: u32,
        dim: usize,
        budget: u64,
        /// Best weight seen by sampling, when any was attempted.
        upper_bound: Option<usize>,
    },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unbound constants: {}", .0.join(", "))]
    UnboundConstants(Vec<String>),
    #[error("coefficient {value} is outside [0, {p})")]
    CoefficientOutOfRange { value: u64, p: u32 },
}

fn bound_note(b: &Option<usize>) -> String {
    b.map(|w| format!(" (sampled upper bound {w})")).unwrap_or_default()
}
