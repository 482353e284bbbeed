use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("coefficient {0} is not invertible in the coefficient field")]
    NotInvertible(String),
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("polynomials or ideals live in different rings")]
    RingMismatch,
    #[error("expected {expected} images, got {got}")]
    ImageCountMismatch { expected: usize, got: usize },
    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("more than two variables occur in a binary form")]
    TooManyVariables,
    #[error("ring has {0} variables, at most {max} are supported", max = crate::ring::MAX_VARS)]
    RingTooLarge(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("not a linear form: {0}")]
    NotLinear(String),
    #[error("{0} out of range")]
    OutOfRange(String),
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("conjugation component `{0}` is not invertible")]
    NotInvertibleAction(&'static str),
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("prime is not generated by two independent rational linear forms")]
    NotRationalLinear,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("hypothesis violated: ht I_{t}(phi) = {found}, expected {expected}")]
    Hypothesis { t: usize, found: usize, expected: usize },
    #[error("no system of parameters found after {0} attempts")]
    NoSystemOfParameters(usize),
    #[error("no rank-2 slice of the Jacobian dual modulo the fiber ideal")]
    NoRankTwoSlice,
    #[error("invalid basic entry sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),
    #[error("all inputs are zero")]
    AllZero,
    #[error("generators have mixed degrees")]
    MixedDegrees,
    #[error("ideal is not contained in the prime")]
    NotContained,
    #[error("unavailable over the rationals: {0}")]
    Unavailable(String),
    #[error("instance schema violation: {0}")]
    Schema(String),
    #[error("ideal is not linearly presented (linear syzygy space of dimension {nullity})")]
    NotLinearlyPresented { nullity: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used for process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed or invalid input.
    Input,
    /// Valid input outside the standing hypotheses.
    Hypothesis,
    Internal,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::UnknownVariable { .. }
            | Error::Syntax { .. }
            | Error::NotInvertible(_)
            | Error::NotPrime(_)
            | Error::RingMismatch
            | Error::NotHomogeneous(_)
            | Error::RingTooLarge(_)
            | Error::DuplicateVariable(_)
            | Error::NotLinear(_)
            | Error::OutOfRange(_)
            | Error::ShapeMismatch(_)
            | Error::ZeroPoint
            | Error::NotRationalLinear
            | Error::InvalidSequence(_)
            | Error::InvalidArrangement(_)
            | Error::AllZero
            | Error::Schema(_) => ErrorClass::Input,
            Error::Hypothesis { .. } | Error::MixedDegrees | Error::NotLinearlyPresented { .. } => {
                ErrorClass::Hypothesis
            }
            _ => ErrorClass::Internal,
        }
    }
}
