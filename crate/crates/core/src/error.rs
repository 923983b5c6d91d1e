use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("generators have gcd {0}, so the complement is infinite")]
    NonCoprimeGenerators(i64),
    #[error("conductor {0} is negative")]
    InvalidConductor(i64),
    #[error("element {element} is out of range or out of order for conductor {conductor}")]
    MalformedElements { element: i64, conductor: i64 },
    #[error("0 is missing from the element list")]
    MissingZero,
    #[error("{0} is listed but equals conductor - 1")]
    FrobeniusInSet(i64),
    #[error("not closed under addition: {0} + {1} is missing")]
    NotClosed(i64, i64),
    #[error("not a relative ideal: {element} + {generator} is missing")]
    NotAnIdeal { element: i64, generator: i64 },
    #[error("ideals have different ambient semigroups")]
    AmbientMismatch,
    #[error("invalid b = {b}: {reason}")]
    InvalidB { b: i64, reason: &'static str },
    #[error("E + E + b is not contained in S: {first} + {second} + {b} is missing")]
    SumNotInS { first: i64, second: i64, b: i64 },
    #[error("bound {bound} is below the required minimum {required}")]
    BoundTooSmall { bound: i64, required: i64 },
    #[error("bound {bound} exceeds the configured limit {limit}")]
    BoundTooLarge { bound: i64, limit: i64 },
    #[error("hypothesis 2f(S) > 2f(E) + b fails: {lhs} <= {rhs}")]
    HypothesisViolated { lhs: i64, rhs: i64 },
    #[error("semigroup is not almost symmetric")]
    NotAlmostSymmetric,
    #[error("semigroup is the whole of N")]
    IsNaturals,
    #[error("no ideal containing 0 can have Frobenius number {0}")]
    InvalidFrobenius(i64),
}

impl Error {
    /// Stable machine-readable name, used in JSON error output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::NonPositiveGenerator(_) => "NonPositiveGenerator",
            Error::NonCoprimeGenerators(_) => "NonCoprimeGenerators",
            Error::InvalidConductor(_) => "InvalidConductor",
            Error::MalformedElements { .. } => "MalformedElements",
            Error::MissingZero => "MissingZero",
            Error::FrobeniusInSet(_) => "FrobeniusInSet",
            Error::NotClosed(..) => "NotClosed",
            Error::NotAnIdeal { .. } => "NotAnIdeal",
            Error::AmbientMismatch => "AmbientMismatch",
            Error::InvalidB { .. } => "InvalidB",
            Error::SumNotInS { .. } => "SumNotInS",
            Error::BoundTooSmall { .. } => "BoundTooSmall",
            Error::BoundTooLarge { .. } => "BoundTooLarge",
            Error::HypothesisViolated { .. } => "HypothesisViolated",
            Error::NotAlmostSymmetric => "NotAlmostSymmetric",
            Error::IsNaturals => "IsNaturals",
            Error::InvalidFrobenius(_) => "InvalidFrobenius",
        }
    }
}
