use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("objects live in different rings: {0} and {1}")]
    RingMismatch(String, String),
    #[error("exponent vector has length {found}, ring has {expected} variables")]
    LengthMismatch { expected: usize, found: usize },
    #[error("monomial {0} is zero in the ring")]
    ZeroMonomial(String),
    #[error("variable index {index} out of range 1..={count}")]
    VariableIndex { index: usize, count: usize },
    #[error("ring {0} is not projective (last degree must be inf)")]
    NotProjective(String),
    #[error("ring {0} has too few variables for this operation")]
    TooFewVariables(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no saturated ideal of {ring} has Hilbert polynomial {poly}")]
    EmptyHilbertScheme { ring: String, poly: String },
    #[error("polynomial {0} is not a Hilbert polynomial of any homogeneous ideal")]
    InadmissiblePolynomial(String),
    #[error("components are not an ascending chain at index {0}")]
    ChainViolation(usize),
    #[error("ideal {0} is not saturated")]
    NotSaturated(String),
    #[error("ideal {0} is not strongly stable")]
    NotStronglyStable(String),
    #[error("ideal {0} has a generator divisible by the last variable")]
    LastVariableInGenerator(String),
    #[error("Hilbert polynomial mismatch: expected {expected}, found {found}")]
    HilbertPolynomialMismatch { expected: String, found: String },
    #[error("budget exceeded after visiting {0} candidates")]
    BudgetExceeded(u64),
    #[error("Betti window too small: {0}")]
    WindowTooSmall(String),
    #[error("unsupported degree sequence {0} (only 2 and inf are allowed)")]
    UnsupportedDegrees(String),
    #[error("ideal has {0} generators, above the lcm-lattice limit of {1}")]
    TooManyGenerators(usize, usize),
    #[error("{0} is not a prime characteristic")]
    InvalidCharacteristic(u64),
    #[error("value too large: {0}")]
    TooLarge(String),
}

impl Error {
    /// Short machine-readable tag, stable across releases.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidRing(_) => "invalid-ring",
            Error::RingMismatch(..) => "ring-mismatch",
            Error::LengthMismatch { .. } => "length-mismatch",
            Error::ZeroMonomial(_) => "zero-monomial",
            Error::VariableIndex { .. } => "variable-index",
            Error::NotProjective(_) => "not-projective",
            Error::TooFewVariables(_) => "too-few-variables",
            Error::Parse(_) => "parse",
            Error::EmptyHilbertScheme { .. } => "empty-hilbert-scheme",
            Error::InadmissiblePolynomial(_) => "inadmissible-polynomial",
            Error::ChainViolation(_) => "chain-violation",
            Error::NotSaturated(_) => "not-saturated",
            Error::NotStronglyStable(_) => "not-strongly-stable",
            Error::LastVariableInGenerator(_) => "last-variable-in-generator",
            Error::HilbertPolynomialMismatch { .. } => "hilbert-polynomial-mismatch",
            Error::BudgetExceeded(_) => "budget-exceeded",
            Error::WindowTooSmall(_) => "window-too-small",
            Error::UnsupportedDegrees(_) => "unsupported-degrees",
            Error::TooManyGenerators(..) => "too-many-generators",
            Error::InvalidCharacteristic(_) => "invalid-characteristic",
            Error::TooLarge(_) => "too-large",
        }
    }

    /// Whether the error describes bad input rather than a resource or internal failure.
    pub fn is_domain(&self) -> bool {
        !matches!(
            self,
            Error::BudgetExceeded(_) | Error::TooManyGenerators(..) | Error::TooLarge(_)
        )
    }
}
