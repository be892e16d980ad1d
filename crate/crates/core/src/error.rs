use thiserror::Error;

/// Every failure the library reports. Analysis outcomes such as Jacobi
/// violations or obstruction classes are values, not errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient is not a Laurent polynomial")]
    NonPolynomialQuotient,
    #[error("entry {context} has negative valuation {valuation}; no limit at eps = 0")]
    DivergentEntry { context: String, valuation: i64 },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("endomorphism is not a derivation of the law")]
    NotADerivation,
    #[error("cochain is not alternating")]
    NotAlternating,
    #[error("product is not Lie-admissible")]
    NotLieAdmissible,
    #[error("law is not nilpotent of nilindex at most 3")]
    NilindexTooLarge,
    #[error("cochains with {0} arguments are outside the supported range")]
    DegreeOutOfRange(usize),
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("entry {index} has valuation {valuation}; expected a positive valuation")]
    NegativeValuation { index: usize, valuation: i64 },
    #[error("first decomposition term is not a 2-cocycle of the base law")]
    FirstTermNotCocycle,
    #[error("basis indices {0:?} do not span a subalgebra")]
    NotASubalgebra(Vec<usize>),
    #[error("Saletan families need a singular endomorphism")]
    SaletanRequiresSingular,
    #[error("law does not satisfy the Jacobi identity")]
    NotALieLaw,
    #[error("invalid deformation: {0}")]
    InvalidDeformation(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("bad parameters for `{name}`: {reason}")]
    BadParams { name: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
