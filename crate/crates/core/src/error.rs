use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{token}` at position {pos}")]
    UnknownVariable { pos: usize, token: String },
    #[error("invalid ring declaration: {0}")]
    InvalidRing(String),
    #[error("ring declarations do not match: {0}")]
    RingMismatch(String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("ambiguous group: {0}")]
    AmbiguousGroup(String),
    #[error("expected {expected} images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("polynomial is not homogeneous in group {group}")]
    NotHomogeneous { group: String },
    #[error("polynomial involves variables outside group {group}")]
    ForeignVariables { group: String },
    #[error("groups {first} and {second} have different degrees")]
    UnequalDegrees { first: String, second: String },
    #[error("polynomial is not symmetric under exchanging groups {i} and {j}")]
    NotSymmetric { i: usize, j: usize },
    #[error("symmetric polynomial is not a polynomial in the elementary σ (class δ = {class})")]
    NotDecomposable { class: String },
    #[error("form is not splittable: {0}")]
    NotSplittable(String),
    #[error("polynomial is not alternating in groups {i} and {j}")]
    NotAlternating { i: usize, j: usize },
    #[error("size limit exceeded: {what} = {value} > {limit}")]
    SizeLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("wrong number of {what}: expected {expected}, got {got}")]
    WrongCount {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("too many forms: {got} forms against a Chow form of dimension {dim}")]
    TooManyForms { got: usize, dim: isize },
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("invalid exponent: {0}")]
    InvalidExponent(String),
    #[error("minimal polynomial is not admissible: {0}")]
    BadMinpoly(String),
    #[error("points are not presented over a common number field")]
    FieldMismatch,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::UnknownVariable { .. } => "unknown-variable",
            Error::InvalidRing(_) => "invalid-ring",
            Error::RingMismatch(_) => "ring-mismatch",
            Error::UnknownGroup(_) => "unknown-group",
            Error::AmbiguousGroup(_) => "ambiguous-group",
            Error::WrongImageCount { .. } => "wrong-image-count",
            Error::NotHomogeneous { .. } => "not-homogeneous",
            Error::ForeignVariables { .. } => "foreign-variables",
            Error::UnequalDegrees { .. } => "unequal-degrees",
            Error::NotSymmetric { .. } => "not-symmetric",
            Error::NotDecomposable { .. } => "not-decomposable",
            Error::NotSplittable(_) => "not-splittable",
            Error::NotAlternating { .. } => "not-alternating",
            Error::SizeLimit { .. } => "size-limit",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::WrongCount { .. } => "wrong-count",
            Error::TooManyForms { .. } => "too-many-forms",
            Error::ZeroPoint => "zero-point",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::InvalidExponent(_) => "invalid-exponent",
            Error::BadMinpoly(_) => "bad-minpoly",
            Error::FieldMismatch => "field-mismatch",
            Error::Internal(_) => "internal",
        }
    }

    /// Errors in the input text itself, as opposed to mathematical domain errors.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::UnknownVariable { .. } | Error::InvalidRing(_)
        )
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
