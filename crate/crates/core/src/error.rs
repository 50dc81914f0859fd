use thiserror::Error;

/// Errors raised anywhere in the polytope / invariant / identity pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension must be at least 1, got {0}")]
    InvalidDimension(usize),

    #[error("point has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("polytope has no vertices")]
    Empty,

    #[error("vertex {0} appears more than once")]
    DuplicateVertex(usize),

    #[error("vertex {index} = {coords:?} is not primitive")]
    NonPrimitiveVertex { index: usize, coords: Vec<i64> },

    #[error("vertices do not affinely span {0}-dimensional space")]
    DegenerateInput(usize),

    #[error("origin is not strictly interior (facet {normal:?}·x <= {offset})")]
    OriginNotInterior { normal: Vec<i64>, offset: i64 },

    #[error("point {0} is not a vertex of the convex hull of the others")]
    RedundantVertex(usize),

    #[error("polytope is not reflexive")]
    NotReflexive,

    #[error("polytope is not smooth")]
    NotSmooth,

    #[error("dual vertex for facet {0} is not integral")]
    NonIntegralDual(usize),

    #[error("supplied dual polytope does not match the dual of its reconstruction")]
    DualMismatch,

    #[error("edge endpoints coincide")]
    DegenerateEdge,

    #[error("coefficient of t^{degree} is negative ({value})")]
    NegativeCoefficient { degree: usize, value: i64 },

    #[error("invalid Betti numbers: {0}")]
    InvalidBetti(String),

    #[error("invalid Hodge diamond: {0}")]
    InvalidDiamond(String),

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("odd cohomology is nonzero: h^{{{p},{q}}} = {value}")]
    HypothesisViolated { p: usize, q: usize, value: u32 },

    #[error("sequence is not palindromic")]
    NotPalindromic,

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidDimension(_) => "InvalidDimension",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::Empty => "Empty",
            Error::DuplicateVertex(_) => "DuplicateVertex",
            Error::NonPrimitiveVertex { .. } => "NonPrimitiveVertex",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::OriginNotInterior { .. } => "OriginNotInterior",
            Error::RedundantVertex(_) => "RedundantVertex",
            Error::NotReflexive => "NotReflexive",
            Error::NotSmooth => "NotSmooth",
            Error::NonIntegralDual(_) => "NonIntegralDual",
            Error::DualMismatch => "DualMismatch",
            Error::DegenerateEdge => "DegenerateEdge",
            Error::NegativeCoefficient { .. } => "NegativeCoefficient",
            Error::InvalidBetti(_) => "InvalidBetti",
            Error::InvalidDiamond(_) => "InvalidDiamond",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::HypothesisViolated { .. } => "HypothesisViolated",
            Error::NotPalindromic => "NotPalindromic",
            Error::Overflow => "Overflow",
            Error::Parse { .. } => "ParseError",
            Error::Io(_) => "IoError",
        }
    }

    /// Parse and I/O failures, as opposed to inputs that parsed but are invalid.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Io(_))
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
