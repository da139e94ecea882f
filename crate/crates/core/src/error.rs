use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("missing table `{0}`")]
    MissingTable(&'static str),

    #[error("missing constant `{0}`")]
    MissingConstant(&'static str),

    /// `a -> a` and `b -> b` disagree, so no top element is definable.
    #[error("a->a is not constant: elements {a} and {b} disagree")]
    NotConstant { a: usize, b: usize },

    #[error("law `{law}` fails at element {element}")]
    LawViolation { law: &'static str, element: usize },

    #[error("no term definition from {from} to {to}")]
    NotDefinable { from: String, to: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("h(1') is not an equivalence relation: {0}")]
    NotEquivalence(String),

    #[error("labels are not compatible with h(1'): {0}")]
    NotCompatible(String),

    #[error("pair ({0},{1}) lies outside the top relation")]
    OutOfTop(usize, usize),

    #[error("top relation is not transitive")]
    IntransitiveContext,

    #[error("relation is not a weakening relation")]
    NotWeakening,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("limit exceeded: {0}")]
    CapExceeded(String),

    /// A construction that the theory guarantees failed; always a bug.
    #[error("internal invariant broken: {0}")]
    InternalInvariant(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }
}
