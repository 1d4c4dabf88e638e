use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected {expected} variables, found {found}")]
    VariableCount { expected: usize, found: usize },

    #[error("ideal is not Artinian (no pure power of {missing})")]
    NotArtinian { missing: String },

    #[error("the unit ideal has an empty quotient")]
    UnitIdeal,

    #[error("{0} is not a minimal generator of the ideal")]
    NotMinimalGenerator(String),

    #[error("gluing condition violated: {0}")]
    GluingCondition(String),

    #[error("centre-to-centre test does not apply: {0}")]
    CentreNotApplicable(String),

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("generating set is not a Groebner basis")]
    NotGroebner,

    #[error("quotient dimension {dimension} exceeds the cap {cap}")]
    DimensionCap { dimension: usize, cap: usize },

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}
