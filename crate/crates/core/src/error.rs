use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grade {0} is outside [0, 1]")]
    GradeOutOfRange(f64),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("universes do not match")]
    UniverseMismatch,

    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("dimension mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    DimensionMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("relation is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("{0} must not be empty")]
    Empty(&'static str),

    #[error("index {index} out of bounds for length {len}")]
    IndexOutOfBounds { index: usize, len: usize },

    #[error("unknown fuzzy soft set `{0}`")]
    UnknownSet(String),

    #[error("set `{set}` has no parameter `{parameter}`")]
    UnknownParameter { set: String, parameter: String },

    #[error("breakpoints must satisfy a <= b <= c <= d, got ({a}, {b}, {c}, {d})")]
    InvalidBreakpoints { a: f64, b: f64, c: f64, d: f64 },

    #[error("sample points must be strictly increasing: {0} repeats")]
    DuplicatePoint(f64),

    #[error("sample points must be strictly increasing: {next} follows {previous}")]
    UnorderedPoints { previous: f64, next: f64 },

    #[error("block family contains an empty block")]
    EmptyBlock,

    #[error("block family is not a partition of its ground set")]
    NotAPartition,

    #[error("class of `{element}` has zero cardinality; its uncertainty is unbounded")]
    DegenerateClass { element: String },

    #[error("probability {0} is outside [0, 1]")]
    ProbabilityOutOfRange(f64),

    #[error("extension maps a tuple to `{0}`, which is not in the target universe")]
    OutsideCodomain(String),

    #[error("truth grid must be strictly increasing and contain 0 and 1")]
    InvalidGrid,

    #[error("variable `{0}` has no assigned truth value")]
    UnboundVariable(String),

    #[error("{variables} variables over a grid of {grid} values exceeds the enumeration bound")]
    EnumerationTooLarge { variables: usize, grid: usize },

    #[error("the NOT operation takes exactly one fuzzy soft set, got {0}")]
    NotArity(usize),

    #[error("cannot parse expression: {0}")]
    Expression(String),
}
