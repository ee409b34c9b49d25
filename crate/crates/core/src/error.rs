use thiserror::Error;

/// What went wrong while reading decimal text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Empty,
    UnexpectedChar(char),
    MissingDigits,
    SecondDecimalPoint,
    ExponentTooLarge,
}

/// A decimal text that does not match the accepted grammar. `position` is the
/// zero-based character offset of the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}", describe(.kind, *.position))]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

fn describe(kind: &ParseErrorKind, position: usize) -> String {
    match kind {
        ParseErrorKind::Empty => "empty input".to_string(),
        ParseErrorKind::UnexpectedChar(c) => {
            format!("unexpected character {c:?} at position {position}")
        }
        ParseErrorKind::MissingDigits => format!("expected a digit at position {position}"),
        ParseErrorKind::SecondDecimalPoint => {
            format!("second decimal point at position {position}")
        }
        ParseErrorKind::ExponentTooLarge => {
            format!("exponent starting at position {position} is out of range")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid tuple: {0}")]
    InvalidTuple(&'static str),

    #[error("tuple {tuple} is not strict-canonical (n3 has a trailing zero)")]
    NotStrictCanonical { tuple: String },

    #[error("tuple {tuple} has complexity {actual}, not {expected}")]
    LevelMismatch {
        tuple: String,
        expected: String,
        actual: String,
    },

    #[error("position {position} is outside level {level} (size {size})")]
    PositionOutOfRange {
        level: String,
        position: String,
        size: String,
    },

    #[error("index must be at least 1, got {0}")]
    IndexOutOfDomain(String),

    #[error("range {from}..={to} is empty")]
    EmptyRange { from: String, to: String },

    #[error("rendering needs {needed} characters, budget is {budget}")]
    RenderBudgetExceeded { needed: String, budget: usize },

    #[error("value {0} does not fit the chosen integer type")]
    Overflow(String),

    #[error("tuple complexity {complexity} is beyond the oracle's max level {max_level}")]
    BeyondOracle { complexity: String, max_level: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
