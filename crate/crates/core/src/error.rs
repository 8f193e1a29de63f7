use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A numeric argument fell outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid endpoint spec for '{word}': {reason}")]
    Spec { word: String, reason: String },

    /// A word record violated an invariant while building or loading a codebook.
    #[error("invalid word '{word}' ({field}): {reason}")]
    InvalidWord {
        word: String,
        field: String,
        reason: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown word '{0}'")]
    UnknownWord(String),

    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("degenerate word '{0}': membership is zero everywhere on the grid")]
    DegenerateWord(String),

    #[error("no rule fired: total firing level is zero")]
    NoRuleFired,

    #[error("value {value} is outside the representable range [{lo}, {hi})")]
    OutOfRange { value: f64, lo: f64, hi: f64 },

    #[error("2-tuple {tuple} protrudes past the scale by {amount:.4}")]
    ScaleOverflow { tuple: String, amount: f64 },

    #[error("feasible grid is empty")]
    EmptyFeasibleSet,

    #[error("sampling for '{word}' gave up after {attempts} attempts to draw L <= R")]
    SamplingExhausted { word: String, attempts: usize },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<toml::de::Error> for Error {
    fn from(e: toml::de::Error) -> Self {
        Error::Parse(e.message().to_string())
    }
}
