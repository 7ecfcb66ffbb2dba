use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("variable set mismatch: {left} vs {right}")]
    VariableSetMismatch { left: String, right: String },

    #[error("coefficient domain mismatch: {left:?} vs {right:?}")]
    DomainMismatch {
        left: crate::ring::CoeffDomain,
        right: crate::ring::CoeffDomain,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("gcd unsupported for genuinely multivariate input: {0}")]
    UnsupportedGcd(String),

    #[error("polynomial parse error at byte {offset}: {msg}")]
    PolyParse { msg: String, offset: usize },

    #[error("knot code parse error: {0}")]
    CodeParse(String),

    #[error("switch precondition violated: {0}")]
    SwitchPrecondition(String),

    #[error("invalid switch: {0}")]
    SwitchInvalid(String),

    #[error("switch file error: {0}")]
    SwitchFile(String),

    #[error("unknown {kind} name `{name}`")]
    UnknownName { kind: &'static str, name: String },

    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    #[error("invalid position: {0}")]
    InvalidPosition(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
