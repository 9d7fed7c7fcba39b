use thiserror::Error;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("{what}: order {order} exceeds cap {cap}")]
    CapExceeded {
        what: String,
        order: u128,
        cap: u128,
    },
    #[error("size estimate overflow in `{0}`")]
    SizeOverflow(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("subset is not a two-sided ideal: {0}")]
    NotAnIdeal(String),
    #[error("element `{0}` is not central")]
    NonCentral(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("axiom violated: {0}")]
    Axiom(String),
    #[error("syntax error at {line}:{col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("config error: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, RingError>;
