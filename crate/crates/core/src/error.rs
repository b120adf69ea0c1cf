use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("mismatched indeterminates: {left} vs {right}")]
    MismatchedVars { left: String, right: String },
    #[error("singular expansion: constant coefficient is not invertible")]
    SingularExpansion,
    #[error("unsupported instance: {0}")]
    Unsupported(String),
    #[error("insufficient terms: need at least {required}, got {available}")]
    InsufficientTerms { required: usize, available: usize },
    #[error("degenerate equation: {0}")]
    Degenerate(String),
    #[error("singular extension at n = {n}: leading coefficient vanishes and a({index}) was not supplied")]
    SingularExtension { n: usize, index: usize },
    #[error("asymptotics did not converge: {0}")]
    NonConvergent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;
