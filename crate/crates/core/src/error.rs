use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant degree exceeds bound {0}")]
    DegreeBoundExceeded(usize),
    #[error("interpolant has non-integral coefficients")]
    NonIntegralInterpolant,
    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),
    #[error("invalid partition ({f}, {m}) for n = {n}")]
    InvalidPartition { n: usize, f: usize, m: usize },
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("partitions ({0}) and ({1}) are not strictly ordered")]
    NotStrictlyDominated(String, String),
    #[error("Murphy basis collision at {0}")]
    MurphyCollision(String),
    #[error("Murphy element {0} has loops")]
    NonzeroLoops(String),
    #[error("spectrum degenerate at k = {k}: {value}")]
    SpectrumDegenerate { k: usize, value: String },
    #[error("n = {0} exceeds the supported maximum")]
    TooLarge(usize),
    #[error("{0}")]
    Usage(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
