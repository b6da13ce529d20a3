use thiserror::Error;

use crate::gauss::JLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a Gauss code needs an even, non-zero number of symbols (got {0})")]
    OddLength(usize),
    #[error("too many crossings: {0} (at most {max})", max = crate::gauss::MAX_CROSSINGS)]
    TooManyCrossings(usize),
    #[error("label {0} occurs more than once")]
    DuplicateLabel(JLabel),
    #[error("label {0} is missing")]
    MissingLabel(JLabel),
    #[error("bad token {token:?} at position {position}")]
    BadToken { position: usize, token: String },
    #[error("value {value} at position {position} is out of range for n = {n}")]
    ValueOutOfRange {
        position: usize,
        value: usize,
        n: usize,
    },
    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("shift {m} is out of range 0..{len}")]
    ShiftOutOfRange { m: usize, len: usize },
    #[error("code {0} is not left preferred")]
    NotLeftPreferred(String),
    #[error("code {0} is not left canonical")]
    NotLeftCanonical(String),
    #[error("codes have different sizes (n = {0} and n = {1})")]
    SizeMismatch(usize, usize),
    #[error("n = {n} exceeds the size limit {max}")]
    SizeLimitExceeded { n: usize, max: usize },
    #[error("invalid arrow diagram: {0}")]
    InvalidArrowDiagram(String),
    #[error("n must be positive")]
    ZeroSize,
}
