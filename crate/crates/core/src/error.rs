use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("simple transposition s_{letter} is out of range for S_{n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("word {word} is not reduced")]
    NotReduced { word: String },

    #[error("word {word} is a reduced word for {product}, not for {expected}")]
    WordMismatch {
        word: String,
        product: String,
        expected: String,
    },

    #[error("invalid Hessenberg function: {0}")]
    InvalidHessenberg(String),

    #[error("invalid Young diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error(
        "{perm} is not a fixed point: {left} sits directly left of {right} but h({right}) = {bound} < {left}"
    )]
    NotFixedPoint {
        perm: String,
        left: usize,
        right: usize,
        bound: usize,
    },

    #[error("top parts entry x_{ell} = {value} violates 0 <= x_l <= l - 1")]
    TopPartsOutOfRange { ell: usize, value: usize },

    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("polynomial is not homogeneous")]
    NonHomogeneous,

    #[error("the 334-type Hessenberg function needs n >= 4 (got n = {n}); for n = 3 it is the full flag variety")]
    TrivialHessenberg { n: usize },

    #[error("fixed point {0} matches none of the 334-type classes")]
    Unclassifiable(String),

    #[error("no rolldown recorded for fixed point {0}")]
    MissingRolldown(String),

    #[error("parse error: {0}")]
    Parse(String),
}
