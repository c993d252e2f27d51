use thiserror::Error;

/// Failures raised by the ambient categories.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KosmosError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid labels: {0}")]
    InvalidLabels(String),
    #[error("table entry {index} is {value}, codomain has size {size}")]
    IndexOutOfRange { index: usize, value: usize, size: usize },
    #[error("section invalid: f∘s or g∘s differs from the identity at element {index}")]
    SectionInvalid { index: usize },
    #[error("map does not coequalize the pair at element {index}")]
    NotCoequalizing { index: usize },
    #[error("retraction invalid: r∘f or r∘g differs from the identity at basis vector {index}")]
    RetractionInvalid { index: usize },
    #[error("map does not equalize the pair at basis vector {index}")]
    NotEqualizing { index: usize },
    #[error("not bijective: {0}")]
    NotBijective(String),
    #[error("not invertible: rank {rank} of a {rows}x{cols} matrix")]
    NotInvertible { rank: usize, rows: usize, cols: usize },
    #[error("no factorization: {0}")]
    NoFactorization(String),
}

pub type Result<T> = std::result::Result<T, KosmosError>;
