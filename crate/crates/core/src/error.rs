use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// `n = dim X <= 1`: a transposition acts as a quasi-reflection.
    #[error("unsupported dimension n={n}: transpositions act as quasi-reflections unless n >= 2")]
    UnsupportedDimension { n: u64 },

    #[error("group contains quasi-reflections: {}", elements.join("; "))]
    QuasiReflections { elements: Vec<String> },

    #[error("group closure exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("matrix size {size} exceeds the cap of {cap}")]
    MatrixTooLarge { size: usize, cap: usize },

    #[error("insufficient data: {found} usable rows, at least {needed} required")]
    InsufficientData { found: usize, needed: usize },

    #[error("arithmetic bug: {0}")]
    Arithmetic(String),

    #[error("malformed representation file: {0}")]
    Parse(#[from] serde_json::Error),
}
