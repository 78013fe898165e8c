use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range 2..=251")]
    InvalidPrime(u64),

    #[error("dimension {0} outside the supported range 1..=8")]
    InvalidDimension(usize),

    #[error("ambient Z_{p}^{d} is too large ({reason})")]
    AmbientTooLarge { p: u32, d: usize, reason: &'static str },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient mismatch: Z_{p1}^{d1} vs Z_{p2}^{d2}")]
    AmbientMismatch { p1: u32, d1: usize, p2: u32, d2: usize },

    #[error("coordinate {value} is not a residue mod {p}")]
    ResidueOutOfRange { value: u64, p: u32 },

    #[error("operation requires dimension 2, got {0}")]
    UnsupportedDimension(usize),

    #[error("the empty set is rejected by every decision procedure")]
    EmptySet,

    #[error("the zero frequency has no hyperplane profile")]
    ZeroFrequency,

    #[error("function is not defined at {missing} (domain must be all of Z_p)")]
    IncompleteFunction { missing: u32 },

    #[error("rank range {start}..{end} exceeds family size {total}")]
    RankOutOfRange { start: u64, end: u64, total: u64 },

    #[error("matrix is singular mod {0}")]
    SingularMatrix(u32),

    #[error("not a spectral pair")]
    InvalidSpectralPair,

    #[error("not a tiling pair")]
    InvalidTilingPair,

    #[error("the origin is not an element of the set")]
    OriginNotInSet,

    #[error("expected |E| = {expected}, found {found}")]
    WrongSize { expected: u64, found: u64 },

    #[error("frequency is not a zero of the transform")]
    NotAZero,

    #[error("invalid graph presentation: {0}")]
    InvalidPresentation(&'static str),

    #[error("table has length {found}, expected {expected}")]
    TableLength { expected: usize, found: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid campaign configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
