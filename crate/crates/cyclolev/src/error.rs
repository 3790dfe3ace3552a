use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("cannot parse Lie type from {0:?}")]
    ParseType(String),
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("partition totals differ: {0} vs {1}")]
    UnequalTotals(usize, usize),
    #[error("dominance maximum is not unique among {0} candidates")]
    NonUniqueMaximum(usize),
    #[error("{0} is not a valid orbit datum for this type: {1}")]
    InvalidOrbit(String, String),
    #[error("unknown orbit label {label:?} for type {lie_type}")]
    UnknownLabel { lie_type: String, label: String },
    #[error("orbit types differ: {0} vs {1}")]
    TypeMismatch(String, String),
    #[error("operation unsupported for type {0}: {1}")]
    Unsupported(String, &'static str),
    #[error("rank bound exceeded: {0}")]
    RankBound(String),
    #[error("Levi shape does not fit ambient: {0}")]
    LeviShape(String),
    #[error("{0} is outside the image of the cyclotomic level map")]
    NotInImage(i64),
    #[error("level {0} out of range")]
    LevelOutOfRange(i64),
    #[error("polynomial has a non-cyclotomic factor (residue degree {0})")]
    NonCyclotomicFactor(usize),
    #[error("eigenvalue grouping failed: {0} eigenvalues of order {1}")]
    EigenvalueGrouping(usize, usize),
    #[error("simple reflection index {0} out of range 1..={1}")]
    BadReflectionIndex(usize, usize),
    #[error("eigenspace rank unstable at tolerance near singular value {0:e}")]
    RankUnstable(f64),
    #[error("reflection iteration cap exceeded (Cartan data bug?)")]
    IterationCap,
    #[error("invalid Weyl class datum: {0}")]
    InvalidClass(String),
}

pub type Result<T> = std::result::Result<T, Error>;
