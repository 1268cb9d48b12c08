use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown Coxeter family {0:?}")]
    UnknownFamily(String),
    #[error("{family}{rank}: rank below minimum {min}")]
    RankTooSmall { family: String, rank: u32, min: u32 },
    #[error("invalid symbol {0:?}")]
    InvalidSymbol(Vec<u32>),
    #[error("invalid beta-set {0:?}")]
    InvalidBetaSet(Vec<u32>),
    #[error("length {requested} not admissible for class of length {current} (step {step})")]
    BadLength {
        requested: usize,
        current: usize,
        step: usize,
    },
    #[error("rank mismatch: {what} has rank {found}, expected {expected}")]
    RankMismatch {
        what: String,
        found: u32,
        expected: u32,
    },
    #[error("sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("staircase parameter t={t} is below the largest entry {max}")]
    StaircaseTooSmall { t: u32, max: u32 },
    #[error("partitions of sizes {0} and {1} do not match the requested rank {2}")]
    SizeMismatch(u32, u32, u32),
    #[error("{0}")]
    WrongFamily(String),
    #[error("unknown representation {0:?}")]
    UnknownRep(String),
    #[error("no W' label realizes a-difference {a_diff}: {detail}")]
    NoLabel { a_diff: u32, detail: String },
    #[error("cycle detected in edge orientation at {0}")]
    Cycle(String),
    #[error("table data: {0}")]
    Table(String),
    #[error("shifting {0:?} by {1} produces a negative entry")]
    NegativeShift(Vec<u32>, usize),
    #[error("shift {k} out of range for length {len}")]
    ShiftRange { k: usize, len: usize },
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
