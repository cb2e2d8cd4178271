use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank n={0}, need n >= 3")]
    Rank(usize),

    #[error("invalid box state: {0}")]
    InvalidBox(String),

    #[error("invalid x-coordinates: {0}")]
    InvalidX(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("energy kind {0} is not supported here: {1}")]
    UnsupportedKind(String, String),

    #[error("rank mismatch: expected n={expected}, got n={got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("carrier failed to stabilize below capacity {cap}")]
    CarrierUnstable { cap: i64 },

    #[error("color {color} at box {pos} has no admissible box to move into; pad the state with vacuum boxes on the right")]
    KaBlocked { color: i32, pos: usize },

    #[error("delta table is inconsistent: {0}")]
    InconsistentDeltas(String),

    #[error("invalid rigged configuration: {0}")]
    InvalidRigged(String),

    #[error("enumeration guard exceeded: {what} would need {size} > {limit}")]
    EnumerationGuard {
        what: &'static str,
        size: u64,
        limit: u64,
    },
}
