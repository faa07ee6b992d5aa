//! Crate-wide error type.

use num_bigint::BigInt;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("ambient mismatch: S_{left} vs S_{right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("support escapes [{n}]: point {point}")]
    SupportEscapes { point: usize, n: usize },

    #[error("{what} index {index} out of range (bound {bound})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("degree bound violated: {0}")]
    DegreeBound(String),

    #[error("element is not constant on m-classes: {0}")]
    NotInCentraliser(String),

    #[error("class sum would have {size} terms, above the cap {cap} (set FHM_TERM_CAP to raise)")]
    TermCap { size: BigInt, cap: u64 },

    #[error("orbit enumeration guard: n = {n} exceeds the brute-force limit {limit}")]
    OrbitGuard { n: usize, limit: usize },

    #[error("json error: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
