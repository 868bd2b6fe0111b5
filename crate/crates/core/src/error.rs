use thiserror::Error;

/// Errors surfaced by the library. Variant names are part of the CLI contract.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("OddBondWeightMismatch: generators {0} and {1} are joined by an odd bond but have different weights")]
    OddBondWeightMismatch(usize, usize),
    #[error("NonPositiveWeight: generator {0} has weight {1}")]
    NonPositiveWeight(usize, i64),
    #[error("InvalidMatrix: {0}")]
    InvalidMatrix(String),
    #[error("InfiniteParabolic: the parabolic subgroup {0:?} is infinite")]
    InfiniteParabolic(Vec<usize>),
    #[error("OrbitNotFinite: orbit {0:?} generates an infinite parabolic subgroup")]
    OrbitNotFinite(Vec<usize>),
    #[error("NotPeriodic: {0}")]
    NotPeriodic(String),
    #[error("NonzeroChi: chi = {0}")]
    NonzeroChi(i64),
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(String),
    #[error("RegionTooSmall: margin {margin} leaves no trusted elements in a ball of radius {radius}")]
    RegionTooSmall { radius: usize, margin: usize },
    #[error("UncertifiedRegion: {0}")]
    UncertifiedRegion(String),
    #[error("UnsupportedWeights: {0}")]
    UnsupportedWeights(String),
    #[error("OutOfCoverage: {0}")]
    OutOfCoverage(String),
    #[error("RankMismatch: {0}")]
    RankMismatch(String),
    #[error("TTooSmall: t = {0} is too small for this multiset")]
    TTooSmall(i64),
    #[error("ParityMismatch: |Z| = {0} and r = {1} have different parity")]
    ParityMismatch(usize, usize),
    #[error("Parse: {0}")]
    Parse(String),
    #[error("EngineMismatch: {0}")]
    EngineMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
