use thiserror::Error;

use crate::vector::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("player count must be at least 1")]
    NoPlayers,

    #[error("{n} players exceed the supported maximum of {max}")]
    TooManyPlayers { n: usize, max: usize },

    #[error("the family of minimal winning coalitions is empty")]
    EmptyFamily,

    #[error("the empty coalition cannot be minimal winning")]
    EmptyCoalition,

    /// Players are reported 1-indexed.
    #[error("player {player} is outside 1..={n}")]
    PlayerOutOfRange { player: usize, n: usize },

    #[error("coalitions {subset} and {superset} are nested, input is not an antichain")]
    NotAntichain { subset: String, superset: String },

    #[error("quota must be positive")]
    ZeroQuota,

    #[error("quota {quota} exceeds the total weight {total}")]
    QuotaExceedsWeight { quota: u64, total: u64 },

    #[error("a player cannot be compared with itself (player {0})")]
    SamePlayer(usize),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("vector game violates {}", display_violations(.0))]
    InvalidVectorGame(Vec<Violation>),

    #[error("decomposition sums to {actual}, expected {expected}")]
    DecompositionSum { actual: u64, expected: i64 },

    #[error("pair has no x/y/z decomposition: {0}")]
    NotDecomposable(String),

    #[error("n = {n} is outside the supported range {min}..={max}")]
    UnsupportedN { n: usize, min: usize, max: usize },

    #[error("n = {0} must be even")]
    OddN(usize),

    #[error("{numerator} is not divisible by {divisor}")]
    Indivisible { numerator: String, divisor: u32 },

    #[error("expression evaluated to negative value {0}")]
    Negative(String),

    #[error("formula mismatch for {what}: {left} != {right}")]
    FormulaMismatch {
        what: &'static str,
        left: String,
        right: String,
    },

    #[error("fixed-point count {fixed} is inconsistent with total {total}")]
    BurnsideParity { total: String, fixed: String },
}

fn display_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
