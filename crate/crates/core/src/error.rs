use alloc::string::String;
use core::fmt;

use crate::diagram::Point;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong when building or combining diagrams and words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The rank is zero or larger than [`crate::MAX_RANK`].
    InvalidRank(usize),
    PointOutOfRange {
        point: Point,
        n: usize,
    },
    RepeatedPoint(Point),
    BlockCount {
        expected: usize,
        found: usize,
    },
    /// A block joins a point to itself.
    DegenerateBlock(Point),
    RankMismatch {
        left: usize,
        right: usize,
    },
    NotABijection,
    /// `{i, j}` is not a valid 2-subset of `{1..n}`.
    InvalidPair {
        i: usize,
        j: usize,
        n: usize,
    },
    EmptyWord,
    NotConnected {
        position: usize,
    },
    OverlappingPairs,
    /// A relation pattern does not occur at the requested site.
    PatternMismatch {
        position: usize,
    },
    IndicesNotDistinct,
    /// The enumeration or search would exceed the configured rank limit.
    LimitExceeded {
        n: usize,
        limit: usize,
    },
    /// A precondition on the corank or Green class of the input failed.
    Precondition(&'static str),
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidRank(n) => {
                write!(f, "invalid rank {n} (must be 1..={})", crate::MAX_RANK)
            }
            Error::PointOutOfRange { point, n } => {
                write!(f, "point {point} out of range for rank {n}")
            }
            Error::RepeatedPoint(p) => write!(f, "point {p} appears in more than one block"),
            Error::BlockCount { expected, found } => {
                write!(f, "expected {expected} blocks, found {found}")
            }
            Error::DegenerateBlock(p) => write!(f, "block joins point {p} to itself"),
            Error::RankMismatch { left, right } => write!(f, "rank mismatch: {left} vs {right}"),
            Error::NotABijection => f.write_str("not a bijection"),
            Error::InvalidPair { i, j, n } => write!(f, "invalid pair {{{i},{j}}} for rank {n}"),
            Error::EmptyWord => f.write_str("empty word"),
            Error::NotConnected { position } => {
                write!(f, "items {position} and {} do not intersect", position + 1)
            }
            Error::OverlappingPairs => f.write_str("pairs are not pairwise disjoint"),
            Error::PatternMismatch { position } => {
                write!(f, "relation pattern does not match at position {position}")
            }
            Error::IndicesNotDistinct => f.write_str("relation indices are not pairwise distinct"),
            Error::LimitExceeded { n, limit } => {
                write!(
                    f,
                    "rank {n} exceeds the limit {limit} (use a larger limit to force)"
                )
            }
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
