use core::fmt;

use crate::set::ElementSet;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// No bases were supplied.
    EmptyBasisList,
    /// Two supplied bases have different sizes.
    UnequalCardinalities { first: ElementSet, other: ElementSet },
    /// `first - {removed}` cannot be completed to a basis from `second`.
    ExchangeAxiomViolated { first: ElementSet, second: ElementSet, removed: usize },
    ElementOutOfRange { element: usize, n: usize },
    UniverseTooLarge { n: usize },
    EmptyGroundSet,
    InvalidCorank { corank: usize, rank: usize },
    /// A minor operation would remove every element.
    GroundSetExhausted,
    RankZeroTruncation,
    TruncationTooDeep { depth: usize, rank: usize },
    NotAPermutation,
    NotABasis(ElementSet),
    ElementInBasis { element: usize },
    ElementNotInBasis { element: usize },
    InvalidRank { rank: usize, n: usize },
    InvalidSchubertSet,
    LoopOrColoopPresent,
    /// `theorem4_construct` parameters give `k < 1` or `l < 1`.
    InvalidParameters { k: isize, l: isize },
    InvalidKLPair { k: usize, l: usize },
    UniverseTooLargeForBruteForce { n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyBasisList => write!(f, "basis list is empty"),
            Error::UnequalCardinalities { first, other } => {
                write!(f, "bases {first} and {other} have different cardinalities")
            }
            Error::ExchangeAxiomViolated { first, second, removed } => write!(
                f,
                "basis exchange fails: removing {removed} from {first} admits no replacement from {second}"
            ),
            Error::ElementOutOfRange { element, n } => {
                write!(f, "element {element} is outside the ground set 1..{n}")
            }
            Error::UniverseTooLarge { n } => {
                write!(f, "ground set of size {n} exceeds the limit of {}", crate::MAX_ELEMENTS)
            }
            Error::EmptyGroundSet => write!(f, "ground set must be nonempty"),
            Error::InvalidCorank { corank, rank } => {
                write!(f, "corank {corank} exceeds matroid rank {rank}")
            }
            Error::GroundSetExhausted => write!(f, "operation would leave an empty ground set"),
            Error::RankZeroTruncation => write!(f, "cannot truncate a rank-0 matroid"),
            Error::TruncationTooDeep { depth, rank } => {
                write!(f, "cannot truncate {depth} times a matroid of rank {rank}")
            }
            Error::NotAPermutation => write!(f, "mapping is not a permutation of the ground set"),
            Error::NotABasis(set) => write!(f, "{set} is not a basis"),
            Error::ElementInBasis { element } => write!(f, "element {element} lies in the basis"),
            Error::ElementNotInBasis { element } => {
                write!(f, "element {element} does not lie in the basis")
            }
            Error::InvalidRank { rank, n } => write!(f, "rank {rank} is invalid for {n} elements"),
            Error::InvalidSchubertSet => {
                write!(f, "Schubert defining set must be a strictly increasing subset of 1..n")
            }
            Error::LoopOrColoopPresent => write!(f, "matroid has a loop or a coloop"),
            Error::InvalidParameters { k, l } => {
                write!(f, "derived parameters k={k}, l={l} must both be at least 1")
            }
            Error::InvalidKLPair { k, l } => write!(f, "({k},{l}) is not a pair of positive integers"),
            Error::UniverseTooLargeForBruteForce { n } => {
                write!(f, "brute-force enumeration supports n <= 6, got {n}")
            }
        }
    }
}

impl core::error::Error for Error {}
