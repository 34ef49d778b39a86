use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must satisfy 1 <= k <= {max}, got {k}")]
    BadRank { k: usize, max: usize },
    #[error("window has {got} entries, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("window sums to {got}, expected {expected}")]
    BadSum { expected: i64, got: i64 },
    #[error("window entries at positions {0} and {1} are congruent mod k+1")]
    RepeatedResidueClass(usize, usize),
    #[error("letter {letter} is not a residue mod {n}")]
    BadResidue { letter: usize, n: usize },
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("residue set must be a proper subset of Z/(k+1)")]
    ImproperSet,
    #[error("adjusting the interval would cover every residue")]
    WouldBeImproper,
    #[error("adjusting the interval would leave it empty")]
    WouldBeEmpty,
    #[error("residue set is not a single cyclic interval")]
    NotConnected,
    #[error("|A| + |B| = {0} is below k+1")]
    SizeTooSmall(usize),
    #[error("the identity has no nonempty right factor")]
    IdentityInput,
    #[error("decomposition is not maximal at row {0}")]
    NotMaximal(usize),
    #[error("residue {0} is a right descent; the product vanishes")]
    DescentViolation(usize),
    #[error("word is not reduced at position {0}")]
    NotReduced(usize),
    #[error("recording tableau does not arise from a reduced word")]
    NotStandard,
    #[error("length {len} exceeds the enumeration bound {bound}")]
    BoundExceeded { len: usize, bound: usize },
    #[error("partition has a hook of length k+1")]
    NotACore,
    #[error("partitions have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("inner shape is not contained in the outer shape")]
    NotContained,
    #[error("index {i} exceeds k = {k}")]
    IndexTooLarge { i: usize, k: usize },
    #[error("more than one {0}-dominant summand")]
    NotUnique(usize),
    #[error("no {0}-dominant summand")]
    NotFound(usize),
    #[error("invalid k-code: {0}")]
    InvalidKCode(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
