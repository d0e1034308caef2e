use std::fmt;

/// Errors reported by partition construction, the bijections, and the
/// verification harness. Every variant describes a violated precondition in
/// the vocabulary of the operation that rejected it; `Internal` is reserved
/// for broken invariants that the constructions themselves guarantee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A part or multiplicity of zero where positive integers are required.
    ZeroPart,
    /// The partition weight does not fit in 64 bits.
    WeightOverflow,
    /// Partition text rejected by the grammar, with the reason.
    Parse(String),
    /// A base below 2 where k >= 2 is required.
    BaseTooSmall { k: u64 },
    /// Zero input to an operation defined on positive integers.
    ZeroInput,
    /// Family, statistic, or identity parameters outside their valid range.
    BadParams(String),
    /// A part repeats k or more times, so the partition is not k-distinct.
    NotKDistinct {
        k: u64,
        value: u64,
        multiplicity: u64,
    },
    /// A part is divisible by k, so the partition is not k-regular.
    NotKRegular { k: u64, value: u64 },
    /// The named value does not occur as a part.
    MissingPart { value: u64 },
    /// A part divisible by k where a k-regular part is required.
    PartDivisible { k: u64, value: u64 },
    /// The partition does not have exactly one distinct part divisible by k.
    NotOneDivisible { k: u64, count: u64 },
    /// A class cofactor that is itself divisible by k.
    CofactorDivisible { k: u64, d: u64 },
    /// No part of the partition has k-free factor d.
    EmptyClass { k: u64, d: u64 },
    /// The partition lacks the t-family shape: exactly one part with
    /// multiplicity in k+1..=2k-1 and every other multiplicity below k.
    NotTFamily { k: u64 },
    /// Part values skip from `value` to `next`, so the partition is not
    /// gap-free.
    NotGapFree { value: u64, next: u64 },
    /// The empty partition where a nonempty one is required.
    EmptyPartition,
    /// Raise distance r outside 1..=block count.
    RaiseOutOfRange { r: u64, blocks: u64 },
    /// Lowering by r would push the largest part to zero or below.
    LowerUnderflow { largest: u64, r: u64 },
    /// A 1-based selection index i outside 1..=max.
    IndexOutOfRange { i: u64, max: u64 },
    /// The partition belongs to neither cover family (gap-free with smallest
    /// part 1 and odd largest part, or the even-largest variant).
    OutsideCoverFamilies,
    /// A one-block gap-free partition where the even-parity trace-back is
    /// undefined.
    OneBlockInput,
    /// A construction invariant failed; indicates a bug, not bad input.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPart => write!(f, "parts and multiplicities must be positive"),
            Error::WeightOverflow => write!(f, "partition weight overflows u64"),
            Error::Parse(reason) => write!(f, "malformed partition: {reason}"),
            Error::BaseTooSmall { k } => write!(f, "base k must be at least 2, got {k}"),
            Error::ZeroInput => write!(f, "input must be a positive integer"),
            Error::BadParams(reason) => write!(f, "{reason}"),
            Error::NotKDistinct { k, value, multiplicity } => write!(
                f,
                "violates family k-distinct (k={k}): part {value} occurs {multiplicity} >= {k} times"
            ),
            Error::NotKRegular { k, value } => write!(
                f,
                "violates family k-regular (k={k}): part {value} is divisible by {k}"
            ),
            Error::MissingPart { value } => write!(f, "{value} is not a part of the partition"),
            Error::PartDivisible { k, value } => write!(
                f,
                "part {value} is divisible by k={k}, expected a k-regular part"
            ),
            Error::NotOneDivisible { k, count } => write!(
                f,
                "violates family one-divisible (k={k}): {count} distinct parts divisible by {k}, expected exactly 1"
            ),
            Error::CofactorDivisible { k, d } => {
                write!(f, "cofactor {d} must not be divisible by k={k}")
            }
            Error::EmptyClass { k, d } => {
                write!(f, "no part has k-free factor {d} (k={k})")
            }
            Error::NotTFamily { k } => write!(
                f,
                "violates family t-family (k={k}): expected exactly one part with multiplicity in {}..={} and all others below {k}",
                k + 1,
                2 * k - 1
            ),
            Error::NotGapFree { value, next } => write!(
                f,
                "violates family gapfree: parts jump from {value} to {next}"
            ),
            Error::EmptyPartition => write!(f, "the empty partition is not accepted here"),
            Error::RaiseOutOfRange { r, blocks } => write!(
                f,
                "raise distance {r} outside 1..={blocks} (block count)"
            ),
            Error::LowerUnderflow { largest, r } => write!(
                f,
                "cannot lower largest part {largest} by {r}: result would not be positive"
            ),
            Error::IndexOutOfRange { i, max } => {
                write!(f, "index {i} outside 1..={max}")
            }
            Error::OutsideCoverFamilies => write!(
                f,
                "partition is not gap-free with smallest part 1 and an odd or even largest part"
            ),
            Error::OneBlockInput => write!(
                f,
                "even-parity trace-back is undefined on one-block gap-free partitions"
            ),
            Error::Internal(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
