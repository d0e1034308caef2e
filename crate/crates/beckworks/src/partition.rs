//! Integer partitions in run-length form.
//!
//! A partition is stored as runs `(value, multiplicity)` with values strictly
//! increasing and every multiplicity positive, so each multiset of parts has
//! exactly one representation and equality is structural. The empty partition
//! is the partition of 0.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// An integer partition, canonically encoded as ascending runs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    runs: Vec<(u64, u64)>,
}

/// The cheap summary statistics used throughout the identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartitionStats {
    /// Sum of all parts.
    pub weight: u64,
    /// Number of parts counted with multiplicity.
    pub length: u64,
    /// Number of distinct part values.
    pub distinct_count: u64,
    /// Smallest part, `None` for the empty partition.
    pub smallest: Option<u64>,
    /// Largest part, `None` for the empty partition.
    pub largest: Option<u64>,
    /// Multiplicity of the largest part, 0 for the empty partition.
    pub largest_multiplicity: u64,
}

impl Partition {
    /// The empty partition, the unique partition of 0.
    pub fn empty() -> Self {
        Partition { runs: Vec::new() }
    }

    /// Builds a partition from parts in any order.
    ///
    /// Rejects zero parts and weights that overflow u64.
    pub fn make(parts: &[u64]) -> Result<Self> {
        let mut sorted = parts.to_vec();
        sorted.sort_unstable();
        let mut runs: Vec<(u64, u64)> = Vec::new();
        for &p in &sorted {
            if p == 0 {
                return Err(Error::ZeroPart);
            }
            match runs.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => runs.push((p, 1)),
            }
        }
        Self::from_runs(runs)
    }

    /// Builds a partition from runs `(value, multiplicity)`.
    ///
    /// Values must be strictly increasing and positive, multiplicities
    /// positive, and the total weight must fit in u64.
    pub fn from_runs(runs: Vec<(u64, u64)>) -> Result<Self> {
        let mut prev = 0u64;
        let mut weight = 0u64;
        for &(v, m) in &runs {
            if v == 0 || m == 0 {
                return Err(Error::ZeroPart);
            }
            if v <= prev {
                return Err(Error::BadParams(format!(
                    "run values must strictly increase, got {v} after {prev}"
                )));
            }
            prev = v;
            let run_weight = v.checked_mul(m).ok_or(Error::WeightOverflow)?;
            weight = weight
                .checked_add(run_weight)
                .ok_or(Error::WeightOverflow)?;
        }
        Ok(Partition { runs })
    }

    /// Builds from runs the caller guarantees are canonical and within
    /// weight range. Enumeration and the bijections use this on run lists
    /// they construct in order.
    pub(crate) fn from_runs_unchecked(runs: Vec<(u64, u64)>) -> Self {
        debug_assert!(
            runs.windows(2).all(|w| w[0].0 < w[1].0) && runs.iter().all(|&(v, m)| v > 0 && m > 0),
            "non-canonical runs passed to from_runs_unchecked"
        );
        Partition { runs }
    }

    /// Builds from a value-to-multiplicity map, skipping zero multiplicities.
    /// The map form is convenient for the part surgeries in the bijections.
    pub(crate) fn from_map(map: BTreeMap<u64, u64>) -> Self {
        let runs: Vec<(u64, u64)> = map.into_iter().filter(|&(_, m)| m > 0).collect();
        Self::from_runs_unchecked(runs)
    }

    /// The multiset of parts as a value-to-multiplicity map.
    pub(crate) fn to_map(&self) -> BTreeMap<u64, u64> {
        self.runs.iter().copied().collect()
    }

    /// The ascending runs `(value, multiplicity)`.
    pub fn runs(&self) -> &[(u64, u64)] {
        &self.runs
    }

    /// Parts in ascending order, repeated per multiplicity. The iterator is
    /// double-ended, so `.rev()` walks the parts descending.
    pub fn parts(&self) -> impl DoubleEndedIterator<Item = u64> + '_ {
        self.runs
            .iter()
            .flat_map(|&(v, m)| std::iter::repeat_n(v, m as usize))
    }

    /// True for the partition of 0.
    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    /// Sum of all parts.
    pub fn weight(&self) -> u64 {
        // Construction already proved the sum fits in u64.
        self.runs.iter().map(|&(v, m)| v * m).sum()
    }

    /// Number of parts counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.runs.iter().map(|&(_, m)| m).sum()
    }

    /// Number of distinct part values.
    pub fn distinct_count(&self) -> u64 {
        self.runs.len() as u64
    }

    /// Smallest part, `None` for the empty partition.
    pub fn smallest(&self) -> Option<u64> {
        self.runs.first().map(|&(v, _)| v)
    }

    /// Largest part, `None` for the empty partition.
    pub fn largest(&self) -> Option<u64> {
        self.runs.last().map(|&(v, _)| v)
    }

    /// Multiplicity of the largest part, 0 for the empty partition.
    pub fn largest_multiplicity(&self) -> u64 {
        self.runs.last().map_or(0, |&(_, m)| m)
    }

    /// Multiplicity of `value`, 0 when `value` is not a part.
    pub fn multiplicity(&self, value: u64) -> u64 {
        self.runs
            .binary_search_by_key(&value, |&(v, _)| v)
            .map_or(0, |idx| self.runs[idx].1)
    }

    /// All summary statistics in one pass.
    pub fn stats(&self) -> PartitionStats {
        PartitionStats {
            weight: self.weight(),
            length: self.length(),
            distinct_count: self.distinct_count(),
            smallest: self.smallest(),
            largest: self.largest(),
            largest_multiplicity: self.largest_multiplicity(),
        }
    }

    /// The conjugate partition (reflect the Young diagram).
    ///
    /// For ascending runs `(v_1, m_1), ..., (v_r, m_r)` the conjugate has a
    /// part equal to the suffix multiplicity sum `m_i + ... + m_r` with
    /// multiplicity `v_i - v_{i-1}` (taking `v_0 = 0`), which keeps the work
    /// linear in the number of runs. Conjugation is an involution.
    pub fn conjugate(&self) -> Partition {
        let mut out: Vec<(u64, u64)> = Vec::with_capacity(self.runs.len());
        let mut suffix = 0u64;
        // Walk runs from the largest value down so suffix sums accumulate and
        // the output comes out ascending.
        for i in (0..self.runs.len()).rev() {
            let (v, m) = self.runs[i];
            suffix += m;
            let prev_v = if i == 0 { 0 } else { self.runs[i - 1].0 };
            out.push((suffix, v - prev_v));
        }
        Partition::from_runs_unchecked(out)
    }

    /// Parses the canonical text form.
    ///
    /// The grammar is `'(' [ item (',' item)* ] ')'` with `item` either
    /// `INT` or `INT '^' INT`, integers in plain decimal with value at least
    /// 1, values strictly ascending, and no whitespace anywhere. `parse`
    /// inverts `to_string` on every canonical string.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .strip_prefix('(')
            .and_then(|rest| rest.strip_suffix(')'))
            .ok_or_else(|| Error::Parse("expected surrounding parentheses".into()))?;
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut runs: Vec<(u64, u64)> = Vec::new();
        for item in inner.split(',') {
            let (value_text, mult_text) = match item.split_once('^') {
                Some((v, m)) => (v, Some(m)),
                None => (item, None),
            };
            let value = parse_int(value_text)?;
            let mult = match mult_text {
                Some(m) => parse_int(m)?,
                None => 1,
            };
            if let Some(&(prev, _)) = runs.last() {
                if value <= prev {
                    return Err(Error::Parse(format!(
                        "values must strictly ascend, got {value} after {prev}"
                    )));
                }
            }
            runs.push((value, mult));
        }
        Self::from_runs(runs)
    }
}

/// Parses one grammar integer: nonempty decimal digits, no sign, no leading
/// zero, value at least 1.
fn parse_int(text: &str) -> Result<u64> {
    if text.is_empty() {
        return Err(Error::Parse("empty integer".into()));
    }
    if !text.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("invalid integer {text:?}")));
    }
    if text.starts_with('0') {
        return Err(Error::Parse(format!(
            "integer {text:?} has a leading zero or is zero"
        )));
    }
    text.parse::<u64>()
        .map_err(|_| Error::Parse(format!("integer {text:?} out of range")))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &(v, m)) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if m == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{m}")?;
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Partitions compare by their ascending part sequences, ordered
/// lexicographically. This ranks same-weight partitions the way the
/// enumeration emits them; deriving on runs would misorder pairs such as
/// (1^2) versus (1,2).
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts().cmp(other.parts())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
