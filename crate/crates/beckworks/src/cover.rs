//! Row-structured set decompositions.
//!
//! Each cover organizes a target family as a disjoint union of small sets
//! generated from base partitions: one [`CoverRow`] per base, one
//! [`CoverGroup`] per expansion class within the row. The verification
//! harness consumes covers by flattening [`Decomposition::generated`] and
//! comparing against a direct enumeration of the target family.

use crate::partition::Partition;

/// One expansion class of a row: the partitions generated from the base for
/// a single class key (the part being merged, or the k-free cofactor), in
/// construction order. Covers without per-row classes use `key: None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverGroup {
    pub key: Option<u64>,
    pub members: Vec<Partition>,
}

/// One base partition with its image under the row map and its expansion
/// classes in ascending key order. Groups may be empty; they are kept so a
/// row lists every class of its base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverRow {
    pub base: Partition,
    pub image: Partition,
    pub groups: Vec<CoverGroup>,
}

/// All rows of a cover at one weight, bases in ascending lexicographic
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub rows: Vec<CoverRow>,
}

impl Decomposition {
    /// Every generated partition, row by row, group by group.
    pub fn generated(&self) -> impl Iterator<Item = &Partition> {
        self.rows
            .iter()
            .flat_map(|row| row.groups.iter())
            .flat_map(|group| group.members.iter())
    }

    /// Number of generated partitions across all rows.
    pub fn generated_count(&self) -> u64 {
        self.generated().count() as u64
    }
}
