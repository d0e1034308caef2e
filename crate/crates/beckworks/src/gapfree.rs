//! Block operators on gap-free partitions and the conjugation-based covers
//! they generate.
//!
//! A gap-free partition occupies consecutive part values, one block per
//! value. `raise` migrates one copy of the smallest part up by the block
//! distance r, `lower` migrates one copy of the largest part down; both are
//! single-part moves once the per-block cascade is collapsed. Iterating
//! `raise` after trimming copies of the largest part gives the family maps
//! rho_i, whose images tile all gap-free partitions: bases with smallest
//! part 1 and odd largest part cover everything, bases with even largest
//! part cover everything except the one-block rectangles. `trace_back` finds
//! the unique base and index for a given gap-free partition by lowering with
//! the appropriate parity until it lands in the base family.

use crate::cover::{CoverGroup, CoverRow, Decomposition};
use crate::error::{Error, Result};
use crate::exec;
use crate::families::{self, FamilySpec};
use crate::partition::Partition;

/// Which cover to build: bases with odd largest part target every gap-free
/// partition, bases with even largest part every gap-free partition with at
/// least two blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    fn base_family(self) -> FamilySpec {
        match self {
            Parity::Odd => FamilySpec::GapFreeBottomOddTop,
            Parity::Even => FamilySpec::GapFreeBottomEvenTop,
        }
    }

    /// The largest step of this parity not exceeding `limit`.
    fn step_within(self, limit: u64) -> u64 {
        match self {
            Parity::Odd => {
                if limit % 2 == 1 {
                    limit
                } else {
                    limit.saturating_sub(1)
                }
            }
            Parity::Even => {
                if limit % 2 == 0 {
                    limit
                } else {
                    limit - 1
                }
            }
        }
    }
}

/// The block structure of a nonempty gap-free partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockProfile {
    /// The smallest part value.
    pub start: u64,
    /// Multiplicities of the consecutive values start, start+1, ...
    pub block_mults: Vec<u64>,
}

impl BlockProfile {
    /// Number of blocks, which equals the number of distinct part values.
    pub fn block_count(&self) -> u64 {
        self.block_mults.len() as u64
    }
}

/// Reads the block structure, rejecting empty or gapped partitions.
pub fn blocks(p: &Partition) -> Result<BlockProfile> {
    if p.is_empty() {
        return Err(Error::EmptyPartition);
    }
    for w in p.runs().windows(2) {
        if w[1].0 != w[0].0 + 1 {
            return Err(Error::NotGapFree {
                value: w[0].0,
                next: w[1].0,
            });
        }
    }
    Ok(BlockProfile {
        start: p.runs()[0].0,
        block_mults: p.runs().iter().map(|&(_, m)| m).collect(),
    })
}

/// Moves one copy of the smallest part up by r, for 0 <= r <= block count;
/// r = 0 is the identity.
///
/// The underlying cascade bumps one part in each of the first r blocks; the
/// intermediate donations cancel, leaving the smallest part shifted to
/// smallest + r. The result is gap-free again because the landing value
/// stays within one step of the old largest.
pub fn raise(p: &Partition, r: u64) -> Result<Partition> {
    let profile = blocks(p)?;
    if r > profile.block_count() {
        return Err(Error::RaiseOutOfRange {
            r,
            blocks: profile.block_count(),
        });
    }
    if r == 0 {
        return Ok(p.clone());
    }
    let mut parts = p.to_map();
    let smallest = profile.start;
    match parts.get_mut(&smallest) {
        Some(m) if *m > 1 => *m -= 1,
        _ => {
            parts.remove(&smallest);
        }
    }
    *parts.entry(smallest + r).or_insert(0) += 1;
    let raised = Partition::from_map(parts);
    debug_assert!(families::contains(&raised, FamilySpec::GapFree));
    debug_assert_eq!(raised.weight(), p.weight() + r);
    Ok(raised)
}

/// Moves one copy of the largest part down by r, for 0 <= r <= block count,
/// provided the landing value stays positive. Mirror image of [`raise`].
pub fn lower(p: &Partition, r: u64) -> Result<Partition> {
    let profile = blocks(p)?;
    if r > profile.block_count() {
        return Err(Error::RaiseOutOfRange {
            r,
            blocks: profile.block_count(),
        });
    }
    if r == 0 {
        return Ok(p.clone());
    }
    let largest = p.largest().expect("nonempty by blocks");
    if largest <= r {
        return Err(Error::LowerUnderflow { largest, r });
    }
    let mut parts = p.to_map();
    match parts.get_mut(&largest) {
        Some(m) if *m > 1 => *m -= 1,
        _ => {
            parts.remove(&largest);
        }
    }
    *parts.entry(largest - r).or_insert(0) += 1;
    let lowered = Partition::from_map(parts);
    debug_assert!(families::contains(&lowered, FamilySpec::GapFree));
    debug_assert_eq!(lowered.weight(), p.weight() - r);
    Ok(lowered)
}

fn check_cover_base_shape(p: &Partition) -> Result<()> {
    blocks(p)?;
    if p.smallest() != Some(1) {
        return Err(Error::OutsideCoverFamilies);
    }
    Ok(())
}

/// The i-th family map: delete i - 1 copies of the largest part, then raise
/// i - 1 times by the original number of blocks.
///
/// Defined for gap-free partitions with smallest part 1 and
/// 1 <= i <= multiplicity of the largest part; rho_1 is the identity. Every
/// intermediate keeps at least the original block count, so the fixed raise
/// distance stays legal throughout.
pub fn rho(p: &Partition, i: u64) -> Result<Partition> {
    check_cover_base_shape(p)?;
    let top_mult = p.largest_multiplicity();
    if i == 0 || i > top_mult {
        return Err(Error::IndexOutOfRange { i, max: top_mult });
    }
    let distance = p.distinct_count();
    let largest = p.largest().expect("nonempty by shape check");
    let mut parts = p.to_map();
    *parts.get_mut(&largest).expect("largest is present") -= i - 1;
    if parts[&largest] == 0 {
        parts.remove(&largest);
    }
    let mut out = Partition::from_map(parts);
    for _ in 1..i {
        out = raise(&out, distance)?;
    }
    Ok(out)
}

/// All family members of a base: rho_i for every legal i, in index order.
pub fn family_set(p: &Partition) -> Result<Vec<Partition>> {
    check_cover_base_shape(p)?;
    (1..=p.largest_multiplicity()).map(|i| rho(p, i)).collect()
}

/// A recovered position in a cover: `rho(base, index)` reproduces the
/// partition that was traced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapFreeWitness {
    /// The cover base, gap-free with smallest part 1 and largest part of
    /// the cover parity.
    pub base: Partition,
    /// The 1-based family index.
    pub index: u64,
}

/// Finds the unique base and index whose family map produces the given
/// gap-free partition.
///
/// Lowers by the largest odd (or even) step that fits the block count until
/// the partition enters the base family; the base then takes the step value
/// back as extra parts. The even parity is undefined on one-block
/// partitions, which only the odd cover reaches.
pub fn trace_back(p: &Partition, parity: Parity) -> Result<GapFreeWitness> {
    let profile = blocks(p)?;
    if parity == Parity::Even && profile.block_count() == 1 {
        return Err(Error::OneBlockInput);
    }
    let family = parity.base_family();
    if families::contains(p, family) {
        return Ok(GapFreeWitness {
            base: p.clone(),
            index: 1,
        });
    }
    let step = parity.step_within(profile.block_count());
    if step == 0 {
        return Err(Error::Internal("trace-back chose a zero step"));
    }
    let budget = p.weight();
    let mut cur = p.clone();
    let mut index = 1u64;
    while !families::contains(&cur, family) {
        if index > budget {
            return Err(Error::Internal("trace-back exceeded its step budget"));
        }
        cur = lower(&cur, step)?;
        index += 1;
    }
    let mut parts = cur.to_map();
    *parts.entry(step).or_insert(0) += index - 1;
    let base = Partition::from_map(parts);

    // Replay the family map; a mismatch would mean the cover is not
    // invertible.
    if families::contains(&base, family) {
        if rho(&base, index)? != *p {
            return Err(Error::Internal(
                "trace-back failed to replay its family map",
            ));
        }
    } else {
        return Err(Error::Internal("trace-back landed outside the base family"));
    }
    Ok(GapFreeWitness { base, index })
}

/// The full cover at weight n >= 1: one row per base of the given parity,
/// with the conjugate partition as the row image and a single keyless group
/// holding the family set.
pub fn cover(n: u64, parity: Parity) -> Result<Decomposition> {
    if n == 0 {
        return Err(Error::BadParams(
            "gap-free covers are defined for weights n >= 1".into(),
        ));
    }
    let bases = families::enumerate(n, parity.base_family())?;
    let rows = exec::map_indexed(bases.len(), |idx| -> Result<CoverRow> {
        let base = &bases[idx];
        let members = family_set(base)?;
        Ok(CoverRow {
            base: base.clone(),
            image: base.conjugate(),
            groups: vec![CoverGroup { key: None, members }],
        })
    });
    Ok(Decomposition {
        rows: rows.into_iter().collect::<Result<Vec<_>>>()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn p(text: &str) -> Partition {
        Partition::parse(text).unwrap()
    }

    fn family_strings(base: &str) -> Vec<String> {
        family_set(&p(base))
            .unwrap()
            .iter()
            .map(|q| q.to_string())
            .collect()
    }

    #[test]
    fn block_profiles_read_off_runs() {
        let profile = blocks(&p("(1^2,2^2,3^2)")).unwrap();
        assert_eq!(profile.start, 1);
        assert_eq!(profile.block_mults, [2, 2, 2]);
        assert_eq!(profile.block_count(), 3);

        let profile = blocks(&p("(3,4,5)")).unwrap();
        assert_eq!(profile.start, 3);
        assert_eq!(profile.block_mults, [1, 1, 1]);

        assert_eq!(blocks(&Partition::empty()), Err(Error::EmptyPartition));
        assert_eq!(
            blocks(&p("(1,3)")),
            Err(Error::NotGapFree { value: 1, next: 3 })
        );
    }

    #[test]
    fn raise_moves_one_smallest_copy() {
        assert_eq!(raise(&p("(1^8,2)"), 2).unwrap(), p("(1^7,2,3)"));
        assert_eq!(raise(&p("(1,2)"), 1).unwrap(), p("(2^2)"));
        assert_eq!(raise(&p("(1,2)"), 2).unwrap(), p("(2,3)"));
        assert_eq!(raise(&p("(2^2)"), 1).unwrap(), p("(2,3)"));
        assert_eq!(raise(&p("(1,2)"), 0).unwrap(), p("(1,2)"));
        assert_eq!(
            raise(&p("(1,2)"), 3),
            Err(Error::RaiseOutOfRange { r: 3, blocks: 2 })
        );
    }

    #[test]
    fn lower_moves_one_largest_copy() {
        assert_eq!(lower(&p("(1^7,2,3)"), 2).unwrap(), p("(1^8,2)"));
        assert_eq!(lower(&p("(3,4,5)"), 3).unwrap(), p("(2,3,4)"));
        assert_eq!(lower(&p("(2,3)"), 2).unwrap(), p("(1,2)"));
        assert_eq!(lower(&p("(2,3)"), 0).unwrap(), p("(2,3)"));
        assert_eq!(
            lower(&p("(1,2)"), 2),
            Err(Error::LowerUnderflow { largest: 2, r: 2 })
        );
        assert_eq!(
            lower(&p("(3,4)"), 5),
            Err(Error::RaiseOutOfRange { r: 5, blocks: 2 })
        );
    }

    #[test]
    fn lower_undoes_raise_on_single_top_copies() {
        // When the raised copy becomes the unique largest part, lowering by
        // the same distance restores the original.
        for text in ["(1^8,2)", "(1,2^2,3)", "(1^3)"] {
            let q = p(text);
            let r = blocks(&q).unwrap().block_count();
            let up = raise(&q, r).unwrap();
            assert_eq!(lower(&up, r).unwrap(), q, "{text}");
        }
    }

    #[test]
    fn rho_one_is_the_identity() {
        for text in ["(1^12)", "(1,2,3^3)", "(1^2,2^5)"] {
            assert_eq!(rho(&p(text), 1).unwrap(), p(text));
        }
    }

    #[test]
    fn rho_trims_then_raises() {
        // (1,2,3^3): delete one 3, then raise by the original 3 blocks.
        assert_eq!(rho(&p("(1,2,3^3)"), 2).unwrap(), p("(2,3^2,4)"));
        assert_eq!(rho(&p("(1,2,3^3)"), 3).unwrap(), p("(3,4,5)"));
        assert_eq!(rho(&p("(1^8,2^2)"), 2).unwrap(), p("(1^7,2,3)"));
        assert_eq!(
            rho(&p("(1,2,3^3)"), 4),
            Err(Error::IndexOutOfRange { i: 4, max: 3 })
        );
        assert_eq!(rho(&p("(2,3)"), 1), Err(Error::OutsideCoverFamilies));
        assert_eq!(
            rho(&p("(1,3)"), 1),
            Err(Error::NotGapFree { value: 1, next: 3 })
        );
    }

    #[test]
    fn family_sets_match_the_twelve_tables() {
        assert_eq!(
            family_strings("(1^12)"),
            [
                "(1^12)",
                "(1^10,2)",
                "(1^8,2^2)",
                "(1^6,2^3)",
                "(1^4,2^4)",
                "(1^2,2^5)",
                "(2^6)",
                "(2^3,3^2)",
                "(3^4)",
                "(4^3)",
                "(6^2)",
                "(12)",
            ]
        );
        assert_eq!(
            family_strings("(1^2,2^5)"),
            [
                "(1^2,2^5)",
                "(1,2^4,3)",
                "(2^3,3^2)",
                "(2,3^2,4)",
                "(3,4,5)"
            ]
        );
        assert_eq!(
            family_strings("(1,2,3^3)"),
            ["(1,2,3^3)", "(2,3^2,4)", "(3,4,5)"]
        );
        assert_eq!(family_strings("(1^10,2)"), ["(1^10,2)"]);
    }

    #[test]
    fn trace_back_worked_examples() {
        let w = trace_back(&p("(3,4,5)"), Parity::Odd).unwrap();
        assert_eq!((w.base, w.index), (p("(1,2,3^3)"), 3));
        let w = trace_back(&p("(3,4,5)"), Parity::Even).unwrap();
        assert_eq!((w.base, w.index), (p("(1^2,2^5)"), 5));
        // Already a base: index 1.
        let w = trace_back(&p("(1^12)"), Parity::Odd).unwrap();
        assert_eq!((w.base, w.index), (p("(1^12)"), 1));
        // One-block rectangles trace only through the odd cover.
        let w = trace_back(&p("(2^6)"), Parity::Odd).unwrap();
        assert_eq!((w.base, w.index), (p("(1^12)"), 7));
        assert_eq!(
            trace_back(&p("(2^6)"), Parity::Even),
            Err(Error::OneBlockInput)
        );
        assert_eq!(
            trace_back(&p("(1,3)"), Parity::Odd),
            Err(Error::NotGapFree { value: 1, next: 3 })
        );
        assert_eq!(
            trace_back(&Partition::empty(), Parity::Odd),
            Err(Error::EmptyPartition)
        );
    }

    #[test]
    fn trace_back_inverts_every_family_member_at_small_weights() {
        for parity in [Parity::Odd, Parity::Even] {
            for n in 1..=18u64 {
                for base in families::enumerate(n, parity.base_family()).unwrap() {
                    for (idx, member) in family_set(&base).unwrap().iter().enumerate() {
                        let w = trace_back(member, parity).unwrap();
                        assert_eq!(w.base, base, "n={n} member={member}");
                        assert_eq!(w.index, idx as u64 + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn covers_tile_the_gap_free_partitions_of_twelve() {
        let odd = cover(12, Parity::Odd).unwrap();
        assert_eq!(odd.rows.len(), 8);
        assert_eq!(odd.generated_count(), 23);
        let generated: Vec<&Partition> = odd.generated().collect();
        let distinct: BTreeSet<&Partition> = generated.iter().copied().collect();
        assert_eq!(distinct.len(), generated.len(), "odd cover overlaps");
        let target: BTreeSet<Partition> = families::enumerate(12, FamilySpec::GapFree)
            .unwrap()
            .into_iter()
            .collect();
        assert_eq!(generated.len(), target.len());
        assert!(generated.into_iter().all(|q| target.contains(q)));

        let even = cover(12, Parity::Even).unwrap();
        assert_eq!(even.rows.len(), 7);
        assert_eq!(even.generated_count(), 17);
        let rectangles: BTreeSet<Partition> = families::enumerate(12, FamilySpec::GapFreeOneBlock)
            .unwrap()
            .into_iter()
            .collect();
        let generated: BTreeSet<Partition> = even.generated().cloned().collect();
        assert_eq!(generated.len(), 17);
        assert!(generated
            .iter()
            .all(|q| target.contains(q) && !rectangles.contains(q)));
        assert_eq!(target.len(), generated.len() + rectangles.len());
    }

    #[test]
    fn cover_rows_use_conjugate_images() {
        let odd = cover(12, Parity::Odd).unwrap();
        for row in &odd.rows {
            assert_eq!(row.image, row.base.conjugate());
            assert_eq!(row.groups.len(), 1);
            assert_eq!(row.groups[0].key, None);
        }
        assert!(cover(0, Parity::Odd).is_err());
    }
}
