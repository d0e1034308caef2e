//! The one-divisible cover: partitions with exactly one distinct part
//! divisible by k, generated from k-regular partitions by partial merges.
//!
//! For a k-regular base λ and a part i occurring m times, replacing r * k^j
//! copies of i by r copies of i * k^j (for 1 <= j <= the highest base-k
//! exponent of m and 1 <= r <= floor(m / k^j)) yields a partition with
//! exactly one distinct part divisible by k. Ranging over all bases, parts,
//! and (j, r) pairs produces every such partition exactly once, which is the
//! engine behind the length-difference counting identities. `locate` inverts
//! the construction from the generated partition alone.

use crate::cover::{CoverGroup, CoverRow, Decomposition};
use crate::error::{Error, Result};
use crate::exec;
use crate::families::{self, FamilySpec};
use crate::glaisher;
use crate::kadic;
use crate::partition::Partition;

/// Where a generated partition came from: base partition, merged part, and
/// the (exponent, repeat) pair selecting the partial merge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeckOneWitness {
    /// The k-regular base partition.
    pub base: Partition,
    /// The part i of the base being merged.
    pub part: u64,
    /// The merge exponent j >= 1.
    pub exponent: u64,
    /// How many merged copies of i * k^j are formed.
    pub repeat: u64,
}

fn check_base_partition(p: &Partition, k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::BaseTooSmall { k });
    }
    for &(v, _) in p.runs() {
        if v % k == 0 {
            return Err(Error::NotKRegular { k, value: v });
        }
    }
    Ok(())
}

/// All partial merges of the given part, ordered by exponent then repeat
/// count.
///
/// Returns the empty list when the part occurs fewer than k times. The
/// length always equals (m - digit_sum(m)) / (k - 1) for multiplicity m, by
/// the telescoping floor sum.
pub fn expand(base: &Partition, k: u64, part: u64) -> Result<Vec<(BeckOneWitness, Partition)>> {
    check_base_partition(base, k)?;
    if part % k == 0 {
        return Err(Error::PartDivisible { k, value: part });
    }
    let mult = base.multiplicity(part);
    if mult == 0 {
        return Err(Error::MissingPart { value: part });
    }
    let mut out = Vec::new();
    for j in 1..=kadic::highest_exponent(mult, k)? {
        let power = k.pow(j as u32);
        for r in 1..=mult / power {
            let mut parts = base.to_map();
            *parts.get_mut(&part).expect("part is present") -= r * power;
            *parts.entry(part * power).or_insert(0) += r;
            let image = Partition::from_map(parts);
            debug_assert_eq!(image.weight(), base.weight());
            let witness = BeckOneWitness {
                base: base.clone(),
                part,
                exponent: j,
                repeat: r,
            };
            out.push((witness, image));
        }
    }
    Ok(out)
}

/// The full cover at weight n: one row per k-regular partition of n, with
/// the row image under merge and one expansion group per distinct part in
/// ascending order.
pub fn decompose(n: u64, k: u64) -> Result<Decomposition> {
    if k < 2 {
        return Err(Error::BaseTooSmall { k });
    }
    let bases = families::enumerate(n, FamilySpec::KRegular(k))?;
    let rows = exec::map_indexed(bases.len(), |idx| -> Result<CoverRow> {
        let base = &bases[idx];
        let image = glaisher::merge(base, k)?;
        let mut groups = Vec::with_capacity(base.runs().len());
        for &(part, _) in base.runs() {
            let members = expand(base, k, part)?
                .into_iter()
                .map(|(_, image)| image)
                .collect();
            groups.push(CoverGroup {
                key: Some(part),
                members,
            });
        }
        Ok(CoverRow {
            base: base.clone(),
            image,
            groups,
        })
    });
    Ok(Decomposition {
        rows: rows.into_iter().collect::<Result<Vec<_>>>()?,
    })
}

/// Recovers the unique witness of a generated partition.
///
/// The input must have exactly one distinct part divisible by k; that part
/// factors as i * k^j and its multiplicity is the repeat count, which pins
/// down the base. The reconstruction is checked by replaying the merge.
pub fn locate(image: &Partition, k: u64) -> Result<BeckOneWitness> {
    if k < 2 {
        return Err(Error::BaseTooSmall { k });
    }
    let divisible: Vec<(u64, u64)> = image
        .runs()
        .iter()
        .copied()
        .filter(|&(v, _)| v % k == 0)
        .collect();
    if divisible.len() != 1 {
        return Err(Error::NotOneDivisible {
            k,
            count: divisible.len() as u64,
        });
    }
    let (merged_part, repeat) = divisible[0];
    let factored = kadic::k_free_factor(merged_part, k)?;
    let (part, exponent) = (factored.cofactor, factored.exponent);
    let power = merged_part / part;

    let mut parts = image.to_map();
    parts.remove(&merged_part);
    *parts.entry(part).or_insert(0) += repeat * power;
    let base = Partition::from_map(parts);

    // Replay the merge; a mismatch would mean the cover is not invertible.
    let witness = BeckOneWitness {
        base,
        part,
        exponent,
        repeat,
    };
    let replayed = expand(&witness.base, k, part)?
        .into_iter()
        .find(|(w, _)| w.exponent == exponent && w.repeat == repeat)
        .map(|(_, image)| image);
    if replayed.as_ref() != Some(image) {
        return Err(Error::Internal("locate failed to replay its merge"));
    }
    Ok(witness)
}
