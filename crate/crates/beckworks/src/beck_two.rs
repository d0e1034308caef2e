//! The carry-merge cover: partitions with exactly one overloaded
//! multiplicity, generated from k-distinct partitions by breaking one part
//! into k copies of a smaller one.
//!
//! Fix the k-free cofactor d and list the parts of a k-distinct base λ of
//! the form k^a * d as a ladder a_1 < ... < a_p. For each adjacent pair,
//! trading one copy of the upper rung for k copies of the lower rung (plus
//! k-1 copies of every skipped intermediate power) produces a partition
//! whose multiplicities stay below k except for a single value pushed into
//! k+1..=2k-1. Every such partition arises exactly once; `carry_merge`
//! inverts the construction by carrying base-k digit overflow upward, one
//! power at a time, until multiplicities settle below k.

use std::collections::BTreeSet;

use crate::cover::{CoverGroup, CoverRow, Decomposition};
use crate::error::{Error, Result};
use crate::exec;
use crate::families::{self, FamilySpec};
use crate::glaisher;
use crate::kadic;
use crate::partition::Partition;

/// Where a generated partition came from: base partition, cofactor class,
/// and the 1-based rung index of the pair that was traded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeckTwoWitness {
    /// The k-distinct base partition.
    pub base: Partition,
    /// The k-free cofactor d naming the class.
    pub cofactor: u64,
    /// Which adjacent ladder pair was traded: 1 <= index <= p - 1 for a
    /// ladder of p rungs.
    pub index: u64,
}

fn check_distinct(p: &Partition, k: u64) -> Result<()> {
    for &(v, m) in p.runs() {
        if m >= k {
            return Err(Error::NotKDistinct {
                k,
                value: v,
                multiplicity: m,
            });
        }
    }
    Ok(())
}

/// The exponent ladder of class d within p: all a with k^a * d a part
/// value, ascending.
fn ladder(p: &Partition, k: u64, d: u64) -> Result<Vec<u64>> {
    let mut exponents = Vec::new();
    for &(v, _) in p.runs() {
        let f = kadic::k_free_factor(v, k)?;
        if f.cofactor == d {
            exponents.push(f.exponent);
        }
    }
    // Ascending part values with a common cofactor have ascending exponents.
    debug_assert!(exponents.windows(2).all(|w| w[0] < w[1]));
    Ok(exponents)
}

/// All trades within one cofactor class of the base, ordered by rung index.
///
/// Returns the empty list when the class has a single rung. Errors when the
/// class has no rungs at all, when d is not k-free, or when the base is not
/// k-distinct.
pub fn expand_class(base: &Partition, k: u64, d: u64) -> Result<Vec<(BeckTwoWitness, Partition)>> {
    if k < 2 {
        return Err(Error::BaseTooSmall { k });
    }
    if d == 0 {
        return Err(Error::ZeroInput);
    }
    if d % k == 0 {
        return Err(Error::CofactorDivisible { k, d });
    }
    check_distinct(base, k)?;
    let rungs = ladder(base, k, d)?;
    if rungs.is_empty() {
        return Err(Error::EmptyClass { k, d });
    }
    let mut out = Vec::new();
    for i in 1..rungs.len() {
        let (low, high) = (rungs[i - 1], rungs[i]);
        let mut parts = base.to_map();
        let upper = d * k.pow(high as u32);
        let lower = d * k.pow(low as u32);
        match parts.get_mut(&upper) {
            Some(m) if *m > 1 => *m -= 1,
            _ => {
                parts.remove(&upper);
            }
        }
        *parts.entry(lower).or_insert(0) += k;
        // Skipped powers between the rungs each pick up k - 1 copies.
        for t in 1..high - low {
            let skipped = d * k.pow((low + t) as u32);
            *parts.entry(skipped).or_insert(0) += k - 1;
        }
        let image = Partition::from_map(parts);
        debug_assert_eq!(image.weight(), base.weight());
        debug_assert!(families::contains(&image, FamilySpec::TFamily(k)));
        let witness = BeckTwoWitness {
            base: base.clone(),
            cofactor: d,
            index: i as u64,
        };
        out.push((witness, image));
    }
    Ok(out)
}

/// The full cover at weight n: one row per k-distinct partition of n, with
/// the row image under split and one trade group per cofactor class in
/// ascending order.
///
/// k = 1 is accepted and yields no rows: every multiplicity window
/// k+1..=2k-1 is empty, so the covered family is empty too.
pub fn decompose(n: u64, k: u64) -> Result<Decomposition> {
    if k == 0 {
        return Err(Error::BadParams("carry-merge cover requires k >= 1".into()));
    }
    if k == 1 {
        return Ok(Decomposition { rows: Vec::new() });
    }
    let bases = families::enumerate(n, FamilySpec::KDistinct(k))?;
    let rows = exec::map_indexed(bases.len(), |idx| -> Result<CoverRow> {
        let base = &bases[idx];
        let image = glaisher::split(base, k)?;
        let mut cofactors = BTreeSet::new();
        for &(v, _) in base.runs() {
            cofactors.insert(kadic::k_free_factor(v, k)?.cofactor);
        }
        let mut groups = Vec::with_capacity(cofactors.len());
        for d in cofactors {
            let members = expand_class(base, k, d)?
                .into_iter()
                .map(|(_, image)| image)
                .collect();
            groups.push(CoverGroup {
                key: Some(d),
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

/// Recovers the unique witness of a generated partition by carrying the
/// overloaded multiplicity upward.
///
/// The input must have exactly one part with multiplicity in k+1..=2k-1 and
/// every other multiplicity below k. Trading k copies of that part for one
/// copy of k times it, repeatedly while a multiplicity reaches k, restores
/// the k-distinct base. Each carry step is checked to preserve the weight,
/// and the recovered witness is replayed through [`expand_class`] before it
/// is returned.
pub fn carry_merge(generated: &Partition, k: u64) -> Result<BeckTwoWitness> {
    if k < 2 {
        return Err(Error::BaseTooSmall { k });
    }
    let mut special = None;
    for &(v, m) in generated.runs() {
        if m > k && m < 2 * k {
            if special.replace(v).is_some() {
                return Err(Error::NotTFamily { k });
            }
        } else if m >= k {
            return Err(Error::NotTFamily { k });
        }
    }
    let Some(start) = special else {
        return Err(Error::NotTFamily { k });
    };

    let weight = generated.weight();
    let mut parts = generated.to_map();
    let mut cur = start;
    loop {
        let m = parts.get_mut(&cur).expect("carry source is present");
        debug_assert!(*m >= k);
        if *m == k {
            parts.remove(&cur);
        } else {
            *m -= k;
        }
        let next = cur * k;
        *parts.entry(next).or_insert(0) += 1;
        if parts.iter().map(|(&v, &m)| v * m).sum::<u64>() != weight {
            return Err(Error::Internal("carry step changed the weight"));
        }
        if parts[&next] < k {
            break;
        }
        cur = next;
    }
    let base = Partition::from_map(parts);
    if !families::contains(&base, FamilySpec::KDistinct(k)) {
        return Err(Error::Internal("carry left a multiplicity at k or above"));
    }

    let f = kadic::k_free_factor(start, k)?;
    let rungs = ladder(&base, k, f.cofactor)?;
    let Some(pos) = rungs.iter().position(|&a| a == f.exponent) else {
        return Err(Error::Internal("special part vanished from its ladder"));
    };
    let index = (pos + 1) as u64;
    if index as usize >= rungs.len() {
        return Err(Error::Internal("ladder has no rung above the special part"));
    }

    // Replay the trade; take nothing on trust.
    let witness = BeckTwoWitness {
        base,
        cofactor: f.cofactor,
        index,
    };
    let replayed = expand_class(&witness.base, k, f.cofactor)?
        .into_iter()
        .find(|(w, _)| w.index == index)
        .map(|(_, image)| image);
    if replayed.as_ref() != Some(generated) {
        return Err(Error::Internal("carry merge failed to replay its trade"));
    }
    Ok(witness)
}
