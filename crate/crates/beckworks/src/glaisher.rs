//! The split and merge bijections between k-distinct and k-regular
//! partitions.
//!
//! `split` sends a partition whose parts repeat fewer than k times to one
//! with no part divisible by k: each part v = k^a * d dissolves into k^a
//! copies of its k-free factor d. `merge` goes the other way by writing each
//! multiplicity in base k and carrying digits into larger parts. The two
//! directions are implemented independently and only the tests confront them
//! with each other; for k = 2 they specialize to the classic correspondence
//! between distinct and odd partitions.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::kadic;
use crate::partition::Partition;

fn check_base(k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::BaseTooSmall { k });
    }
    Ok(())
}

/// Maps a k-distinct partition to a k-regular partition of the same weight.
///
/// Each run `(v, m)` with v = k^a * d and k not dividing d contributes
/// m * k^a copies of d.
pub fn split(p: &Partition, k: u64) -> Result<Partition> {
    check_base(k)?;
    for &(v, m) in p.runs() {
        if m >= k {
            return Err(Error::NotKDistinct {
                k,
                value: v,
                multiplicity: m,
            });
        }
    }
    let mut parts: BTreeMap<u64, u64> = BTreeMap::new();
    for &(v, m) in p.runs() {
        let f = kadic::k_free_factor(v, k)?;
        let copies = m * k.pow(f.exponent as u32);
        *parts.entry(f.cofactor).or_insert(0) += copies;
    }
    let image = Partition::from_map(parts);
    debug_assert!(image.runs().iter().all(|&(v, _)| v % k != 0));
    debug_assert_eq!(image.weight(), p.weight());
    Ok(image)
}

/// Maps a k-regular partition to a k-distinct partition of the same weight.
///
/// A run `(i, m)` with m = sum of b_j * k^(a_j) in base-k digits contributes
/// b_j copies of i * k^(a_j) for every digit. Distinct source runs always
/// land on distinct targets because i * k^a determines (i, a) when k does not
/// divide i, so multiplicities never need merging.
pub fn merge(p: &Partition, k: u64) -> Result<Partition> {
    check_base(k)?;
    for &(v, _) in p.runs() {
        if v % k == 0 {
            return Err(Error::NotKRegular { k, value: v });
        }
    }
    let mut parts: BTreeMap<u64, u64> = BTreeMap::new();
    for &(i, m) in p.runs() {
        for &(digit, exponent) in &kadic::digits(m, k)?.terms {
            let target = i * k.pow(exponent as u32);
            let clashed = parts.insert(target, digit).is_some();
            debug_assert!(!clashed, "two digit terms landed on part {target}");
        }
    }
    let image = Partition::from_map(parts);
    debug_assert!(image.runs().iter().all(|&(_, m)| m < k));
    debug_assert_eq!(image.weight(), p.weight());
    Ok(image)
}
