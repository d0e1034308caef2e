//! Structural invariants checked across module boundaries: randomized
//! properties over large partitions, reference implementations of the block
//! operators, and the conjugation bijection behind the gap-free covers.

use beckworks::families::{self, FamilySpec};
use beckworks::gapfree;
use beckworks::glaisher;
use beckworks::kadic;
use beckworks::verify;
use beckworks::Partition;
use proptest::prelude::*;
use std::collections::BTreeMap;

fn arb_partition() -> impl Strategy<Value = Partition> {
    proptest::collection::btree_map(1u64..=60, 1u64..=8, 0..=10)
        .prop_map(|m| Partition::from_runs(m.into_iter().collect()).unwrap())
}

proptest! {
    #[test]
    fn conjugate_is_an_involution(p in arb_partition()) {
        let c = p.conjugate();
        prop_assert_eq!(c.conjugate(), p.clone());
        prop_assert_eq!(c.weight(), p.weight());
        if !p.is_empty() {
            prop_assert_eq!(c.largest(), Some(p.length()));
            prop_assert_eq!(c.length(), p.largest().unwrap());
            prop_assert_eq!(c.smallest(), Some(p.largest_multiplicity()));
        }
    }

    #[test]
    fn text_grammar_roundtrips(p in arb_partition()) {
        prop_assert_eq!(Partition::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn split_then_merge_restores_any_k_distinct_partition(
        p in arb_partition(),
        k in 2u64..=5,
    ) {
        // Clamp multiplicities below k to land in the split domain.
        let d = Partition::from_runs(
            p.runs()
                .iter()
                .map(|&(v, m)| (v, (m - 1) % (k - 1) + 1))
                .collect(),
        )
        .unwrap();
        let o = glaisher::split(&d, k).unwrap();
        prop_assert!(families::contains(&o, FamilySpec::KRegular(k)));
        prop_assert_eq!(o.weight(), d.weight());
        prop_assert_eq!(glaisher::merge(&o, k).unwrap(), d);
    }

    #[test]
    fn merge_then_split_restores_any_k_regular_partition(
        p in arb_partition(),
        k in 2u64..=5,
    ) {
        // Strip every value to its k-free cofactor to land in the merge
        // domain.
        let mut mults: BTreeMap<u64, u64> = BTreeMap::new();
        for &(v, m) in p.runs() {
            *mults
                .entry(kadic::k_free_factor(v, k).unwrap().cofactor)
                .or_insert(0) += m;
        }
        let o = Partition::from_runs(mults.into_iter().collect()).unwrap();
        let d = glaisher::merge(&o, k).unwrap();
        prop_assert!(families::contains(&d, FamilySpec::KDistinct(k)));
        prop_assert_eq!(d.weight(), o.weight());
        prop_assert_eq!(glaisher::split(&d, k).unwrap(), o);
    }

    #[test]
    fn digit_expansions_reconstruct_their_input(
        m in 1u64..=1_000_000_000_000,
        k in 2u64..=10,
    ) {
        let digits = kadic::digits(m, k).unwrap();
        prop_assert_eq!(digits.value(), m);
        prop_assert_eq!(digits.digit_sum(), kadic::digit_sum(m, k).unwrap());
        prop_assert_eq!(
            digits.highest_exponent(),
            kadic::highest_exponent(m, k).unwrap()
        );
        let f = kadic::k_free_factor(m, k).unwrap();
        prop_assert_eq!(f.value(), m);
        prop_assert!(f.cofactor % k != 0);
    }
}

/// The block-at-a-time description of the raising operator: add one to a
/// part in each of the r smallest blocks, smallest block first.
fn reference_raise(p: &Partition, r: u64) -> Partition {
    let profile = gapfree::blocks(p).unwrap();
    let mut mults: BTreeMap<u64, u64> = p.runs().iter().copied().collect();
    for j in 0..r {
        let v = profile.start + j;
        let m = mults.get_mut(&v).expect("gap-free block present");
        *m -= 1;
        if *m == 0 {
            mults.remove(&v);
        }
        *mults.entry(v + 1).or_insert(0) += 1;
    }
    Partition::from_runs(mults.into_iter().collect()).unwrap()
}

/// The mirror image: subtract one from a part in each of the r largest
/// blocks, largest block first.
fn reference_lower(p: &Partition, r: u64) -> Partition {
    let largest = p.largest().expect("nonempty input");
    let mut mults: BTreeMap<u64, u64> = p.runs().iter().copied().collect();
    for j in 0..r {
        let v = largest - j;
        let m = mults.get_mut(&v).expect("gap-free block present");
        *m -= 1;
        if *m == 0 {
            mults.remove(&v);
        }
        *mults.entry(v - 1).or_insert(0) += 1;
    }
    Partition::from_runs(mults.into_iter().collect()).unwrap()
}

#[test]
fn block_operators_match_their_per_block_references() {
    for n in 1..=30u64 {
        for p in families::enumerate(n, FamilySpec::GapFree).unwrap() {
            let blocks = gapfree::blocks(&p).unwrap().block_count();
            for r in 0..=blocks {
                assert_eq!(
                    gapfree::raise(&p, r).unwrap(),
                    reference_raise(&p, r),
                    "raise {p} by {r}"
                );
                if p.largest().unwrap() > r {
                    assert_eq!(
                        gapfree::lower(&p, r).unwrap(),
                        reference_lower(&p, r),
                        "lower {p} by {r}"
                    );
                } else if r > 0 {
                    assert!(gapfree::lower(&p, r).is_err(), "lower {p} by {r}");
                }
            }
            assert!(gapfree::raise(&p, blocks + 1).is_err());
        }
    }
}

#[test]
fn extreme_block_shifts_obey_the_count_and_inverse_laws() {
    // For gap-free p with smallest part > 1 and r within one of the block
    // count: both shifts move the distinct-part count into {r, r + 1} and
    // invert each other exactly.
    for n in 2..=30u64 {
        for p in families::enumerate(n, FamilySpec::GapFree).unwrap() {
            if p.smallest() == Some(1) {
                continue;
            }
            let blocks = p.distinct_count();
            for r in [blocks - 1, blocks] {
                let up = gapfree::raise(&p, r).unwrap();
                assert!(
                    up.distinct_count() == r || up.distinct_count() == r + 1,
                    "raise {p} by {r} has {} blocks",
                    up.distinct_count()
                );
                assert_eq!(
                    gapfree::lower(&up, r).unwrap(),
                    p,
                    "lower undoes raise on {p}"
                );
                let down = gapfree::lower(&p, r).unwrap();
                assert!(
                    down.distinct_count() == r || down.distinct_count() == r + 1,
                    "lower {p} by {r} has {} blocks",
                    down.distinct_count()
                );
                assert_eq!(
                    gapfree::raise(&down, r).unwrap(),
                    p,
                    "raise undoes lower on {p}"
                );
            }
        }
    }
}

#[test]
fn conjugation_bijects_cover_bases_onto_distinct_partitions() {
    // Gap-free partitions with smallest part 1 and odd largest part map onto
    // odd-length distinct partitions; even onto even-length. The largest
    // multiplicity becomes the smallest part of the image.
    let pairs = [
        (
            FamilySpec::GapFreeBottomOddTop,
            FamilySpec::DistinctOddLength,
        ),
        (
            FamilySpec::GapFreeBottomEvenTop,
            FamilySpec::DistinctEvenLength,
        ),
    ];
    for n in 1..=35u64 {
        for (from, to) in pairs {
            let mut images = Vec::new();
            for p in families::enumerate(n, from).unwrap() {
                let c = p.conjugate();
                assert!(families::contains(&c, to), "{p} conjugates to {c}");
                assert_eq!(
                    c.smallest(),
                    Some(p.largest_multiplicity()),
                    "smallest part of the conjugate of {p}"
                );
                images.push(c);
            }
            images.sort();
            images.dedup();
            let targets = families::enumerate(n, to).unwrap();
            assert_eq!(images, targets, "n={n}");
        }
    }
}

#[test]
fn one_block_partitions_count_divisors() {
    for n in 1..=40u64 {
        assert_eq!(
            families::count(n, FamilySpec::GapFreeOneBlock).unwrap(),
            verify::divisor_count(n).unwrap(),
            "n={n}"
        );
    }
}

#[test]
fn full_catalog_passes_at_small_weights() {
    let reports = verify::run_suite(&verify::default_catalog(), 14).unwrap();
    assert_eq!(reports.len(), 35 * 14);
    if let Some(failure) = verify::first_failure(&reports) {
        panic!(
            "{} n={} lhs={} rhs={} rhs2={:?}",
            failure.id.name(),
            failure.n,
            failure.lhs,
            failure.rhs,
            failure.rhs2
        );
    }
}
