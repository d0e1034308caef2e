//! Partition families, their enumeration, and summary statistics.
//!
//! Every family here shows up on one side of an identity in the catalog. The
//! enumerators generate members directly with family-specific pruning and
//! emit in ascending lexicographic order of the ascending part sequences;
//! [`enumerate_by_filter`] instead filters the full partition list through
//! the [`contains`] predicate, so the two paths check each other.

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A family of partitions, identified by its defining predicate.
///
/// Parameterized families take the base k (and for the Franklin pair a
/// target count m). k = 1 is degenerate but legal wherever the predicate
/// still makes sense; k = 0 is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// Every partition.
    All,
    /// Each part repeats at most k-1 times.
    KDistinct(u64),
    /// No part is divisible by k.
    KRegular(u64),
    /// Exactly one distinct part value is divisible by k.
    OneDivisible(u64),
    /// Exactly one distinct part value has multiplicity at least k.
    OneRepeated(u64),
    /// Exactly one part has multiplicity in k+1..=2k-1 and every other part
    /// has multiplicity at most k-1.
    TFamily(u64),
    /// Part values form a consecutive block (the empty partition counts).
    GapFree,
    /// Exactly one run: a rectangle v^m.
    GapFreeOneBlock,
    /// Gap-free with smallest part 1 and odd largest part.
    GapFreeBottomOddTop,
    /// Gap-free with smallest part 1 and even largest part.
    GapFreeBottomEvenTop,
    /// All parts distinct, an odd number of them.
    DistinctOddLength,
    /// All parts distinct, an even number of them (the empty partition
    /// counts).
    DistinctEvenLength,
    /// Exactly m distinct part values have multiplicity at least k.
    FranklinLeft(u64, u64),
    /// Exactly m distinct part values are divisible by k.
    FranklinRight(u64, u64),
}

impl FamilySpec {
    fn validate(&self) -> Result<()> {
        let k = match *self {
            FamilySpec::KDistinct(k)
            | FamilySpec::KRegular(k)
            | FamilySpec::OneDivisible(k)
            | FamilySpec::OneRepeated(k)
            | FamilySpec::TFamily(k)
            | FamilySpec::FranklinLeft(k, _)
            | FamilySpec::FranklinRight(k, _) => k,
            _ => return Ok(()),
        };
        if k == 0 {
            return Err(Error::BadParams(format!("{self:?} requires k >= 1")));
        }
        Ok(())
    }
}

/// A per-partition statistic summed by [`aggregate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    /// Number of parts with multiplicity.
    Length,
    /// Number of distinct part values.
    DistinctCount,
    /// Smallest part; the empty partition contributes 0.
    Smallest,
    /// Number of parts congruent to 1 mod k, with multiplicity. For k = 1
    /// this counts every part.
    PartsCongruentOneModK(u64),
}

impl Statistic {
    fn validate(&self) -> Result<()> {
        if let Statistic::PartsCongruentOneModK(0) = self {
            return Err(Error::BadParams(
                "statistic parts-congruent-one requires k >= 1".into(),
            ));
        }
        Ok(())
    }
}

/// Evaluates a statistic on one partition.
pub fn stat_value(p: &Partition, stat: Statistic) -> Result<u64> {
    stat.validate()?;
    Ok(stat_from_runs(p.runs(), stat))
}

fn stat_from_runs(runs: &[(u64, u64)], stat: Statistic) -> u64 {
    match stat {
        Statistic::Length => runs.iter().map(|&(_, m)| m).sum(),
        Statistic::DistinctCount => runs.len() as u64,
        Statistic::Smallest => runs.first().map_or(0, |&(v, _)| v),
        Statistic::PartsCongruentOneModK(k) => runs
            .iter()
            .filter(|&&(v, _)| v % k == 1 % k)
            .map(|&(_, m)| m)
            .sum(),
    }
}

/// Membership predicate, written directly from each family definition with
/// no shared code with the pruned enumerators. Families with k = 0 contain
/// nothing.
pub fn contains(p: &Partition, spec: FamilySpec) -> bool {
    let runs = p.runs();
    match spec {
        FamilySpec::All => true,
        FamilySpec::KDistinct(k) => k >= 1 && runs.iter().all(|&(_, m)| m < k),
        FamilySpec::KRegular(k) => k >= 1 && runs.iter().all(|&(v, _)| v % k != 0),
        FamilySpec::OneDivisible(k) => {
            k >= 1 && runs.iter().filter(|&&(v, _)| v % k == 0).count() == 1
        }
        FamilySpec::OneRepeated(k) => k >= 1 && runs.iter().filter(|&&(_, m)| m >= k).count() == 1,
        FamilySpec::TFamily(k) => {
            if k == 0 {
                return false;
            }
            let special = runs.iter().filter(|&&(_, m)| m > k && m < 2 * k).count();
            special == 1 && runs.iter().all(|&(_, m)| m < k || (m > k && m < 2 * k))
        }
        FamilySpec::GapFree => runs.windows(2).all(|w| w[1].0 == w[0].0 + 1),
        FamilySpec::GapFreeOneBlock => runs.len() == 1,
        FamilySpec::GapFreeBottomOddTop => {
            contains(p, FamilySpec::GapFree)
                && p.smallest() == Some(1)
                && p.largest().is_some_and(|v| v % 2 == 1)
        }
        FamilySpec::GapFreeBottomEvenTop => {
            contains(p, FamilySpec::GapFree)
                && p.smallest() == Some(1)
                && p.largest().is_some_and(|v| v % 2 == 0)
        }
        FamilySpec::DistinctOddLength => runs.iter().all(|&(_, m)| m == 1) && runs.len() % 2 == 1,
        FamilySpec::DistinctEvenLength => runs.iter().all(|&(_, m)| m == 1) && runs.len() % 2 == 0,
        FamilySpec::FranklinLeft(k, m) => {
            k >= 1 && runs.iter().filter(|&&(_, mult)| mult >= k).count() as u64 == m
        }
        FamilySpec::FranklinRight(k, m) => {
            k >= 1 && runs.iter().filter(|&&(v, _)| v % k == 0).count() as u64 == m
        }
    }
}

/// Calls `f` with the runs of every member of the family at weight n, in
/// ascending lexicographic order of the ascending part sequences.
fn visit_runs(n: u64, spec: FamilySpec, f: &mut dyn FnMut(&[(u64, u64)])) {
    match spec {
        FamilySpec::All => general(n, None, None, None, f),
        FamilySpec::KDistinct(k) => general(n, Some(k - 1), None, None, f),
        FamilySpec::KRegular(k) => general(n, None, Some(k), None, f),
        FamilySpec::DistinctOddLength => general(n, Some(1), None, Some(1), f),
        FamilySpec::DistinctEvenLength => general(n, Some(1), None, Some(0), f),
        FamilySpec::OneDivisible(k) => counted(n, Special::DivisibleValue(k), 1, f),
        FamilySpec::OneRepeated(k) => counted(n, Special::RepeatedValue(k), 1, f),
        FamilySpec::TFamily(k) => counted(n, Special::WindowMultiplicity(k), 1, f),
        FamilySpec::FranklinLeft(k, m) => counted(n, Special::RepeatedValue(k), m, f),
        FamilySpec::FranklinRight(k, m) => counted(n, Special::DivisibleValue(k), m, f),
        FamilySpec::GapFree => gap_free(n, GapVariant::Any, f),
        FamilySpec::GapFreeOneBlock => gap_free(n, GapVariant::OneBlock, f),
        FamilySpec::GapFreeBottomOddTop => gap_free(n, GapVariant::BottomOneTop(1), f),
        FamilySpec::GapFreeBottomEvenTop => gap_free(n, GapVariant::BottomOneTop(0), f),
    }
}

/// Engine for the families constrained only by a multiplicity cap, a value
/// residue, or the final length parity.
fn general(
    n: u64,
    mult_cap: Option<u64>,
    skip_divisible: Option<u64>,
    length_parity: Option<u64>,
    f: &mut dyn FnMut(&[(u64, u64)]),
) {
    struct Rec<'a> {
        mult_cap: Option<u64>,
        skip_divisible: Option<u64>,
        length_parity: Option<u64>,
        scratch: Vec<(u64, u64)>,
        length: u64,
        f: &'a mut dyn FnMut(&[(u64, u64)]),
    }
    impl Rec<'_> {
        fn go(&mut self, rem: u64, min_value: u64) {
            if rem == 0 {
                if self.length_parity.is_none_or(|p| self.length % 2 == p) {
                    (self.f)(&self.scratch);
                }
                return;
            }
            for v in min_value..=rem {
                if self.skip_divisible.is_some_and(|k| v % k == 0) {
                    continue;
                }
                let mut max_m = rem / v;
                if let Some(cap) = self.mult_cap {
                    max_m = max_m.min(cap);
                }
                for m in (1..=max_m).rev() {
                    let leftover = rem - v * m;
                    // Parts above v cannot sum to a leftover of v or less.
                    if leftover != 0 && leftover <= v {
                        continue;
                    }
                    self.scratch.push((v, m));
                    self.length += m;
                    self.go(leftover, v + 1);
                    self.length -= m;
                    self.scratch.pop();
                }
            }
        }
    }
    let mut rec = Rec {
        mult_cap,
        skip_divisible,
        length_parity,
        scratch: Vec::new(),
        length: 0,
        f,
    };
    rec.go(n, 1);
}

/// What makes a part value "special" in the exact-count families.
#[derive(Clone, Copy)]
enum Special {
    /// The value is divisible by k.
    DivisibleValue(u64),
    /// The value occurs with multiplicity at least k.
    RepeatedValue(u64),
    /// The value occurs with multiplicity in k+1..=2k-1; multiplicities of k
    /// or more outside that window are forbidden outright.
    WindowMultiplicity(u64),
}

/// Engine for families that demand an exact number of special parts.
fn counted(n: u64, special: Special, target: u64, f: &mut dyn FnMut(&[(u64, u64)])) {
    struct Rec<'a> {
        special: Special,
        target: u64,
        scratch: Vec<(u64, u64)>,
        found: u64,
        f: &'a mut dyn FnMut(&[(u64, u64)]),
    }
    impl Rec<'_> {
        /// Least extra weight that `needed` further special values no
        /// smaller than `min_value` can cost. Used to cut dead branches.
        fn deficit_floor(&self, needed: u64, min_value: u64) -> u64 {
            if needed == 0 {
                return 0;
            }
            match self.special {
                Special::DivisibleValue(k) => {
                    // needed distinct multiples of k starting at the first
                    // one >= min_value, each occurring at least once.
                    let first = min_value.div_ceil(k) * k;
                    needed * first + k * (needed * (needed - 1) / 2)
                }
                Special::RepeatedValue(k) => {
                    // needed distinct values >= min_value, each k times.
                    k * (needed * min_value + needed * (needed - 1) / 2)
                }
                Special::WindowMultiplicity(k) => {
                    // target is always 1 here; the special part needs k+1
                    // copies.
                    needed * (k + 1) * min_value
                }
            }
        }

        fn go(&mut self, rem: u64, min_value: u64) {
            if rem == 0 {
                if self.found == self.target {
                    (self.f)(&self.scratch);
                }
                return;
            }
            let needed = self.target - self.found;
            if self.deficit_floor(needed, min_value) > rem {
                return;
            }
            for v in min_value..=rem {
                for m in (1..=rem / v).rev() {
                    let is_special = match self.special {
                        Special::DivisibleValue(k) => v % k == 0,
                        Special::RepeatedValue(k) => m >= k,
                        Special::WindowMultiplicity(k) => {
                            if m == k || m >= 2 * k {
                                continue;
                            }
                            m > k
                        }
                    };
                    if is_special && self.found == self.target {
                        continue;
                    }
                    let leftover = rem - v * m;
                    if leftover != 0 && leftover <= v {
                        continue;
                    }
                    self.scratch.push((v, m));
                    self.found += is_special as u64;
                    self.go(leftover, v + 1);
                    self.found -= is_special as u64;
                    self.scratch.pop();
                }
            }
        }
    }
    let mut rec = Rec {
        special,
        target,
        scratch: Vec::new(),
        found: 0,
        f,
    };
    rec.go(n, 1);
}

#[derive(Clone, Copy, PartialEq)]
enum GapVariant {
    Any,
    OneBlock,
    /// Smallest part fixed at 1, largest part of the given parity.
    BottomOneTop(u64),
}

/// Engine for gap-free families: part values must be consecutive, so each
/// level within a recursion step moves to exactly the next value.
fn gap_free(n: u64, variant: GapVariant, f: &mut dyn FnMut(&[(u64, u64)])) {
    if n == 0 {
        if variant == GapVariant::Any {
            f(&[]);
        }
        return;
    }
    if variant == GapVariant::OneBlock {
        for v in 1..=n {
            if n % v == 0 {
                f(&[(v, n / v)]);
            }
        }
        return;
    }
    struct Rec<'a> {
        top_parity: Option<u64>,
        scratch: Vec<(u64, u64)>,
        f: &'a mut dyn FnMut(&[(u64, u64)]),
    }
    impl Rec<'_> {
        fn go(&mut self, v: u64, rem: u64) {
            for m in (1..=rem / v).rev() {
                let leftover = rem - v * m;
                if leftover == 0 {
                    if self.top_parity.is_none_or(|p| v % 2 == p) {
                        self.scratch.push((v, m));
                        (self.f)(&self.scratch);
                        self.scratch.pop();
                    }
                    continue;
                }
                // The next block sits at exactly v + 1.
                if leftover <= v {
                    continue;
                }
                self.scratch.push((v, m));
                self.go(v + 1, leftover);
                self.scratch.pop();
            }
        }
    }
    match variant {
        GapVariant::Any => {
            let mut rec = Rec {
                top_parity: None,
                scratch: Vec::new(),
                f,
            };
            for start in 1..=n {
                rec.go(start, n);
            }
        }
        GapVariant::BottomOneTop(parity) => {
            let mut rec = Rec {
                top_parity: Some(parity),
                scratch: Vec::new(),
                f,
            };
            rec.go(1, n);
        }
        GapVariant::OneBlock => unreachable!("handled above"),
    }
}

/// Calls `f` on every member of the family at weight n, ascending-lex.
pub fn for_each(n: u64, spec: FamilySpec, mut f: impl FnMut(&Partition)) -> Result<()> {
    spec.validate()?;
    visit_runs(n, spec, &mut |runs| {
        f(&Partition::from_runs_unchecked(runs.to_vec()))
    });
    Ok(())
}

/// All members of the family at weight n, ascending-lex.
pub fn enumerate(n: u64, spec: FamilySpec) -> Result<Vec<Partition>> {
    spec.validate()?;
    let mut out = Vec::new();
    visit_runs(n, spec, &mut |runs| {
        out.push(Partition::from_runs_unchecked(runs.to_vec()))
    });
    Ok(out)
}

/// Reference path: every partition of n, filtered through [`contains`].
/// Slower than [`enumerate`] but shares no pruning logic with it, so the two
/// serve as oracles for each other.
pub fn enumerate_by_filter(n: u64, spec: FamilySpec) -> Result<Vec<Partition>> {
    spec.validate()?;
    let mut out = Vec::new();
    visit_runs(n, FamilySpec::All, &mut |runs| {
        let p = Partition::from_runs_unchecked(runs.to_vec());
        if contains(&p, spec) {
            out.push(p);
        }
    });
    Ok(out)
}

/// Number of members of the family at weight n.
pub fn count(n: u64, spec: FamilySpec) -> Result<u64> {
    spec.validate()?;
    let mut total = 0u64;
    visit_runs(n, spec, &mut |_| total += 1);
    Ok(total)
}

/// Sum of the statistic over all members of the family at weight n.
pub fn aggregate(n: u64, spec: FamilySpec, stat: Statistic) -> Result<u64> {
    spec.validate()?;
    stat.validate()?;
    let mut total = 0u64;
    visit_runs(n, spec, &mut |runs| total += stat_from_runs(runs, stat));
    Ok(total)
}
