//! Brute-force verification of the identity catalog.
//!
//! Every identity is evaluated by computing each side along an independent
//! path: direct pruned enumeration on one side, filtered enumeration or a
//! statistic aggregate or an explicit cover on the other. Cover-backed
//! identities additionally check that the generated partitions tile the
//! target family exactly, so a passing report certifies the construction and
//! not just a count coincidence. Failures carry the first offending
//! partition when one exists.

use crate::beck_one;
use crate::beck_two;
use crate::cover::Decomposition;
use crate::error::{Error, Result};
use crate::exec;
use crate::families::{self, FamilySpec, Statistic};
use crate::gapfree::{self, Parity};
use crate::partition::Partition;

/// One identity instance from the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdentityId {
    /// Distinct partitions equinumerous with odd partitions.
    Euler,
    /// k-distinct partitions equinumerous with k-regular partitions.
    Glaisher(u64),
    /// Partitions with m values repeated k or more times equinumerous with
    /// partitions with m values divisible by k.
    Franklin(u64, u64),
    /// The one-divisible count equals the length surplus of k-regular over
    /// k-distinct partitions, divided by k - 1; checked through the cover.
    BeckOneGeneral(u64),
    /// The k = 2 triple: one even value, the length surplus, and one
    /// repeated value all agree.
    BeckOneK2Triple,
    /// The overloaded-multiplicity count equals the distinct-value surplus
    /// of k-distinct over k-regular partitions; checked through the cover.
    BeckTwoGeneral(u64),
    /// The k = 2 specialization of the distinct-value surplus identity.
    BeckTwoK2,
    /// Gap-free partitions counted by smallest parts over odd-length
    /// distinct partitions; checked through the odd cover.
    GapFreeOdd,
    /// The even-parity variant, which misses exactly the rectangles.
    GapFreeEven,
    /// The two smallest-part sums differ by the number of divisors of n.
    DivisorIdentity,
    /// One-divisible and one-repeated counts agree with the congruence
    /// aggregate E_k.
    FuTang(u64),
}

impl IdentityId {
    /// Stable identity name used in reports and on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            IdentityId::Euler => "euler",
            IdentityId::Glaisher(_) => "glaisher",
            IdentityId::Franklin(..) => "franklin",
            IdentityId::BeckOneGeneral(_) => "beck1",
            IdentityId::BeckOneK2Triple => "beck1-k2",
            IdentityId::BeckTwoGeneral(_) => "beck2",
            IdentityId::BeckTwoK2 => "beck2-k2",
            IdentityId::GapFreeOdd => "gapfree-odd",
            IdentityId::GapFreeEven => "gapfree-even",
            IdentityId::DivisorIdentity => "divisor",
            IdentityId::FuTang(_) => "fu-tang",
        }
    }

    /// The base parameter, for identities that take one.
    pub fn k(&self) -> Option<u64> {
        match *self {
            IdentityId::Glaisher(k)
            | IdentityId::Franklin(k, _)
            | IdentityId::BeckOneGeneral(k)
            | IdentityId::BeckTwoGeneral(k)
            | IdentityId::FuTang(k) => Some(k),
            _ => None,
        }
    }

    /// The count parameter, for the Franklin identity.
    pub fn m(&self) -> Option<u64> {
        match *self {
            IdentityId::Franklin(_, m) => Some(m),
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            IdentityId::Glaisher(k) | IdentityId::Franklin(k, _) if k == 0 => Err(
                Error::BadParams(format!("identity {} requires k >= 1", self.name())),
            ),
            IdentityId::BeckTwoGeneral(0) => {
                Err(Error::BadParams("identity beck2 requires k >= 1".into()))
            }
            IdentityId::BeckOneGeneral(k) | IdentityId::FuTang(k) if k < 2 => Err(
                Error::BadParams(format!("identity {} requires k >= 2", self.name())),
            ),
            _ => Ok(()),
        }
    }
}

/// The outcome of evaluating one identity at one weight. Both sides (three
/// for the triple identities) are reported even when they disagree;
/// `counterexample` carries the first partition that broke a cover
/// comparison, when the failure is attributable to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub n: u64,
    pub lhs: i64,
    pub rhs: i64,
    pub rhs2: Option<i64>,
    pub pass: bool,
    pub counterexample: Option<Partition>,
}

/// Number of divisors of n >= 1, by trial division up to the square root.
pub fn divisor_count(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut count = 0;
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            count += if i * i == n { 1 } else { 2 };
        }
        i += 1;
    }
    Ok(count)
}

/// Counts family members by filtering the full partition list through the
/// membership predicate, sharing nothing with the pruned enumerators.
fn count_filtered(n: u64, spec: FamilySpec) -> Result<u64> {
    let mut total = 0u64;
    families::for_each(n, FamilySpec::All, |p| {
        if families::contains(p, spec) {
            total += 1;
        }
    })?;
    Ok(total)
}

/// Compares the partitions generated by a cover against the target family:
/// no duplicates, nothing missing, nothing extra. Returns the first
/// offending partition on failure. `target` must be sorted.
fn check_cover(cover: &Decomposition, target: &[Partition]) -> (bool, Option<Partition>) {
    let mut generated: Vec<&Partition> = cover.generated().collect();
    generated.sort();
    for w in generated.windows(2) {
        if w[0] == w[1] {
            return (false, Some(w[0].clone()));
        }
    }
    let mut gen_iter = generated.iter().peekable();
    let mut tgt_iter = target.iter().peekable();
    loop {
        match (gen_iter.peek(), tgt_iter.peek()) {
            (None, None) => return (true, None),
            (Some(&&g), None) => return (false, Some(g.clone())),
            (None, Some(&t)) => return (false, Some(t.clone())),
            (Some(&&g), Some(&t)) => {
                if g == t {
                    gen_iter.next();
                    tgt_iter.next();
                } else {
                    return (false, Some(if g < t { g.clone() } else { t.clone() }));
                }
            }
        }
    }
}

fn report(
    id: IdentityId,
    n: u64,
    lhs: i64,
    rhs: i64,
    rhs2: Option<i64>,
    structural_ok: bool,
    counterexample: Option<Partition>,
) -> IdentityReport {
    let sides_agree = lhs == rhs && rhs2.is_none_or(|third| third == lhs);
    IdentityReport {
        id,
        n,
        lhs,
        rhs,
        rhs2,
        pass: structural_ok && sides_agree,
        counterexample,
    }
}

/// Evaluates one identity at one weight.
///
/// Weight 0 is accepted where the identity is defined there; the gap-free
/// and divisor identities require n >= 1.
pub fn evaluate(id: IdentityId, n: u64) -> Result<IdentityReport> {
    id.validate()?;
    match id {
        IdentityId::Euler => {
            let lhs = families::count(n, FamilySpec::KDistinct(2))?;
            let rhs = count_filtered(n, FamilySpec::KRegular(2))?;
            Ok(report(id, n, lhs as i64, rhs as i64, None, true, None))
        }
        IdentityId::Glaisher(k) => {
            let lhs = families::count(n, FamilySpec::KDistinct(k))?;
            let rhs = count_filtered(n, FamilySpec::KRegular(k))?;
            Ok(report(id, n, lhs as i64, rhs as i64, None, true, None))
        }
        IdentityId::Franklin(k, m) => {
            let lhs = families::count(n, FamilySpec::FranklinLeft(k, m))?;
            let rhs = count_filtered(n, FamilySpec::FranklinRight(k, m))?;
            Ok(report(id, n, lhs as i64, rhs as i64, None, true, None))
        }
        IdentityId::BeckOneGeneral(k) => {
            let cover = beck_one::decompose(n, k)?;
            let target = families::enumerate(n, FamilySpec::OneDivisible(k))?;
            let (cover_ok, counterexample) = check_cover(&cover, &target);
            let lhs = cover.generated_count() as i64;
            let length_surplus = families::aggregate(n, FamilySpec::KRegular(k), Statistic::Length)?
                as i64
                - families::aggregate(n, FamilySpec::KDistinct(k), Statistic::Length)? as i64;
            let divides = length_surplus.rem_euclid(k as i64 - 1) == 0;
            let rhs = length_surplus / (k as i64 - 1);
            let structural_ok = cover_ok && divides && lhs == target.len() as i64;
            Ok(report(id, n, lhs, rhs, None, structural_ok, counterexample))
        }
        IdentityId::BeckOneK2Triple => {
            let lhs = families::count(n, FamilySpec::OneDivisible(2))?;
            let rhs = families::aggregate(n, FamilySpec::KRegular(2), Statistic::Length)? as i64
                - families::aggregate(n, FamilySpec::KDistinct(2), Statistic::Length)? as i64;
            let rhs2 = count_filtered(n, FamilySpec::OneRepeated(2))?;
            Ok(report(
                id,
                n,
                lhs as i64,
                rhs,
                Some(rhs2 as i64),
                true,
                None,
            ))
        }
        IdentityId::BeckTwoGeneral(k) => {
            let cover = beck_two::decompose(n, k)?;
            let target = families::enumerate(n, FamilySpec::TFamily(k))?;
            let (cover_ok, counterexample) = check_cover(&cover, &target);
            let lhs = cover.generated_count() as i64;
            let rhs = families::aggregate(n, FamilySpec::KDistinct(k), Statistic::DistinctCount)?
                as i64
                - families::aggregate(n, FamilySpec::KRegular(k), Statistic::DistinctCount)? as i64;
            let structural_ok = cover_ok && lhs == target.len() as i64;
            Ok(report(id, n, lhs, rhs, None, structural_ok, counterexample))
        }
        IdentityId::BeckTwoK2 => {
            let lhs = count_filtered(n, FamilySpec::TFamily(2))?;
            let rhs = families::aggregate(n, FamilySpec::KDistinct(2), Statistic::DistinctCount)?
                as i64
                - families::aggregate(n, FamilySpec::KRegular(2), Statistic::DistinctCount)? as i64;
            Ok(report(id, n, lhs as i64, rhs, None, true, None))
        }
        IdentityId::GapFreeOdd => {
            let cover = gapfree::cover(n, Parity::Odd)?;
            let target = families::enumerate(n, FamilySpec::GapFree)?;
            let (cover_ok, counterexample) = check_cover(&cover, &target);
            let lhs = cover.generated_count() as i64;
            let rhs =
                families::aggregate(n, FamilySpec::DistinctOddLength, Statistic::Smallest)? as i64;
            let structural_ok = cover_ok && lhs == target.len() as i64;
            Ok(report(id, n, lhs, rhs, None, structural_ok, counterexample))
        }
        IdentityId::GapFreeEven => {
            let cover = gapfree::cover(n, Parity::Even)?;
            let target: Vec<Partition> = families::enumerate(n, FamilySpec::GapFree)?
                .into_iter()
                .filter(|p| p.distinct_count() > 1)
                .collect();
            let (cover_ok, counterexample) = check_cover(&cover, &target);
            let lhs = cover.generated_count() as i64;
            let rhs =
                families::aggregate(n, FamilySpec::DistinctEvenLength, Statistic::Smallest)? as i64;
            let structural_ok = cover_ok && lhs == target.len() as i64;
            Ok(report(id, n, lhs, rhs, None, structural_ok, counterexample))
        }
        IdentityId::DivisorIdentity => {
            let odd =
                families::aggregate(n, FamilySpec::DistinctOddLength, Statistic::Smallest)? as i64;
            let even =
                families::aggregate(n, FamilySpec::DistinctEvenLength, Statistic::Smallest)? as i64;
            let rhs = divisor_count(n)? as i64;
            Ok(report(id, n, odd - even, rhs, None, true, None))
        }
        IdentityId::FuTang(k) => {
            let lhs = families::count(n, FamilySpec::OneDivisible(k))?;
            let rhs = count_filtered(n, FamilySpec::OneRepeated(k))?;
            let congruent = families::aggregate(
                n,
                FamilySpec::KRegular(k),
                Statistic::PartsCongruentOneModK(k),
            )? as i64;
            let distinct =
                families::aggregate(n, FamilySpec::KDistinct(k), Statistic::DistinctCount)? as i64;
            Ok(report(
                id,
                n,
                lhs as i64,
                rhs as i64,
                Some(congruent - distinct),
                true,
                None,
            ))
        }
    }
}

/// Evaluates every identity at every weight 1..=n_max, identity-major, with
/// the weights of one identity checked in parallel.
pub fn run_suite(ids: &[IdentityId], n_max: u64) -> Result<Vec<IdentityReport>> {
    if n_max == 0 {
        return Err(Error::BadParams("n_max must be at least 1".into()));
    }
    let mut reports = Vec::with_capacity(ids.len() * n_max as usize);
    for &id in ids {
        id.validate()?;
        let batch = exec::map_indexed(n_max as usize, |i| evaluate(id, i as u64 + 1));
        for r in batch {
            reports.push(r?);
        }
    }
    Ok(reports)
}

/// The first failing report, if any.
pub fn first_failure(reports: &[IdentityReport]) -> Option<&IdentityReport> {
    reports.iter().find(|r| !r.pass)
}

/// The catalog with its default parameter grid: k up to 5 (4 for Franklin,
/// from 1 for the carry-merge cover) and Franklin counts up to 3.
pub fn default_catalog() -> Vec<IdentityId> {
    let mut ids = vec![IdentityId::Euler];
    ids.extend((2..=5).map(IdentityId::Glaisher));
    for k in 2..=4 {
        for m in 0..=3 {
            ids.push(IdentityId::Franklin(k, m));
        }
    }
    ids.extend((2..=5).map(IdentityId::BeckOneGeneral));
    ids.push(IdentityId::BeckOneK2Triple);
    ids.extend((1..=5).map(IdentityId::BeckTwoGeneral));
    ids.push(IdentityId::BeckTwoK2);
    ids.push(IdentityId::GapFreeOdd);
    ids.push(IdentityId::GapFreeEven);
    ids.push(IdentityId::DivisorIdentity);
    ids.extend((2..=5).map(IdentityId::FuTang));
    ids
}

/// Default verification depth: the k = 2 specializations run deeper because
/// their families stay small.
pub fn default_n_max(id: IdentityId) -> u64 {
    match id {
        IdentityId::Euler | IdentityId::BeckOneK2Triple | IdentityId::BeckTwoK2 => 60,
        _ => 40,
    }
}
