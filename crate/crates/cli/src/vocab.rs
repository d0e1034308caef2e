//! Name resolution for the open vocabularies: family names with their k and
//! m parameters, identity selections with parameter grids, and the inclusive
//! range syntax used by the verify flags.

use beckworks::families::FamilySpec;
use beckworks::verify::IdentityId;
use std::collections::BTreeSet;

/// Parses "A..B" (inclusive on both ends) or a single "N".
pub fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let bad = |_| format!("expected an integer or A..B range, got {text:?}");
    if let Some((a, b)) = text.split_once("..") {
        let lo: u64 = a.trim().parse().map_err(bad)?;
        let hi: u64 = b.trim().parse().map_err(bad)?;
        if lo > hi {
            return Err(format!("empty range {text:?}"));
        }
        Ok((lo, hi))
    } else {
        let v: u64 = text.trim().parse().map_err(bad)?;
        Ok((v, v))
    }
}

/// Maps a family name plus optional parameters to its spec. Parameterized
/// names require their flags and parameter-free names reject them, so a
/// stray --k is caught instead of silently ignored.
pub fn resolve_family(name: &str, k: Option<u64>, m: Option<u64>) -> Result<FamilySpec, String> {
    let plain = |spec: FamilySpec| -> Result<FamilySpec, String> {
        if k.is_some() {
            return Err(format!("family {name} does not take --k"));
        }
        if m.is_some() {
            return Err(format!("family {name} does not take --m"));
        }
        Ok(spec)
    };
    let with_k = |make: fn(u64) -> FamilySpec| -> Result<FamilySpec, String> {
        if m.is_some() {
            return Err(format!("family {name} does not take --m"));
        }
        match k {
            Some(k) => Ok(make(k)),
            None => Err(format!("family {name} requires --k")),
        }
    };
    let with_k_m = |make: fn(u64, u64) -> FamilySpec| -> Result<FamilySpec, String> {
        match (k, m) {
            (Some(k), Some(m)) => Ok(make(k, m)),
            _ => Err(format!("family {name} requires both --k and --m")),
        }
    };
    match name {
        "all" => plain(FamilySpec::All),
        "odd" => plain(FamilySpec::KRegular(2)),
        "distinct" => plain(FamilySpec::KDistinct(2)),
        "gapfree" => plain(FamilySpec::GapFree),
        "gapfree-one-block" => plain(FamilySpec::GapFreeOneBlock),
        "gapfree-odd-top" => plain(FamilySpec::GapFreeBottomOddTop),
        "gapfree-even-top" => plain(FamilySpec::GapFreeBottomEvenTop),
        "distinct-odd-length" => plain(FamilySpec::DistinctOddLength),
        "distinct-even-length" => plain(FamilySpec::DistinctEvenLength),
        "k-distinct" => with_k(FamilySpec::KDistinct),
        "k-regular" => with_k(FamilySpec::KRegular),
        "one-divisible" => with_k(FamilySpec::OneDivisible),
        "one-repeated" => with_k(FamilySpec::OneRepeated),
        "t-family" => with_k(FamilySpec::TFamily),
        "franklin-left" => with_k_m(FamilySpec::FranklinLeft),
        "franklin-right" => with_k_m(FamilySpec::FranklinRight),
        other => Err(format!("unknown family {other:?}")),
    }
}

const CATALOG_NAMES: [&str; 11] = [
    "euler",
    "glaisher",
    "franklin",
    "beck1",
    "beck1-k2",
    "beck2",
    "beck2-k2",
    "gapfree-odd",
    "gapfree-even",
    "divisor",
    "fu-tang",
];

/// Expands identity names into catalog instances, in catalog order.
///
/// An explicit --k (or --m) range replaces the default parameter grid for
/// every selected identity that takes the parameter; values below an
/// identity's validity floor are skipped, and a selection whose grid ends up
/// empty is an error, as is a range no selected identity consumes.
pub fn resolve_identities(
    names: &[String],
    k_range: Option<(u64, u64)>,
    m_range: Option<(u64, u64)>,
) -> Result<Vec<IdentityId>, String> {
    let mut wanted: BTreeSet<&str> = names.iter().map(String::as_str).collect();
    if wanted.is_empty() {
        wanted.insert("all");
    }
    for name in &wanted {
        if *name != "all" && !CATALOG_NAMES.contains(name) {
            return Err(format!("unknown identity {name:?}"));
        }
    }
    let all = wanted.contains("all");
    let selected = |name: &str| all || wanted.contains(name);

    let k_values = |floor: u64, default: (u64, u64), name: &str| -> Result<Vec<u64>, String> {
        let (lo, hi) = k_range.unwrap_or(default);
        let ks: Vec<u64> = (lo..=hi).filter(|&k| k >= floor).collect();
        if ks.is_empty() {
            return Err(format!(
                "identity {name} requires k >= {floor}; the requested range has no such value"
            ));
        }
        Ok(ks)
    };

    let mut ids = Vec::new();
    let mut uses_k = false;
    let mut uses_m = false;
    if selected("euler") {
        ids.push(IdentityId::Euler);
    }
    if selected("glaisher") {
        uses_k = true;
        ids.extend(
            k_values(1, (2, 5), "glaisher")?
                .into_iter()
                .map(IdentityId::Glaisher),
        );
    }
    if selected("franklin") {
        uses_k = true;
        uses_m = true;
        let (mlo, mhi) = m_range.unwrap_or((0, 3));
        for k in k_values(1, (2, 4), "franklin")? {
            for m in mlo..=mhi {
                ids.push(IdentityId::Franklin(k, m));
            }
        }
    }
    if selected("beck1") {
        uses_k = true;
        ids.extend(
            k_values(2, (2, 5), "beck1")?
                .into_iter()
                .map(IdentityId::BeckOneGeneral),
        );
    }
    if selected("beck1-k2") {
        ids.push(IdentityId::BeckOneK2Triple);
    }
    if selected("beck2") {
        uses_k = true;
        ids.extend(
            k_values(1, (1, 5), "beck2")?
                .into_iter()
                .map(IdentityId::BeckTwoGeneral),
        );
    }
    if selected("beck2-k2") {
        ids.push(IdentityId::BeckTwoK2);
    }
    if selected("gapfree-odd") {
        ids.push(IdentityId::GapFreeOdd);
    }
    if selected("gapfree-even") {
        ids.push(IdentityId::GapFreeEven);
    }
    if selected("divisor") {
        ids.push(IdentityId::DivisorIdentity);
    }
    if selected("fu-tang") {
        uses_k = true;
        ids.extend(
            k_values(2, (2, 5), "fu-tang")?
                .into_iter()
                .map(IdentityId::FuTang),
        );
    }

    if k_range.is_some() && !uses_k {
        return Err("--k applies to none of the selected identities".into());
    }
    if m_range.is_some() && !uses_m {
        return Err("--m applies to none of the selected identities".into());
    }
    Ok(ids)
}

/// Reads the BECKWORKS_THREADS cap, valid between 1 and 512.
pub fn thread_cap_from_env() -> Result<Option<usize>, String> {
    match std::env::var("BECKWORKS_THREADS") {
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err("BECKWORKS_THREADS is not valid unicode".into())
        }
        Ok(raw) => {
            let cap: usize = raw.trim().parse().map_err(|_| {
                format!("BECKWORKS_THREADS must be an integer in 1..=512, got {raw:?}")
            })?;
            if !(1..=512).contains(&cap) {
                return Err(format!("BECKWORKS_THREADS must be in 1..=512, got {cap}"));
            }
            Ok(Some(cap))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_parse_inclusively() {
        assert_eq!(parse_range("2..4"), Ok((2, 4)));
        assert_eq!(parse_range("3"), Ok((3, 3)));
        assert_eq!(parse_range("0..0"), Ok((0, 0)));
        assert!(parse_range("4..2").is_err());
        assert!(parse_range("").is_err());
        assert!(parse_range("2..").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn family_names_bind_their_parameters() {
        assert_eq!(
            resolve_family("odd", None, None),
            Ok(FamilySpec::KRegular(2))
        );
        assert_eq!(
            resolve_family("t-family", Some(3), None),
            Ok(FamilySpec::TFamily(3))
        );
        assert_eq!(
            resolve_family("franklin-left", Some(3), Some(2)),
            Ok(FamilySpec::FranklinLeft(3, 2))
        );
        assert!(resolve_family("odd", Some(2), None).is_err());
        assert!(resolve_family("k-distinct", None, None).is_err());
        assert!(resolve_family("k-distinct", Some(2), Some(1)).is_err());
        assert!(resolve_family("franklin-left", Some(3), None).is_err());
        assert!(resolve_family("podd", None, None).is_err());
    }

    #[test]
    fn identity_selection_expands_the_default_grid() {
        let ids = resolve_identities(&[], None, None).unwrap();
        assert_eq!(ids.len(), 35);
        assert_eq!(ids[0], IdentityId::Euler);
        assert_eq!(*ids.last().unwrap(), IdentityId::FuTang(5));
    }

    #[test]
    fn explicit_ranges_replace_the_grid() {
        let ids = resolve_identities(&["glaisher".into()], Some((2, 3)), None).unwrap();
        assert_eq!(ids, [IdentityId::Glaisher(2), IdentityId::Glaisher(3)]);
        let ids = resolve_identities(&["franklin".into()], Some((3, 3)), Some((1, 2))).unwrap();
        assert_eq!(
            ids,
            [IdentityId::Franklin(3, 1), IdentityId::Franklin(3, 2)]
        );
        // Floor skipping: beck2 admits k = 1, beck1 does not.
        let ids = resolve_identities(&["beck2".into()], Some((1, 2)), None).unwrap();
        assert_eq!(
            ids,
            [IdentityId::BeckTwoGeneral(1), IdentityId::BeckTwoGeneral(2)]
        );
        assert!(resolve_identities(&["beck1".into()], Some((1, 1)), None).is_err());
    }

    #[test]
    fn stray_parameters_and_unknown_names_are_rejected() {
        assert!(resolve_identities(&["euler".into()], Some((2, 3)), None).is_err());
        assert!(resolve_identities(&["divisor".into()], None, Some((0, 1))).is_err());
        assert!(resolve_identities(&["euler2".into()], None, None).is_err());
        assert!(resolve_identities(&["glaisher".into()], Some((0, 0)), None).is_err());
    }
}
