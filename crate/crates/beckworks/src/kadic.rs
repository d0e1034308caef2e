//! Base-k digit expansions and k-free factorizations.
//!
//! These small number-theoretic helpers drive the merge bijection and the
//! counting formulas: `digits` writes m = sum of b_j * k^(a_j) with nonzero
//! digits, `digit_sum` and `highest_exponent` read off the two statistics the
//! identities use, and `k_free_factor` strips every factor of k from n.

use crate::error::{Error, Result};

/// The base-k expansion of a positive integer, keeping only nonzero digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KadicDigits {
    /// The base k >= 2.
    pub base: u64,
    /// Pairs `(digit, exponent)` with digits in 1..=k-1 and exponents
    /// strictly decreasing, most significant first.
    pub terms: Vec<(u64, u64)>,
}

impl KadicDigits {
    /// Reassembles the expanded integer.
    pub fn value(&self) -> u64 {
        self.terms
            .iter()
            .map(|&(b, a)| b * self.base.pow(a as u32))
            .sum()
    }

    /// Sum of the digits.
    pub fn digit_sum(&self) -> u64 {
        self.terms.iter().map(|&(b, _)| b).sum()
    }

    /// The largest exponent, i.e. floor(log_k of the value).
    pub fn highest_exponent(&self) -> u64 {
        // terms is most significant first and never empty for m >= 1.
        self.terms[0].1
    }
}

fn check_base(k: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::BaseTooSmall { k });
    }
    Ok(())
}

fn check_positive(m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroInput);
    }
    Ok(m)
}

/// The nonzero digits of m written in base k, most significant first.
pub fn digits(m: u64, k: u64) -> Result<KadicDigits> {
    check_base(k)?;
    check_positive(m)?;
    let mut terms = Vec::new();
    let mut rest = m;
    let mut exponent = 0u64;
    while rest > 0 {
        let digit = rest % k;
        if digit != 0 {
            terms.push((digit, exponent));
        }
        rest /= k;
        exponent += 1;
    }
    terms.reverse();
    Ok(KadicDigits { base: k, terms })
}

/// Sum of the base-k digits of m, written p_k(m) in the counting formulas.
///
/// Computed by repeated division rather than through [`digits`] so the two
/// can check each other.
pub fn digit_sum(m: u64, k: u64) -> Result<u64> {
    check_base(k)?;
    check_positive(m)?;
    let mut sum = 0;
    let mut rest = m;
    while rest > 0 {
        sum += rest % k;
        rest /= k;
    }
    Ok(sum)
}

/// floor(log_k m), the exponent of the leading base-k digit of m.
pub fn highest_exponent(m: u64, k: u64) -> Result<u64> {
    check_base(k)?;
    check_positive(m)?;
    let mut rest = m;
    let mut exponent = 0;
    while rest >= k {
        rest /= k;
        exponent += 1;
    }
    Ok(exponent)
}

/// A positive integer written as k^exponent * cofactor with k not dividing
/// the cofactor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KFreeFactorization {
    /// The base k >= 2.
    pub base: u64,
    /// The exact power of k dividing the input.
    pub exponent: u64,
    /// The k-free part of the input.
    pub cofactor: u64,
}

impl KFreeFactorization {
    /// Reassembles the factored integer.
    pub fn value(&self) -> u64 {
        self.cofactor * self.base.pow(self.exponent as u32)
    }
}

/// Splits n as k^a * d with k not dividing d. The cofactor d is the k-free
/// factor of n; parts sharing it form one class in the carry-merge cover.
pub fn k_free_factor(n: u64, k: u64) -> Result<KFreeFactorization> {
    check_base(k)?;
    check_positive(n)?;
    let mut exponent = 0;
    let mut cofactor = n;
    while cofactor % k == 0 {
        cofactor /= k;
        exponent += 1;
    }
    Ok(KFreeFactorization {
        base: k,
        exponent,
        cofactor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digits_of_thirty_five_base_three() {
        // 35 = 27 + 2*3 + 2 = 1*3^3 + 0*3^2 + 2*3^1 + 2*3^0.
        let d = digits(35, 3).unwrap();
        assert_eq!(d.terms, vec![(1, 3), (2, 1), (2, 0)]);
        assert_eq!(d.value(), 35);
        assert_eq!(d.digit_sum(), 5);
        assert_eq!(d.highest_exponent(), 3);
    }

    #[test]
    fn digits_of_powers_have_one_term() {
        let d = digits(8, 2).unwrap();
        assert_eq!(d.terms, vec![(1, 3)]);
        let d = digits(9, 3).unwrap();
        assert_eq!(d.terms, vec![(1, 2)]);
    }

    #[test]
    fn digit_sum_and_highest_exponent_agree_with_digits() {
        for k in 2..=7 {
            for m in 1..=4096 {
                let d = digits(m, k).unwrap();
                assert_eq!(digit_sum(m, k).unwrap(), d.digit_sum());
                assert_eq!(highest_exponent(m, k).unwrap(), d.highest_exponent());
                assert_eq!(d.value(), m);
            }
        }
    }

    #[test]
    fn digit_statistics_match_hand_values() {
        assert_eq!(digit_sum(9, 3).unwrap(), 1);
        assert_eq!(digit_sum(7, 2).unwrap(), 3);
        assert_eq!(highest_exponent(9, 3).unwrap(), 2);
        assert_eq!(highest_exponent(8, 3).unwrap(), 1);
        assert_eq!(highest_exponent(1, 5).unwrap(), 0);
    }

    #[test]
    fn telescoping_floor_sum_counts_digit_deficit() {
        // sum over j >= 1 of floor(m / k^j) equals (m - digit_sum) / (k - 1).
        for k in [2u64, 3, 5, 7] {
            for m in 1..=2000 {
                let mut floors = 0;
                let mut power = k;
                while power <= m {
                    floors += m / power;
                    match power.checked_mul(k) {
                        Some(next) => power = next,
                        None => break,
                    }
                }
                assert_eq!(floors, (m - digit_sum(m, k).unwrap()) / (k - 1));
            }
        }
    }

    #[test]
    fn k_free_factor_strips_exactly_the_power_of_k() {
        let f = k_free_factor(24, 2).unwrap();
        assert_eq!((f.exponent, f.cofactor), (3, 3));
        let f = k_free_factor(9, 3).unwrap();
        assert_eq!((f.exponent, f.cofactor), (2, 1));
        let f = k_free_factor(7, 3).unwrap();
        assert_eq!((f.exponent, f.cofactor), (0, 7));
        for k in 2..=6 {
            for n in 1..=2000 {
                let f = k_free_factor(n, k).unwrap();
                assert_eq!(f.value(), n);
                assert_ne!(f.cofactor % k, 0);
            }
        }
    }

    #[test]
    fn zero_and_small_bases_are_rejected() {
        assert_eq!(digits(0, 2), Err(Error::ZeroInput));
        assert_eq!(digits(5, 1), Err(Error::BaseTooSmall { k: 1 }));
        assert_eq!(digits(5, 0), Err(Error::BaseTooSmall { k: 0 }));
        assert_eq!(digit_sum(0, 3), Err(Error::ZeroInput));
        assert_eq!(highest_exponent(0, 3), Err(Error::ZeroInput));
        assert_eq!(k_free_factor(0, 3), Err(Error::ZeroInput));
        assert_eq!(k_free_factor(6, 1), Err(Error::BaseTooSmall { k: 1 }));
    }
}
