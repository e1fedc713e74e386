//! Exact bounds on the size of the census of `K_n`.
//!
//! The census totals sit between `3 * 2^(n choose 2) - 3` (choose two of the
//! colors, color freely, correct for the triple-counted monochromatic
//! colorings) and `7(n+1) * 2^(n choose 2)`. The upper bound rests on a
//! recurrence for the number of colorings that use all three colors; this
//! module evaluates those recurrences exactly in big integers so the chain
//! of inequalities can be verified term by term rather than trusted.
//!
//! Ratio columns in [`bound_table`] are decimal strings truncated (not
//! rounded) to two places; everything else is exact.

use std::collections::BTreeMap;

use num::bigint::BigUint;
use num::rational::BigRational;
use num::{BigInt, One, Zero};

use crate::error::{Error, Result};

/// Cap on `n` for every formula here; keeps `2^(n choose 2)` around a
/// couple hundred kilobits at the extreme.
pub const MAX_BOUND_VERTICES: u32 = 1024;

fn check_range(n: u32, min: u32, what: &str) -> Result<()> {
    if n < min {
        return Err(Error::invalid(format!("{what} needs n >= {min}, got {n}")));
    }
    if n > MAX_BOUND_VERTICES {
        return Err(Error::too_big(format!(
            "{what} supports n <= {MAX_BOUND_VERTICES}, got {n}"
        )));
    }
    Ok(())
}

fn choose2(n: u32) -> u64 {
    (n as u64) * (n as u64).saturating_sub(1) / 2
}

/// `2^(n choose 2)`, the number of colorings of `K_n` in two fixed colors.
pub fn two_power_edges(n: u32) -> BigUint {
    BigUint::one() << choose2(n)
}

/// Lower bound `3 * 2^(n choose 2) - 3` on the census total of `K_n`
/// (`n >= 2`): colorings avoiding at least one color, counted exactly.
pub fn lower_bound(n: u32) -> Result<BigUint> {
    check_range(n, 2, "the census lower bound")?;
    Ok(BigUint::from(3u32) * two_power_edges(n) - BigUint::from(3u32))
}

/// Upper bound `7(n+1) * 2^(n choose 2)` on the census total of `K_n`
/// (`n >= 2`).
pub fn upper_bound(n: u32) -> Result<BigUint> {
    check_range(n, 2, "the census upper bound")?;
    Ok(BigUint::from(7 * (n as u64 + 1)) * two_power_edges(n))
}

/// Exact number of census members of `K_n` using exactly two colors:
/// `3 * (2^(n choose 2) - 2)` for `n >= 3`, zero for `n = 2`. Two-colored
/// colorings are always rainbow-free, so this is pure counting.
pub fn exact_two_color_count(n: u32) -> Result<BigUint> {
    check_range(n, 2, "the two-color census count")?;
    Ok(BigUint::from(3u32) * (two_power_edges(n) - BigUint::from(2u32)))
}

/// Upper bounds on the number of census members of `K_n` that use all
/// three colors, obtained by iterating per-extension bounds from the base
/// `n = 3` (where no rainbow-free coloring can use three colors).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecurrenceBounds {
    /// Iterate using the exact two-color census at each step.
    pub tight: BigUint,
    /// Iterate that further relaxes the two-color census to `3 * 2^(n choose 2)`.
    pub relaxed: BigUint,
}

/// Evaluates both recurrence iterates at `n` (`n >= 3`).
///
/// Every three-colored member of `K_{m+1}` restricts on the first `m`
/// vertices to a two- or three-colored member of `K_m`. A two-colored base
/// admits at most `2^(m-1) + 1` extensions that reach a third color, and a
/// three-colored base at most `2^m + 3` extensions in total, so with `t(3) = 0`:
///
/// ```text
/// t(m+1) <= (2^(m-1) + 1) * (3 * (2^C(m) - 2)) + (2^m + 3) * t(m)
/// ```
///
/// The relaxed variant drops the `- 2` correction in the two-color census.
pub fn c3_recurrence_bound(n: u32) -> Result<RecurrenceBounds> {
    check_range(n, 3, "the three-color recurrence bound")?;
    let mut tight = BigUint::zero();
    let mut relaxed = BigUint::zero();
    for m in 3..n {
        let reach_third = (BigUint::one() << (m as u64 - 1)) + BigUint::one();
        let keep_three = (BigUint::one() << m as u64) + BigUint::from(3u32);
        let two_color_census = exact_two_color_count(m)?;
        let two_color_relaxed = BigUint::from(3u32) * two_power_edges(m);
        tight = &reach_third * two_color_census + &keep_three * tight;
        relaxed = reach_third * two_color_relaxed + keep_three * relaxed;
    }
    Ok(RecurrenceBounds { tight, relaxed })
}

/// The fully unrolled majorant `f` with `f(1) = f(2) = f(3) = 0` and
/// `f(m+1) = 3 * 2^m * 2^(m choose 2) + (2^m + 3) * f(m)` (`n >= 1`).
/// It dominates the relaxed recurrence iterate and stays below
/// `7n * 2^(n choose 2)` far beyond the range where censuses are
/// computable, which is what powers the closed-form upper bound.
pub fn f_recursion(n: u32) -> Result<BigUint> {
    check_range(n, 1, "the recurrence majorant")?;
    let mut f = BigUint::zero();
    for m in 3..n {
        let growth = BigUint::from(3u32) * (BigUint::one() << m as u64) * two_power_edges(m);
        let keep_three = (BigUint::one() << m as u64) + BigUint::from(3u32);
        f = growth + keep_three * f;
    }
    Ok(f)
}

/// The normalized majorant `k(n) = f(n) / 2^(n choose 2)` as an exact
/// rational (`n >= 1`).
pub fn k_value(n: u32) -> Result<BigRational> {
    let f = BigInt::from(f_recursion(n)?);
    let scale = BigInt::from(two_power_edges(n));
    Ok(BigRational::new(f, scale))
}

/// The closed-form majorant `7n * 2^(n choose 2)` for the three-colored
/// census count (`n >= 2`).
pub fn c3_claim_bound(n: u32) -> Result<BigUint> {
    check_range(n, 2, "the three-color closed-form bound")?;
    Ok(BigUint::from(7 * n as u64) * two_power_edges(n))
}

/// Whether the inductive step carrying the closed-form majorant from `n`
/// to `n + 1` holds, checked exactly (`n >= 4`):
///
/// ```text
/// 3 * (2^(n-1) + 1) * 2^C(n) + (2^n + 3) * 7n * 2^C(n) <= 7(n+1) * 2^C(n+1)
/// ```
pub fn induction_step_holds(n: u32) -> Result<bool> {
    check_range(n, 4, "the induction step")?;
    let scale = two_power_edges(n);
    let reach_third = (BigUint::one() << (n as u64 - 1)) + BigUint::one();
    let keep_three = (BigUint::one() << n as u64) + BigUint::from(3u32);
    let lhs = BigUint::from(3u32) * reach_third * &scale
        + keep_three * BigUint::from(7 * n as u64) * &scale;
    let rhs = BigUint::from(7 * (n as u64 + 1)) * two_power_edges(n + 1);
    Ok(lhs <= rhs)
}

/// `numerator / denominator` truncated toward zero to two decimal places,
/// e.g. `224 / 21 -> "10.66"`. The denominator must be nonzero.
pub fn truncated_ratio(numerator: &BigUint, denominator: &BigUint) -> Result<String> {
    if denominator.is_zero() {
        return Err(Error::invalid("ratio denominator must be nonzero".to_string()));
    }
    let scaled = numerator * BigUint::from(100u32) / denominator;
    let whole = &scaled / BigUint::from(100u32);
    let cents = &scaled % BigUint::from(100u32);
    Ok(format!("{whole}.{cents:02}"))
}

/// One row of the bounds table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundsRow {
    pub n: u32,
    pub lower: BigUint,
    pub upper: BigUint,
    /// Exact census total, where known.
    pub exact: Option<BigUint>,
    /// `upper / exact`, truncated to two decimals, where exact is known.
    pub upper_over_exact: Option<String>,
    /// `exact / lower`, truncated to two decimals, where exact is known.
    pub exact_over_lower: Option<String>,
}

/// Builds the bounds table for `2 <= n <= max_n`, attaching exact census
/// totals (and the two truncated ratio columns) for the sizes present in
/// `exact`.
pub fn bound_table(max_n: u32, exact: &BTreeMap<u32, BigUint>) -> Result<Vec<BoundsRow>> {
    check_range(max_n, 2, "the bounds table")?;
    let mut rows = Vec::with_capacity(max_n as usize - 1);
    for n in 2..=max_n {
        let lower = lower_bound(n)?;
        let upper = upper_bound(n)?;
        let exact_total = exact.get(&n).cloned();
        let (upper_over_exact, exact_over_lower) = match &exact_total {
            Some(total) => (
                Some(truncated_ratio(&upper, total)?),
                Some(truncated_ratio(total, &lower)?),
            ),
            None => (None, None),
        };
        rows.push(BoundsRow {
            n,
            lower,
            upper,
            exact: exact_total,
            upper_over_exact,
            exact_over_lower,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn closed_form_bounds_match_hand_values() {
        let expected: &[(u32, u64, u64)] = &[
            (2, 3, 42),
            (3, 21, 224),
            (4, 189, 2240),
            (5, 3069, 43008),
            (6, 98301, 1605632),
            (7, 6291453, 117440512),
            (8, 805306365, 16911433728),
        ];
        for &(n, lower, upper) in expected {
            assert_eq!(lower_bound(n).unwrap(), big(lower), "lower, n = {n}");
            assert_eq!(upper_bound(n).unwrap(), big(upper), "upper, n = {n}");
        }
        assert!(lower_bound(1).is_err());
        assert!(upper_bound(2000).is_err());
    }

    #[test]
    fn two_color_census_closed_form() {
        assert_eq!(exact_two_color_count(2).unwrap(), big(0));
        assert_eq!(exact_two_color_count(3).unwrap(), big(18));
        assert_eq!(exact_two_color_count(4).unwrap(), big(186));
        assert_eq!(exact_two_color_count(5).unwrap(), big(3066));
    }

    #[test]
    fn recurrence_iterates_match_hand_values() {
        let b3 = c3_recurrence_bound(3).unwrap();
        assert_eq!(b3.tight, big(0));
        assert_eq!(b3.relaxed, big(0));
        let b4 = c3_recurrence_bound(4).unwrap();
        assert_eq!(b4.tight, big(90));
        assert_eq!(b4.relaxed, big(120));
        let b5 = c3_recurrence_bound(5).unwrap();
        assert_eq!(b5.tight, big(3384));
        assert_eq!(b5.relaxed, big(4008));
        let b6 = c3_recurrence_bound(6).unwrap();
        assert_eq!(b6.tight, big(170562));
        assert_eq!(b6.relaxed, big(192504));
        for n in 3..=12 {
            let b = c3_recurrence_bound(n).unwrap();
            assert!(b.tight <= b.relaxed, "n = {n}");
        }
    }

    #[test]
    fn majorant_recursion_matches_hand_values() {
        let values: &[(u32, u64)] = &[
            (1, 0),
            (2, 0),
            (3, 0),
            (4, 192),
            (5, 6720),
            (6, 333504),
            (7, 28636224),
        ];
        for &(n, f) in values {
            assert_eq!(f_recursion(n).unwrap(), big(f), "n = {n}");
        }
    }

    #[test]
    fn normalized_majorant_is_exact() {
        assert_eq!(
            k_value(4).unwrap(),
            BigRational::from_integer(BigInt::from(3))
        );
        // 6720 / 2^10 = 105 / 16.
        assert_eq!(
            k_value(5).unwrap(),
            BigRational::new(BigInt::from(105), BigInt::from(16))
        );
    }

    #[test]
    fn ratio_strings_truncate_toward_zero() {
        let cases: &[(u64, u64, &str)] = &[
            (224, 21, "10.66"), // 10.666..., truncation not rounding
            (42, 3, "14.00"),
            (1, 3, "0.33"),
            (299, 100, "2.99"),
            (200, 100, "2.00"),
            (6129, 3069, "1.99"),
        ];
        for &(num, den, expected) in cases {
            assert_eq!(
                truncated_ratio(&big(num), &big(den)).unwrap(),
                expected,
                "{num}/{den}"
            );
        }
        assert!(truncated_ratio(&big(1), &big(0)).is_err());
    }

    #[test]
    fn induction_step_is_exact_and_holds_in_range() {
        assert!(induction_step_holds(4).unwrap());
        assert!(induction_step_holds(64).unwrap());
        assert!(induction_step_holds(3).is_err());
    }

    #[test]
    fn bound_table_attaches_ratios_where_exact_is_known() {
        let mut exact = BTreeMap::new();
        exact.insert(2, big(3));
        exact.insert(3, big(21));
        let rows = bound_table(4, &exact).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].upper_over_exact.as_deref(), Some("14.00"));
        assert_eq!(rows[0].exact_over_lower.as_deref(), Some("1.00"));
        assert_eq!(rows[1].upper_over_exact.as_deref(), Some("10.66"));
        assert_eq!(rows[1].exact_over_lower.as_deref(), Some("1.00"));
        assert_eq!(rows[2].exact, None);
        assert_eq!(rows[2].upper_over_exact, None);
        assert!(bound_table(1, &exact).is_err());
    }
}
