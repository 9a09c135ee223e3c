//! Exact comparisons between integer lattice quantities and f64 thresholds.
//!
//! Every f64 is a dyadic rational m·2^e, so comparisons like
//! `norm(γ) <?> (x·q)²` can be settled without rounding by clearing the
//! power-of-two denominators into big integers.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};

/// Decompose a finite positive f64 into (mantissa, exponent) with
/// `x == m · 2^e` exactly.
fn decompose(x: f64) -> (u64, i64) {
    assert!(x.is_finite() && x > 0.0, "decompose needs a positive finite f64");
    let bits = x.to_bits();
    let exp_field = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    if exp_field == 0 {
        (frac, -1074) // subnormal
    } else {
        (frac | (1u64 << 52), exp_field - 1075)
    }
}

/// Compare the integer `n` against `(x·q)²` exactly, for positive finite `x`.
///
/// `Ordering::Less` means `n < (x·q)²`, i.e. `sqrt(n) < x·q`.
pub(crate) fn cmp_norm_vs_scaled_square(n: u64, q: u64, x: f64) -> Ordering {
    let (m, e) = decompose(x);
    let rhs = BigUint::from(m) * BigUint::from(m) * BigUint::from(q) * BigUint::from(q);
    let lhs = BigUint::from(n);
    let shift = 2 * e;
    if shift >= 0 {
        lhs.cmp(&(rhs << shift as u64))
    } else {
        (lhs << (-shift) as u64).cmp(&rhs)
    }
}

/// Largest u64 strictly below `x²`, i.e. the strict norm cap for |γ| < x.
/// (0 always qualifies since x > 0, so the result is total.)
pub(crate) fn norm_limit_below_square(x: f64) -> u64 {
    assert!(x.is_finite() && x > 0.0);
    let approx = x * x;
    let mut n = if approx >= u64::MAX as f64 {
        u64::MAX
    } else {
        approx as u64
    };
    // exact fix-up in both directions around the float estimate
    while n > 0 && cmp_norm_vs_scaled_square(n, 1, x) != Ordering::Less {
        n -= 1;
    }
    while n < u64::MAX && cmp_norm_vs_scaled_square(n + 1, 1, x) == Ordering::Less {
        n += 1;
    }
    n
}

/// Dyadic representation of a finite f64 as `num / 2^shift` with shift >= 0.
fn dyadic(x: f64) -> (BigInt, u64) {
    if x == 0.0 {
        return (BigInt::from(0), 0);
    }
    let neg = x < 0.0;
    let (m, e) = decompose(x.abs());
    let mut num = BigInt::from(m);
    let shift = if e >= 0 {
        num <<= e as u64;
        0
    } else {
        (-e) as u64
    };
    if neg {
        num = -num;
    }
    (num, shift)
}

/// Exact test of `|(a + bi)/q − (zr + zi·i)| < eps` for finite zr, zi and
/// positive finite eps. All quantities are dyadic rationals over q, so the
/// comparison clears denominators into BigInt arithmetic.
pub fn dist_lt_exact(a: i64, b: i64, q: u64, zr: f64, zi: f64, eps: f64) -> bool {
    assert!(q >= 1);
    assert!(zr.is_finite() && zi.is_finite());
    assert!(eps.is_finite() && eps > 0.0);

    let (nr, sr) = dyadic(zr);
    let (ni, si) = dyadic(zi);
    let (ne, se) = dyadic(eps);
    let s = sr.max(si);

    // d_re = (a·2^s − nr·2^(s−sr)·q) / (q·2^s), same for d_im
    let qi = BigInt::from(q);
    let dre = (BigInt::from(a) << s) - (nr << (s - sr)) * &qi;
    let dim = (BigInt::from(b) << s) - (ni << (s - si)) * &qi;
    let dist2_num = &dre * &dre + &dim * &dim;

    // compare dist2_num / (q·2^s)² < ne² / 2^(2·se)
    let lhs = dist2_num << (2 * se);
    let rhs = ((&ne * &ne) * (&qi * &qi)) << (2 * s);
    lhs < rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cmp_agrees_with_float_far_from_ties() {
        // n = 13, q = 3: |w| = sqrt(13)/3 ≈ 1.2019
        assert_eq!(cmp_norm_vs_scaled_square(13, 3, 1.0), Ordering::Greater);
        assert_eq!(cmp_norm_vs_scaled_square(13, 3, 2.0), Ordering::Less);
        // exact tie: n = 9, q = 3, x = 1 → (1·3)² = 9
        assert_eq!(cmp_norm_vs_scaled_square(9, 3, 1.0), Ordering::Equal);
        // x = 0.5 is exactly representable: (0.5·4)² = 4
        assert_eq!(cmp_norm_vs_scaled_square(4, 4, 0.5), Ordering::Equal);
        assert_eq!(cmp_norm_vs_scaled_square(5, 4, 0.5), Ordering::Greater);
    }

    #[test]
    fn norm_limit_examples() {
        assert_eq!(norm_limit_below_square(2.0), 3);
        assert_eq!(norm_limit_below_square(1.0), 0);
        assert_eq!(norm_limit_below_square(10.0), 99);
        assert_eq!(norm_limit_below_square(1e4), 10u64.pow(8) - 1);
        assert_eq!(norm_limit_below_square(0.5), 0);
        assert_eq!(norm_limit_below_square(5e5), 25 * 10u64.pow(10) - 1);
        // f64 sqrt(2) rounds up, so its exact square is a hair above 2
        assert_eq!(norm_limit_below_square(2f64.sqrt()), 2);
    }

    #[test]
    fn dist_examples() {
        // |(7+2i)/7 − 1| = 2/7 ≈ 0.2857
        assert!(dist_lt_exact(7, 2, 7, 1.0, 0.0, 0.5));
        assert!(!dist_lt_exact(7, 2, 7, 1.0, 0.0, 0.25));
        // boundary is strict: |(3+0i)/3 − 0| = 1, eps = 1 fails
        assert!(!dist_lt_exact(3, 0, 3, 0.0, 0.0, 1.0));
        assert!(dist_lt_exact(3, 0, 3, 0.0, 0.0, 1.0000001));
        // negative target components
        assert!(dist_lt_exact(-2, 7, 7, 0.0, 1.0, 0.5));
    }
}
