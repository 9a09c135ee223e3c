//! Constructive quotient search: produce an explicit Gaussian-prime quotient
//! γ/q inside a requested annular sector, or within ε of a complex target.
//!
//! The search mirrors the existence argument it implements: pick a magnitude
//! threshold M large enough that the π₃ asymptotic promises primes ≡ 3 (mod 4)
//! in (|γ|/R, |γ|/r), find the smallest Gaussian prime γ in the open sector
//! with norm in [M², 2M²), then sieve that interval for the actual q. If
//! either step comes up empty the norm window doubles and the loop retries.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::census::pi3_estimate;
use crate::census::scan::min_prime_in_annulus;
use crate::error::{Error, Result};
use crate::exact::cmp_norm_vs_scaled_square;
use crate::gaussian::{GaussianInt, MAX_NORM};
use crate::primality::{classify, is_prime, sieve_range_with};
use crate::region::{AnnularRegion, RationalComplex, Sector};

/// Safety factor over the bare "two primes in the interval" requirement.
const PI3_SAFETY: f64 = 4.0;

/// The norm window [W, 2W) doubles on every retry.
const WINDOW_GROWTH: u64 = 2;

/// Wide request sectors are narrowed to a centered sub-sector of this width
/// before scanning: the radial ratio alone fixes the magnitude threshold, and
/// a thin wedge at that magnitude already holds thousands of expected primes,
/// so scanning the full width would only burn the lattice budget.
const SEARCH_WIDTH_CAP: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchTrace {
    /// Norm windows examined (1 = found in the first window).
    pub iterations: u32,
    /// Magnitude threshold sqrt(W) of the last window tried.
    pub final_threshold: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuotientConfig {
    /// Window doublings before giving up with a budget error.
    pub iteration_cap: u32,
    /// Lattice budget for each sector scan.
    pub workload_budget: u64,
}

impl Default for QuotientConfig {
    fn default() -> Self {
        QuotientConfig {
            iteration_cap: 40,
            workload_budget: crate::census::DEFAULT_WORKLOAD_BUDGET,
        }
    }
}

/// A verified witness: gamma/q lies in the requested region, gamma is a
/// Gaussian prime, and q is a rational prime ≡ 3 (mod 4) (hence itself a
/// Gaussian prime).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientResult {
    pub gamma: GaussianInt,
    pub q: u64,
    pub value: RationalComplex,
    pub region: AnnularRegion,
    pub search_trace: SearchTrace,
}

/// The Gaussian prime with norm in [min_norm, max_norm) and argument
/// strictly inside the sector, of minimal norm; ties broken by smallest
/// argument, then smallest first coordinate. `None` when the window holds no
/// such prime.
pub fn find_prime_in_sector(
    s: &Sector,
    min_norm: u64,
    max_norm: u64,
    budget: u64,
) -> Result<Option<GaussianInt>> {
    if min_norm >= max_norm {
        return Err(Error::Domain {
            what: format!("need min_norm < max_norm, got [{min_norm}, {max_norm})"),
        });
    }
    if max_norm > MAX_NORM + 1 {
        return Err(Error::GuardExceeded {
            what: "prime search window",
            requested: max_norm,
            limit: MAX_NORM + 1,
        });
    }
    let estimated = (s.width() * (max_norm - min_norm) as f64 / 2.0) as u64;
    if estimated > budget {
        return Err(Error::BudgetExceeded {
            estimated,
            budget,
        });
    }
    Ok(min_prime_in_annulus(s, min_norm, max_norm))
}

/// Exact bracket check: (r·q)² < norm(γ) < (R·q)², settled without rounding.
fn brackets_exactly(norm: u64, q: u64, r: f64, big_r: f64) -> bool {
    cmp_norm_vs_scaled_square(norm, q, r) == Ordering::Greater
        && cmp_norm_vs_scaled_square(norm, q, big_r) == Ordering::Less
}

/// Smallest prime q ≡ 3 (mod 4) with r·q < |γ| < R·q, by sieving the
/// interval (|γ|/R, |γ|/r) and confirming each candidate exactly.
fn denominator_for(norm: u64, r: f64, big_r: f64) -> Result<Option<u64>> {
    let magnitude = (norm as f64).sqrt();
    let lo = (magnitude / big_r - 2.0).max(1.0);
    let hi = magnitude / r + 2.0;
    let mut start = lo as u64;
    let end = hi.ceil() as u64 + 1;
    let seg_len = 1 << 22;
    while start < end {
        let seg_hi = (start + seg_len).min(end);
        let seg = sieve_range_with(start.max(2), seg_hi, seg_len)?;
        for p in seg.primes() {
            if p % 4 == 3 && brackets_exactly(norm, p, r, big_r) {
                return Ok(Some(p));
            }
        }
        start = seg_hi;
    }
    Ok(None)
}

/// Initial magnitude threshold: the smallest doubling of a small floor for
/// which the π₃ asymptotic predicts at least [`PI3_SAFETY`] primes ≡ 3
/// (mod 4) in (M/R, M/r).
fn initial_threshold(r: f64, big_r: f64) -> f64 {
    let mut m = f64::max(4.0, 3.0 * big_r);
    while pi3_estimate(m / r) - pi3_estimate(m / big_r) < PI3_SAFETY && m < 1e18 {
        m *= 2.0;
    }
    m
}

/// Produce a verified Gaussian-prime quotient inside the region.
pub fn find_quotient(reg: &AnnularRegion, cfg: &QuotientConfig) -> Result<QuotientResult> {
    let (r, big_r) = (reg.r(), reg.big_r());
    let full = reg.sector(); // already open
    let narrowed;
    let sector = if full.width() > SEARCH_WIDTH_CAP {
        let margin = (full.width() - SEARCH_WIDTH_CAP) / 2.0;
        let alpha = Angle::from_radians(full.alpha().radians() + margin);
        narrowed = Sector::from_width(alpha, SEARCH_WIDTH_CAP, false)?;
        &narrowed
    } else {
        full
    };
    let m0 = initial_threshold(r, big_r);
    let mut window = (m0 * m0).min(MAX_NORM as f64 / 2.0) as u64;
    let mut trace = SearchTrace {
        iterations: 0,
        final_threshold: m0,
    };
    for _ in 0..cfg.iteration_cap {
        trace.iterations += 1;
        trace.final_threshold = (window as f64).sqrt();
        let upper = window.saturating_mul(WINDOW_GROWTH).min(MAX_NORM + 1);
        if let Some(gamma) = find_prime_in_sector(sector, window, upper, cfg.workload_budget)? {
            if let Some(q) = denominator_for(gamma.norm(), r, big_r)? {
                let value = RationalComplex::new(gamma, q)?;
                let result = QuotientResult {
                    gamma,
                    q,
                    value,
                    region: reg.clone(),
                    search_trace: trace,
                };
                if verify_quotient(&result) {
                    return Ok(result);
                }
                // An unverifiable candidate means the bracket was too tight
                // for this window; fall through and grow.
            }
        }
        if window >= MAX_NORM / 2 {
            break;
        }
        window = window.saturating_mul(WINDOW_GROWTH);
    }
    Err(Error::IterationCap {
        iterations: trace.iterations,
        final_threshold: trace.final_threshold,
    })
}

/// Approximate an arbitrary complex target: build an annular region contained
/// in the open ε-disk about z and search it.
///
/// For |z| <= ε/2 the region (|w| in (ε/4, ε/2), any quarter sector) already
/// lies within ε of z. Otherwise the sector half-width δθ = ε/(4(|z|+ε))
/// about arg z and magnitudes (|z|−ε/2, |z|+ε/2) give, for every w inside,
/// |w − z| <= ε/2 + (|z|+ε/2)·2δθ < ε.
pub fn approximate(zr: f64, zi: f64, eps: f64, cfg: &QuotientConfig) -> Result<QuotientResult> {
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::Domain {
            what: format!("approximation needs eps > 0, got {eps}"),
        });
    }
    if !(zr.is_finite() && zi.is_finite()) {
        return Err(Error::Domain {
            what: "target must be finite".into(),
        });
    }
    let magnitude = zr.hypot(zi);
    let region = if magnitude <= eps / 2.0 {
        let sector = Sector::from_width(Angle::ZERO, std::f64::consts::FRAC_PI_2, false)?;
        AnnularRegion::new(sector, eps / 4.0, eps / 2.0)?
    } else {
        let half_width = eps / (4.0 * (magnitude + eps));
        let arg = zi.atan2(zr);
        let alpha = Angle::from_radians(arg - half_width);
        let sector = Sector::from_width(alpha, 2.0 * half_width, false)?;
        AnnularRegion::new(sector, magnitude - eps / 2.0, magnitude + eps / 2.0)?
    };
    let result = find_quotient(&region, cfg)?;
    debug_assert!(result.value.dist_lt(zr, zi, eps));
    Ok(result)
}

/// Re-derive every invariant of a result from scratch: gamma is a Gaussian
/// prime, q is a rational prime ≡ 3 (mod 4), the stored value is gamma/q,
/// and the value lies strictly inside the region.
pub fn verify_quotient(res: &QuotientResult) -> bool {
    if !classify(&res.gamma).class.is_prime() {
        return false;
    }
    if !is_prime(res.q) || res.q % 4 != 3 {
        return false;
    }
    if res.value.numerator() != &res.gamma || res.value.denominator() != res.q {
        return false;
    }
    res.region.contains(&res.value).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quarter_region(r: f64, big_r: f64) -> AnnularRegion {
        let s = Sector::from_bounds(Angle::ZERO, Angle::parse("pi/2").unwrap(), false);
        AnnularRegion::new(s, r, big_r).unwrap()
    }

    #[test]
    fn find_prime_window_examples() {
        let s = Sector::from_bounds(Angle::ZERO, Angle::parse("pi/2").unwrap(), false);
        let g = find_prime_in_sector(&s, 2, 3, 1 << 20).unwrap().unwrap();
        assert_eq!((g.re(), g.im()), (1, 1));

        let s = Sector::from_bounds(Angle::ZERO, Angle::parse("pi/4").unwrap(), false);
        let g = find_prime_in_sector(&s, 2, 6, 1 << 20).unwrap().unwrap();
        assert_eq!((g.re(), g.im()), (2, 1));

        let s = Sector::from_bounds(
            Angle::parse("pi/31415").unwrap(),
            Angle::parse("2pi/31415").unwrap(),
            false,
        );
        assert_eq!(find_prime_in_sector(&s, 2, 10_000, 1 << 20).unwrap(), None);
    }

    #[test]
    fn find_prime_window_preconditions() {
        let s = Sector::from_bounds(Angle::ZERO, Angle::parse("pi/2").unwrap(), false);
        assert!(find_prime_in_sector(&s, 5, 5, 1 << 20).is_err());
        assert!(matches!(
            find_prime_in_sector(&s, 2, 1 << 40, 10).unwrap_err(),
            Error::BudgetExceeded { .. }
        ));
    }

    #[test]
    fn quotient_in_basic_region() {
        let reg = quarter_region(1.0, 2.0);
        let res = find_quotient(&reg, &QuotientConfig::default()).unwrap();
        assert!(verify_quotient(&res));
        assert!(res.search_trace.iterations >= 1);
        // division by the positive real q preserves the argument
        let value_arg = res.value.im().atan2(res.value.re());
        let gamma_arg = (res.gamma.im() as f64).atan2(res.gamma.re() as f64);
        assert!((value_arg - gamma_arg).abs() < 1e-12);
    }

    #[test]
    fn known_witness_verifies() {
        // (3+2i)/3: |.|² = 13/9 in (1, 4), arg = atan2(2,3) in (0, pi/2)
        let reg = quarter_region(1.0, 2.0);
        let gamma = GaussianInt::new(3, 2).unwrap();
        let res = QuotientResult {
            gamma,
            q: 3,
            value: RationalComplex::new(gamma, 3).unwrap(),
            region: reg.clone(),
            search_trace: SearchTrace {
                iterations: 0,
                final_threshold: 0.0,
            },
        };
        assert!(verify_quotient(&res));

        // 9 is not prime
        let bad = QuotientResult {
            q: 9,
            value: RationalComplex::new(gamma, 9).unwrap(),
            ..res.clone()
        };
        assert!(!verify_quotient(&bad));

        // 5 splits, so (5, 0) is not a Gaussian prime
        let five = GaussianInt::new(5, 0).unwrap();
        let bad = QuotientResult {
            gamma: five,
            value: RationalComplex::new(five, 3).unwrap(),
            ..res
        };
        assert!(!verify_quotient(&bad));
    }

    #[test]
    fn narrow_region_near_diagonal() {
        let alpha = Angle::from_radians(std::f64::consts::FRAC_PI_4 - 1e-3);
        let sector = Sector::from_width(alpha, 2e-3, false).unwrap();
        let reg = AnnularRegion::new(sector, 0.999, 1.001).unwrap();
        let res = find_quotient(&reg, &QuotientConfig::default()).unwrap();
        assert!(verify_quotient(&res));
    }

    #[test]
    fn approximate_examples() {
        let cfg = QuotientConfig::default();
        let res = approximate(1.0, 0.0, 0.5, &cfg).unwrap();
        assert!(verify_quotient(&res));
        assert!(res.value.dist_lt(1.0, 0.0, 0.5));

        let res = approximate(0.0, 0.0, 0.1, &cfg).unwrap();
        assert!(verify_quotient(&res));
        assert!(res.value.dist_lt(0.0, 0.0, 0.1));

        let res = approximate(0.0, 1.0, 0.5, &cfg).unwrap();
        assert!(verify_quotient(&res));
        assert!(res.value.dist_lt(0.0, 1.0, 0.5));
    }

    #[test]
    fn approximate_rejects_bad_eps() {
        let cfg = QuotientConfig::default();
        assert!(approximate(1.0, 0.0, 0.0, &cfg).is_err());
        assert!(approximate(1.0, 0.0, -1.0, &cfg).is_err());
    }

    #[test]
    fn region_precondition() {
        let s = Sector::from_bounds(Angle::ZERO, Angle::parse("pi/2").unwrap(), false);
        assert!(AnnularRegion::new(s, 2.0, 1.0).is_err());
    }

    #[test]
    fn rotation_equivariance() {
        let reg = quarter_region(1.0, 2.0);
        let res = find_quotient(&reg, &QuotientConfig::default()).unwrap();
        let rotated_sector = reg.sector().rotated_quarter();
        let rotated_reg = AnnularRegion::new(rotated_sector, 1.0, 2.0).unwrap();
        let rotated_gamma = res.gamma.rotated_quarter();
        let rotated = QuotientResult {
            gamma: rotated_gamma,
            q: res.q,
            value: RationalComplex::new(rotated_gamma, res.q).unwrap(),
            region: rotated_reg,
            search_trace: res.search_trace,
        };
        assert!(verify_quotient(&rotated));
    }
}
