//! Sectors, annular regions, and exact membership predicates.
//!
//! Angular comparisons run in double precision with a 1e-12 radian guard
//! band; a point inside the guard band of a bound is classified by the sign
//! of the exactly-evaluated cross product b·cosθ − a·sinθ, with cosθ/sinθ
//! taken from the bound's stored intent. Magnitude comparisons on rational
//! points are exact (see `exact`).

use std::cmp::Ordering;
use std::f64::consts::TAU;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::exact::cmp_norm_vs_scaled_square;
use crate::gaussian::GaussianInt;

/// Guard band (radians) inside which boundary membership is decided exactly.
pub const ANGLE_GUARD: f64 = 1e-12;

/// Where a lattice point sits relative to a sector's two bounding rays.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngularPosition {
    Outside,
    Interior,
    OnAlpha,
    OnBeta,
}

/// An angular interval of positive width up to 2π, anchored at `alpha`.
/// Wrap-around sectors are expressed by the width, not a second angle.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sector {
    alpha: Angle,
    beta: Angle,
    width: f64,
    inclusive: bool,
}

impl Sector {
    /// Sector from two bounding angles. A zero angular difference is read as
    /// the full circle (width 2π).
    pub fn from_bounds(alpha: Angle, beta: Angle, inclusive: bool) -> Sector {
        let mut width = (beta.radians() - alpha.radians()).rem_euclid(TAU);
        if width == 0.0 {
            width = TAU;
        }
        Sector {
            alpha,
            beta,
            width,
            inclusive,
        }
    }

    /// Sector from an anchor and a width in (0, 2π].
    pub fn from_width(alpha: Angle, width: f64, inclusive: bool) -> Result<Sector> {
        if !(width > 0.0 && width <= TAU) {
            return Err(Error::Domain {
                what: format!("sector width must be in (0, 2*pi], got {width}"),
            });
        }
        let beta = Angle::from_radians(alpha.radians() + width);
        Ok(Sector {
            alpha,
            beta,
            width,
            inclusive,
        })
    }

    pub fn alpha(&self) -> &Angle {
        &self.alpha
    }

    pub fn beta(&self) -> &Angle {
        &self.beta
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn inclusive(&self) -> bool {
        self.inclusive
    }

    pub fn is_full_circle(&self) -> bool {
        self.width == TAU
    }

    /// The same sector with both bounds advanced a quarter turn.
    pub fn rotated_quarter(&self) -> Sector {
        Sector {
            alpha: self.alpha.plus_quarter(),
            beta: self.beta.plus_quarter(),
            width: self.width,
            inclusive: self.inclusive,
        }
    }

    pub fn with_inclusive(&self, inclusive: bool) -> Sector {
        Sector {
            inclusive,
            ..self.clone()
        }
    }

    /// Position of a nonzero lattice point relative to the bounding rays.
    pub fn position(&self, g: &GaussianInt) -> Result<AngularPosition> {
        if g.is_zero() {
            return Err(Error::ZeroInput {
                op: "sector position",
            });
        }
        Ok(angular_position(
            &self.alpha,
            &self.beta,
            self.width,
            g.re(),
            g.im(),
        ))
    }

    /// Membership honoring the inclusive flag; bounds resolved exactly inside
    /// the guard band.
    pub fn contains(&self, g: &GaussianInt) -> Result<bool> {
        Ok(match self.position(g)? {
            AngularPosition::Interior => true,
            AngularPosition::OnAlpha | AngularPosition::OnBeta => self.inclusive,
            AngularPosition::Outside => false,
        })
    }
}

impl fmt::Display for Sector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = if self.inclusive { ('[', ']') } else { ('(', ')') };
        write!(f, "{open}{}, {}{close}", self.alpha, self.beta)
    }
}

/// Sign of the cross product of the point with the ray direction, i.e. which
/// side of the ray's line the point falls on. Positive = counterclockwise.
fn ray_side(bound: &Angle, a: i64, b: i64) -> Ordering {
    let (c, s) = bound.cos_sin();
    let cross = b as f64 * c - a as f64 * s;
    cross.partial_cmp(&0.0).expect("finite cross product")
}

/// True when the point lies exactly on the ray (not its opposite).
fn on_ray(bound: &Angle, a: i64, b: i64) -> bool {
    if ray_side(bound, a, b) != Ordering::Equal {
        return false;
    }
    let (c, s) = bound.cos_sin();
    a as f64 * c + b as f64 * s > 0.0
}

/// Core angular classification shared by sectors and scan wedges.
/// `width` is the angular extent from `alpha` to `beta` going counterclockwise.
pub(crate) fn angular_position(
    alpha: &Angle,
    beta: &Angle,
    width: f64,
    a: i64,
    b: i64,
) -> AngularPosition {
    let theta = (b as f64).atan2(a as f64).rem_euclid(TAU);
    let d = (theta - alpha.radians()).rem_euclid(TAU);

    let near_alpha = d <= ANGLE_GUARD || d >= TAU - ANGLE_GUARD;
    if near_alpha {
        if on_ray(alpha, a, b) {
            return AngularPosition::OnAlpha;
        }
        // full circle: everything off the anchor ray is interior
        if width >= TAU {
            return AngularPosition::Interior;
        }
        return match ray_side(alpha, a, b) {
            Ordering::Greater => AngularPosition::Interior,
            _ => AngularPosition::Outside,
        };
    }
    if width >= TAU {
        return AngularPosition::Interior;
    }
    if (d - width).abs() <= ANGLE_GUARD {
        if on_ray(beta, a, b) {
            return AngularPosition::OnBeta;
        }
        return match ray_side(beta, a, b) {
            Ordering::Less => AngularPosition::Interior,
            _ => AngularPosition::Outside,
        };
    }
    if d < width {
        AngularPosition::Interior
    } else {
        AngularPosition::Outside
    }
}

/// Open annular sector {α < arg z < β, r < |z| < R}: the quotient search's
/// target region. The stored sector is forced open (strict bounds).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnularRegion {
    sector: Sector,
    r: f64,
    big_r: f64,
}

impl AnnularRegion {
    pub fn new(sector: Sector, r: f64, big_r: f64) -> Result<AnnularRegion> {
        if !(r.is_finite() && big_r.is_finite() && 0.0 < r && r < big_r) {
            return Err(Error::Domain {
                what: format!("annular region needs 0 < r < R, got r={r}, R={big_r}"),
            });
        }
        Ok(AnnularRegion {
            sector: sector.with_inclusive(false),
            r,
            big_r,
        })
    }

    pub fn sector(&self) -> &Sector {
        &self.sector
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn big_r(&self) -> f64 {
        self.big_r
    }

    /// Strict membership of an exact rational point. The magnitude test is
    /// exact: norm(numerator) is compared against (r·q)² and (R·q)² without
    /// floating evaluation.
    pub fn contains(&self, w: &RationalComplex) -> Result<bool> {
        if w.numerator().is_zero() {
            return Err(Error::ZeroInput {
                op: "region membership",
            });
        }
        let n = w.numerator().norm();
        let q = w.denominator();
        if cmp_norm_vs_scaled_square(n, q, self.r) != Ordering::Greater {
            return Ok(false);
        }
        if cmp_norm_vs_scaled_square(n, q, self.big_r) != Ordering::Less {
            return Ok(false);
        }
        // q is a positive real, so arg(w) = arg(numerator)
        Ok(self.sector.position(w.numerator())? == AngularPosition::Interior)
    }
}

impl fmt::Display for AnnularRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{arg in ({}, {}), |z| in ({}, {})}}",
            self.sector.alpha(),
            self.sector.beta(),
            self.r,
            self.big_r
        )
    }
}

/// The exact value (a + bi)/q with a positive integer denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalComplex {
    numerator: GaussianInt,
    denominator: u64,
}

impl RationalComplex {
    pub fn new(numerator: GaussianInt, denominator: u64) -> Result<RationalComplex> {
        if denominator == 0 {
            return Err(Error::Domain {
                what: "rational complex denominator must be >= 1".into(),
            });
        }
        Ok(RationalComplex {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &GaussianInt {
        &self.numerator
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    pub fn re(&self) -> f64 {
        self.numerator.re() as f64 / self.denominator as f64
    }

    pub fn im(&self) -> f64 {
        self.numerator.im() as f64 / self.denominator as f64
    }

    /// Exact test of |self − (zr + zi·i)| < eps.
    pub fn dist_lt(&self, zr: f64, zi: f64, eps: f64) -> bool {
        crate::exact::dist_lt_exact(
            self.numerator.re(),
            self.numerator.im(),
            self.denominator,
            zr,
            zi,
            eps,
        )
    }
}

impl fmt::Display for RationalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/{}", self.numerator, self.denominator)
    }
}
