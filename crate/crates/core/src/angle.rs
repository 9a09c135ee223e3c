//! Angles normalized to [0, 2π), with exact-intent tracking for rational
//! multiples of π so Figure-style sector bounds stay reproducible.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How the angle was given. Rational multiples of π keep their (p, q) pair so
/// boundary comparisons can re-evaluate cos/sin at the intended angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AngleOrigin {
    /// p·π/q with 0 <= p < 2q.
    PiMultiple { p: u64, q: u64 },
    Decimal,
}

/// An angle in radians, normalized to [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Angle {
    value: f64,
    origin: AngleOrigin,
}

fn normalize(v: f64) -> f64 {
    let r = v.rem_euclid(TAU);
    // rem_euclid can round up to the modulus itself
    if r >= TAU {
        0.0
    } else {
        r
    }
}

impl Angle {
    pub const ZERO: Angle = Angle {
        value: 0.0,
        origin: AngleOrigin::Decimal,
    };

    /// Decimal-origin angle. `v` must be finite; any value is normalized
    /// into [0, 2π).
    pub fn from_radians(v: f64) -> Angle {
        assert!(v.is_finite(), "angle must be finite");
        Angle {
            value: normalize(v),
            origin: AngleOrigin::Decimal,
        }
    }

    /// The angle p·π/q. p is reduced mod 2q so the value lands in [0, 2π).
    pub fn from_pi_multiple(p: u64, q: u64) -> Result<Angle> {
        if q == 0 {
            return Err(Error::Domain {
                what: "pi-multiple denominator must be positive".into(),
            });
        }
        let p = (p as u128 % (2 * q as u128)) as u64;
        let value = normalize(p as f64 * PI / q as f64);
        Ok(Angle {
            value,
            origin: AngleOrigin::PiMultiple { p, q },
        })
    }

    pub fn radians(&self) -> f64 {
        self.value
    }

    pub fn origin(&self) -> AngleOrigin {
        self.origin
    }

    /// (cos θ, sin θ) evaluated at the stored intent.
    ///
    /// Quarter-turn multiples of π produce the exact values 0 / ±1, and odd
    /// eighth-turn multiples share a single ±1/√2 magnitude. The cross
    /// product b·cosθ − a·sinθ therefore vanishes exactly for lattice points
    /// on axis and diagonal rays, the only rational-multiple-of-π rays that
    /// contain lattice points at all.
    pub fn cos_sin(&self) -> (f64, f64) {
        const D: f64 = std::f64::consts::FRAC_1_SQRT_2;
        match self.origin {
            AngleOrigin::PiMultiple { p, q } if (2 * p as u128).is_multiple_of(q as u128) => {
                match ((2 * p as u128 / q as u128) % 4) as u8 {
                    0 => (1.0, 0.0),
                    1 => (0.0, 1.0),
                    2 => (-1.0, 0.0),
                    _ => (0.0, -1.0),
                }
            }
            AngleOrigin::PiMultiple { p, q } if (4 * p as u128).is_multiple_of(q as u128) => {
                match ((4 * p as u128 / q as u128) % 8) as u8 {
                    1 => (D, D),
                    3 => (-D, D),
                    5 => (-D, -D),
                    _ => (D, -D),
                }
            }
            AngleOrigin::PiMultiple { p, q } => {
                let t = p as f64 * PI / q as f64;
                (t.cos(), t.sin())
            }
            AngleOrigin::Decimal => (self.value.cos(), self.value.sin()),
        }
    }

    /// This angle advanced by a quarter turn, preserving rational intent.
    pub fn plus_quarter(&self) -> Angle {
        match self.origin {
            AngleOrigin::PiMultiple { p, q } if q <= u64::MAX / 8 => {
                Angle::from_pi_multiple(2 * p + q, 2 * q).expect("q > 0")
            }
            _ => Angle::from_radians(self.value + std::f64::consts::FRAC_PI_2),
        }
    }

    /// Grammar: `pi/N`, `Kpi/N`, `Kpi`, or a decimal radian literal.
    pub fn parse(text: &str) -> Result<Angle> {
        let s = text.trim();
        let bad = || Error::AngleParse { token: s.into() };
        if s.is_empty() {
            return Err(bad());
        }
        if let Some(idx) = s.find("pi") {
            let (head, tail) = (&s[..idx], &s[idx + 2..]);
            let p: u64 = if head.is_empty() {
                1
            } else {
                head.parse().map_err(|_| bad())?
            };
            if p == 0 {
                return Err(bad());
            }
            let q: u64 = if tail.is_empty() {
                1
            } else {
                let rest = tail.strip_prefix('/').ok_or_else(bad)?;
                rest.parse().map_err(|_| bad())?
            };
            if q == 0 {
                return Err(bad());
            }
            return Angle::from_pi_multiple(p, q);
        }
        let v: f64 = s.parse().map_err(|_| bad())?;
        if !v.is_finite() {
            return Err(bad());
        }
        Ok(Angle::from_radians(v))
    }
}

impl FromStr for Angle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Angle> {
        Angle::parse(s)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.origin {
            AngleOrigin::PiMultiple { p: 0, .. } => write!(f, "0"),
            AngleOrigin::PiMultiple { p: 1, q: 1 } => write!(f, "pi"),
            AngleOrigin::PiMultiple { p, q: 1 } => write!(f, "{p}pi"),
            AngleOrigin::PiMultiple { p: 1, q } => write!(f, "pi/{q}"),
            AngleOrigin::PiMultiple { p, q } => write!(f, "{p}pi/{q}"),
            AngleOrigin::Decimal => write!(f, "{}", self.value),
        }
    }
}
