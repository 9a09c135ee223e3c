//! Exact Gaussian-integer arithmetic on the lattice ℤ[i].

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::error::{Error, Result};

/// Largest allowed |coordinate|: keeps a² + b² exact in a u64.
pub const COORD_LIMIT: i64 = (1 << 31) - 1;

/// Largest representable norm: 2·COORD_LIMIT².
pub const MAX_NORM: u64 = 2 * (COORD_LIMIT as u64).pow(2);

/// A Gaussian integer a + bi with both coordinates bounded by [`COORD_LIMIT`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GaussianInt {
    a: i64,
    b: i64,
}

impl GaussianInt {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        for v in [a, b] {
            if v.abs() > COORD_LIMIT {
                return Err(Error::CoordinateOutOfRange {
                    value: v,
                    limit: COORD_LIMIT,
                });
            }
        }
        Ok(Self { a, b })
    }

    /// Caller guarantees both coordinates are within bounds.
    pub(crate) fn new_unchecked(a: i64, b: i64) -> Self {
        debug_assert!(a.abs() <= COORD_LIMIT && b.abs() <= COORD_LIMIT);
        Self { a, b }
    }

    pub fn re(&self) -> i64 {
        self.a
    }

    pub fn im(&self) -> i64 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// True when the point lies on the real or imaginary axis.
    pub fn is_axis(&self) -> bool {
        self.a == 0 || self.b == 0
    }

    /// a² + b², exact. The coordinate bound makes overflow impossible.
    pub fn norm(&self) -> u64 {
        let x = self.a.unsigned_abs();
        let y = self.b.unsigned_abs();
        x * x + y * y
    }

    pub fn conj(&self) -> Self {
        Self {
            a: self.a,
            b: -self.b,
        }
    }

    /// Multiplication by i (a quarter turn counterclockwise).
    pub fn rotated_quarter(&self) -> Self {
        Self {
            a: -self.b,
            b: self.a,
        }
    }

    /// Exact complex product; out-of-bounds components are an error, never wrapped.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let (a1, b1) = (self.a as i128, self.b as i128);
        let (a2, b2) = (other.a as i128, other.b as i128);
        let re = a1 * a2 - b1 * b2;
        let im = a1 * b2 + a2 * b1;
        let lim = COORD_LIMIT as i128;
        if re.abs() > lim || im.abs() > lim {
            return Err(Error::MulOverflow { re, im });
        }
        Ok(Self {
            a: re as i64,
            b: im as i64,
        })
    }

    /// Orbit under multiplication by units {1, i, −1, −i} and conjugation.
    /// Size 8 generically; size 4 on the axes and diagonals.
    pub fn symmetry_orbit(&self) -> Result<BTreeSet<GaussianInt>> {
        if self.is_zero() {
            return Err(Error::ZeroInput {
                op: "symmetry_orbit",
            });
        }
        let mut orbit = BTreeSet::new();
        for start in [*self, self.conj()] {
            let mut g = start;
            for _ in 0..4 {
                orbit.insert(g);
                g = g.rotated_quarter();
            }
        }
        Ok(orbit)
    }

    /// Principal argument mapped into [0, 2π).
    pub fn arg(&self) -> Result<Angle> {
        if self.is_zero() {
            return Err(Error::ZeroInput { op: "arg" });
        }
        Ok(Angle::from_radians(
            (self.b as f64).atan2(self.a as f64),
        ))
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}i"),
            (a, b) if b < 0 => write!(f, "{a}{b}i"),
            (a, b) => write!(f, "{a}+{b}i"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(a: i64, b: i64) -> GaussianInt {
        GaussianInt::new(a, b).unwrap()
    }

    #[test]
    fn norm_examples() {
        assert_eq!(g(0, 0).norm(), 0);
        assert_eq!(g(1, 1).norm(), 2);
        assert_eq!(g(2, 1).norm(), 5);
        // extreme corner stays exact
        let m = COORD_LIMIT;
        assert_eq!(g(m, m).norm(), 2 * (m as u64) * (m as u64));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(g(1, 1).mul(&g(1, -1)).unwrap(), g(2, 0));
        assert_eq!(g(2, 1).mul(&g(2, -1)).unwrap(), g(5, 0));
        assert_eq!(g(0, 1).mul(&g(3, 0)).unwrap(), g(0, 3));
    }

    #[test]
    fn mul_overflow_is_error() {
        let big = g(COORD_LIMIT, 0);
        assert!(matches!(
            big.mul(&g(3, 0)),
            Err(Error::MulOverflow { .. })
        ));
    }

    #[test]
    fn out_of_range_coordinate_rejected() {
        assert!(GaussianInt::new(COORD_LIMIT + 1, 0).is_err());
        assert!(GaussianInt::new(0, -(COORD_LIMIT + 1)).is_err());
    }

    #[test]
    fn orbit_sizes() {
        let o = g(1, 1).symmetry_orbit().unwrap();
        let expect: BTreeSet<_> = [g(1, 1), g(-1, 1), g(-1, -1), g(1, -1)].into();
        assert_eq!(o, expect);

        let o = g(3, 0).symmetry_orbit().unwrap();
        let expect: BTreeSet<_> = [g(3, 0), g(0, 3), g(-3, 0), g(0, -3)].into();
        assert_eq!(o, expect);

        assert_eq!(g(2, 1).symmetry_orbit().unwrap().len(), 8);
    }

    #[test]
    fn orbit_of_zero_rejected() {
        assert!(matches!(
            g(0, 0).symmetry_orbit(),
            Err(Error::ZeroInput { .. })
        ));
    }

    #[test]
    fn arg_examples() {
        assert_eq!(g(3, 0).arg().unwrap().radians(), 0.0);
        assert_eq!(g(0, 5).arg().unwrap().radians(), std::f64::consts::FRAC_PI_2);
        assert_eq!(g(-1, 0).arg().unwrap().radians(), std::f64::consts::PI);
        assert!(matches!(g(0, 0).arg(), Err(Error::ZeroInput { .. })));
    }
}
