//! Rational-prime machinery and the Gaussian-prime classifier.
//!
//! A nonzero Gaussian integer is prime exactly when it is a unit multiple of
//! a rational prime p ≡ 3 (mod 4) sitting on an axis (inert case), or when
//! its norm a² + b² is a rational prime (ramified for norm 2, split
//! otherwise).

mod miller_rabin;
mod sieve;

pub use miller_rabin::is_prime;
pub use sieve::{
    pi3, pi3_with, prime_3mod4_in, prime_3mod4_in_with, sieve_range, sieve_range_with,
    SieveSegment, DEFAULT_SEGMENT_LEN, INTERVAL_GUARD, PI3_GUARD,
};
pub(crate) use sieve::count_mod4_up_to;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::GaussianInt;

/// Largest norm the trial-division oracle will accept.
pub const ORACLE_NORM_LIMIT: u64 = 100_000_000;

/// Classification outcome for a Gaussian integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimeClass {
    Zero,
    Unit,
    Ramified,
    Inert,
    Split,
    Composite,
}

impl PrimeClass {
    pub fn is_prime(&self) -> bool {
        matches!(self, PrimeClass::Ramified | PrimeClass::Inert | PrimeClass::Split)
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            PrimeClass::Zero => "zero",
            PrimeClass::Unit => "unit",
            PrimeClass::Ramified => "ramified",
            PrimeClass::Inert => "inert",
            PrimeClass::Split => "split",
            PrimeClass::Composite => "composite",
        }
    }
}

impl fmt::Display for PrimeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence for a classification: either a Gaussian divisor or the rational
/// prime behind the tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Witness {
    Factor(GaussianInt),
    Prime(u64),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Factor(g) => write!(f, "{g}"),
            Witness::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// A class tag plus the witness explaining it, when cheaply available.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub class: PrimeClass,
    pub witness: Option<Witness>,
}

impl Classification {
    fn new(class: PrimeClass, witness: Option<Witness>) -> Self {
        Classification { class, witness }
    }
}

/// Fast Gaussian-primality predicate on raw coordinates (no witness work).
pub(crate) fn gaussian_prime_raw(a: i64, b: i64) -> bool {
    if a == 0 || b == 0 {
        let p = a.unsigned_abs() + b.unsigned_abs();
        return p % 4 == 3 && is_prime(p);
    }
    let (x, y) = (a.unsigned_abs(), b.unsigned_abs());
    is_prime(x * x + y * y)
}

/// True iff the classification tag is ramified, split, or inert.
pub fn is_gaussian_prime(g: &GaussianInt) -> bool {
    gaussian_prime_raw(g.re(), g.im())
}

/// Smallest prime factor by trial division; `n` must be composite and odd.
fn least_odd_factor(n: u64) -> u64 {
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Find c with c² ≡ −1 (mod p) for a prime p ≡ 1 (mod 4), then run the
/// Euclidean descent: the first remainder below √p is one leg of the
/// two-squares representation of p.
fn two_squares(p: u64) -> GaussianInt {
    debug_assert!(p % 4 == 1 && is_prime(p));
    let pow_mod = |mut a: u64, mut e: u64| -> u64 {
        let mut acc: u64 = 1;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = (acc as u128 * a as u128 % p as u128) as u64;
            }
            a = (a as u128 * a as u128 % p as u128) as u64;
            e >>= 1;
        }
        acc
    };
    let mut c = 0;
    for a in 2.. {
        if pow_mod(a, (p - 1) / 2) == p - 1 {
            c = pow_mod(a, (p - 1) / 4);
            break;
        }
    }
    let root = p.isqrt();
    let (mut u, mut v) = (p, c);
    while v > root {
        let t = u % v;
        u = v;
        v = t;
    }
    let x = v;
    let y = (p - x * x).isqrt();
    debug_assert_eq!(x * x + y * y, p);
    GaussianInt::new_unchecked(x as i64, y as i64)
}

/// Full classification with a witness when one is cheap to produce.
pub fn classify(g: &GaussianInt) -> Classification {
    use PrimeClass::*;
    let n = g.norm();
    if n == 0 {
        return Classification::new(Zero, None);
    }
    if n == 1 {
        return Classification::new(Unit, None);
    }
    if n == 2 {
        return Classification::new(Ramified, Some(Witness::Prime(2)));
    }
    if g.is_axis() {
        let p = g.re().unsigned_abs() + g.im().unsigned_abs();
        if p % 4 == 3 && is_prime(p) {
            return Classification::new(Inert, Some(Witness::Prime(p)));
        }
        let witness = if p.is_multiple_of(2) {
            Some(Witness::Factor(GaussianInt::new_unchecked(1, 1)))
        } else if is_prime(p) {
            // p ≡ 1 (mod 4): p itself splits
            Some(Witness::Factor(two_squares(p)))
        } else {
            Some(Witness::Prime(least_odd_factor(p)))
        };
        return Classification::new(Composite, witness);
    }
    if is_prime(n) {
        return Classification::new(Split, Some(Witness::Prime(n)));
    }
    let witness = n.is_multiple_of(2).then(|| Witness::Factor(GaussianInt::new_unchecked(1, 1)));
    Classification::new(Composite, witness)
}

/// Independent oracle: classify by exhaustive search for a Gaussian divisor
/// with norm in (1, sqrt(norm)], using exact division only. Never consults
/// `is_prime`, so agreement with `classify` is two-sided evidence.
pub fn trial_divide_zi(g: &GaussianInt) -> Result<Classification> {
    use PrimeClass::*;
    let n = g.norm();
    if n > ORACLE_NORM_LIMIT {
        return Err(Error::OracleScale {
            norm: n,
            limit: ORACLE_NORM_LIMIT,
        });
    }
    if n == 0 {
        return Ok(Classification::new(Zero, None));
    }
    if n == 1 {
        return Ok(Classification::new(Unit, None));
    }
    let (a, b) = (g.re(), g.im());
    let max_divisor_norm = n.isqrt();
    let x_max = max_divisor_norm.isqrt() as i64;
    for x in 1..=x_max {
        let rem = max_divisor_norm - (x * x) as u64;
        let y_max = rem.isqrt() as i64;
        for y in 0..=y_max {
            let d = (x * x + y * y) as u64;
            if d < 2 {
                continue;
            }
            // (a+bi)/(x+yi) is a Gaussian integer iff d divides both parts
            // of (a+bi)(x−yi)
            let re = a * x + b * y;
            let im = b * x - a * y;
            if re.rem_euclid(d as i64) == 0 && im.rem_euclid(d as i64) == 0 {
                return Ok(Classification::new(
                    Composite,
                    Some(Witness::Factor(GaussianInt::new_unchecked(x, y))),
                ));
            }
        }
    }
    // no proper divisor: prime; the tag follows from the shape alone
    if n == 2 {
        return Ok(Classification::new(Ramified, Some(Witness::Prime(2))));
    }
    if g.is_axis() {
        let p = a.unsigned_abs() + b.unsigned_abs();
        return Ok(Classification::new(Inert, Some(Witness::Prime(p))));
    }
    Ok(Classification::new(Split, Some(Witness::Prime(n))))
}
