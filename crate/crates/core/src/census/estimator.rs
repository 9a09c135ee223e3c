//! Main-term estimator: the logarithmic integral from 2 and the
//! sector-count / π₃ asymptotics built on it.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::region::Sector;

/// Quadrature configuration. The lower integration limit is fixed at 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EstimatorConfig {
    rel_tol: f64,
}

impl EstimatorConfig {
    /// Tolerances are accepted in (0, 1e-3]; values below 1e-14 are clamped
    /// to what f64 quadrature can actually deliver.
    pub fn new(rel_tol: f64) -> Result<Self> {
        if !(rel_tol.is_finite() && rel_tol > 0.0 && rel_tol <= 1e-3) {
            return Err(Error::Domain {
                what: format!("quadrature tolerance must be in (0, 1e-3], got {rel_tol}"),
            });
        }
        Ok(EstimatorConfig {
            rel_tol: rel_tol.max(1e-14),
        })
    }

    pub fn rel_tol(&self) -> f64 {
        self.rel_tol
    }
}

impl Default for EstimatorConfig {
    fn default() -> Self {
        EstimatorConfig { rel_tol: 1e-9 }
    }
}

/// 40-point Gauss–Legendre nodes/weights on [-1, 1], built once by Newton
/// iteration on the Legendre polynomial.
fn gauss_legendre_40() -> &'static [(f64, f64)] {
    static NODES: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    NODES.get_or_init(|| {
        const N: usize = 40;
        let mut out = Vec::with_capacity(N);
        for i in 0..N {
            // Chebyshev-like initial guess, then Newton on P_N
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (N as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0f64, x);
                for k in 2..=N {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            out.push((x, w));
        }
        out
    })
}

/// Integrate e^t / t over [a, b] with `panels` equal Gauss–Legendre panels.
fn quad_exp_over_t(a: f64, b: f64, panels: usize) -> f64 {
    let nodes = gauss_legendre_40();
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for i in 0..panels {
        let lo = a + i as f64 * h;
        let mid = lo + 0.5 * h;
        let half = 0.5 * h;
        let mut acc = 0.0;
        for &(x, w) in nodes {
            let t = mid + half * x;
            acc += w * t.exp() / t;
        }
        total += acc * half;
    }
    total
}

/// ∫₂ᵘ dx / log x, by quadrature after the substitution x = e^t (which is
/// well-conditioned out to u = 10¹²). Panels are refined until two successive
/// estimates agree to the configured relative tolerance.
pub fn log_integral_from_2(u: f64) -> Result<f64> {
    log_integral_from_2_with(u, &EstimatorConfig::default())
}

pub fn log_integral_from_2_with(u: f64, cfg: &EstimatorConfig) -> Result<f64> {
    if !(u.is_finite() && u >= 2.0) {
        return Err(Error::Domain {
            what: format!("log integral needs u >= 2, got {u}"),
        });
    }
    if u == 2.0 {
        return Ok(0.0);
    }
    let a = 2f64.ln();
    let b = u.ln();
    let mut panels = ((b - a) / 2.0).ceil().max(1.0) as usize;
    let mut prev = quad_exp_over_t(a, b, panels);
    for _ in 0..8 {
        panels *= 2;
        let next = quad_exp_over_t(a, b, panels);
        let err = (next - prev).abs();
        if err <= cfg.rel_tol * next.abs() {
            return Ok(next);
        }
        prev = next;
    }
    Ok(prev)
}

/// Expected number of Gaussian primes with |γ|² ≤ u and argument in the
/// sector: (2/π) · width · ∫₂ᵘ dx/log x. The error term is deliberately
/// not evaluated.
pub fn kubilyus_estimate(s: &Sector, u: f64) -> Result<f64> {
    kubilyus_estimate_with(s, u, &EstimatorConfig::default())
}

pub fn kubilyus_estimate_with(s: &Sector, u: f64, cfg: &EstimatorConfig) -> Result<f64> {
    let li = log_integral_from_2_with(u, cfg)?;
    Ok(2.0 / std::f64::consts::PI * s.width() * li)
}

/// The π₃ asymptotic x / (2 log x) from the prime number theorem for
/// arithmetic progressions.
pub fn pi3_estimate(x: f64) -> f64 {
    x / (2.0 * x.ln())
}

/// Round half away from zero.
pub fn round_half_away(x: f64) -> i64 {
    x.round() as i64
}
