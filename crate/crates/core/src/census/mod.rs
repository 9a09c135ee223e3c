//! Brute-force sector censuses of Gaussian primes (the observed count N)
//! next to the main-term estimate K evaluated at u = ρ².

mod estimator;
pub(crate) mod scan;

pub use estimator::{
    kubilyus_estimate, kubilyus_estimate_with, log_integral_from_2, log_integral_from_2_with,
    pi3_estimate, round_half_away, EstimatorConfig,
};

use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::error::{Error, Result};
use crate::exact::norm_limit_below_square;
use crate::gaussian::MAX_NORM;
use crate::primality::{count_mod4_up_to, DEFAULT_SEGMENT_LEN};
use crate::region::Sector;

/// Default cap on the estimated lattice workload of one census.
pub const DEFAULT_WORKLOAD_BUDGET: u64 = 200_000_000;

/// Knobs shared by census runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CensusConfig {
    pub workload_budget: u64,
    pub estimator: EstimatorConfig,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig {
            workload_budget: DEFAULT_WORKLOAD_BUDGET,
            estimator: EstimatorConfig::default(),
        }
    }
}

/// Observed count N and estimate K for one sector and magnitude bound.
/// The count uses |γ| < rho strictly; K evaluates the main term at u = ρ².
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusResult {
    pub sector: Sector,
    pub rho: f64,
    #[serde(rename = "N")]
    pub n: u64,
    #[serde(rename = "K")]
    pub k: f64,
    #[serde(rename = "K_rounded")]
    pub k_rounded: i64,
    /// Gaussian primes sitting exactly on a bounding ray (already counted in
    /// N iff the sector is inclusive); lets either angular convention be
    /// reconstructed.
    pub boundary_hits: u64,
}

/// Estimated lattice workload of scanning the sector of a disk of radius rho.
fn estimate_workload(width: f64, rho: f64) -> u64 {
    let est = width * rho * rho / 2.0;
    if est >= u64::MAX as f64 {
        u64::MAX
    } else {
        est as u64
    }
}

/// Exact census: N counts Gaussian primes with |γ| < rho (strict) and
/// argument in the sector per its inclusive flag.
pub fn sector_census(s: &Sector, rho: f64, cfg: &CensusConfig) -> Result<CensusResult> {
    if !(rho.is_finite() && rho >= 1.0) {
        return Err(Error::Domain {
            what: format!("census needs rho >= 1, got {rho}"),
        });
    }
    let estimated = estimate_workload(s.width(), rho);
    if estimated > cfg.workload_budget {
        return Err(Error::BudgetExceeded {
            estimated,
            budget: cfg.workload_budget,
        });
    }
    let norm_limit = norm_limit_below_square(rho);
    if norm_limit > MAX_NORM {
        return Err(Error::GuardExceeded {
            what: "census magnitude bound",
            requested: norm_limit,
            limit: MAX_NORM,
        });
    }
    let (n, boundary_hits) = scan::count_primes(s, norm_limit);
    // u below the lower integration limit means an empty integral
    let u = (rho * rho).max(2.0);
    let k = kubilyus_estimate_with(s, u, &cfg.estimator)?;
    Ok(CensusResult {
        sector: s.clone(),
        rho,
        n,
        k,
        k_rounded: round_half_away(k),
        boundary_hits,
    })
}

/// Predicted full-circle count from rational-prime data alone:
/// 4·#{p ≡ 3 (4), p < rho} + 8·#{p ≡ 1 (4), p < ρ²} + 4·[ρ² > 2].
pub fn total_census_formula(rho: f64) -> Result<u64> {
    if !(rho.is_finite() && rho >= 1.0) {
        return Err(Error::Domain {
            what: format!("census formula needs rho >= 1, got {rho}"),
        });
    }
    let norm_limit = norm_limit_below_square(rho); // p <= norm_limit ⟺ p < ρ²
    let inert_limit = largest_integer_below(rho);
    let inert = count_mod4_up_to(inert_limit, 3, DEFAULT_SEGMENT_LEN)?;
    let split = count_mod4_up_to(norm_limit, 1, DEFAULT_SEGMENT_LEN)?;
    let ramified = if norm_limit >= 2 { 4 } else { 0 };
    Ok(4 * inert + 8 * split + ramified)
}

/// Largest integer strictly below the positive real x.
fn largest_integer_below(x: f64) -> u64 {
    let mut n = x as u64;
    while n > 0 && n as f64 >= x {
        n -= 1;
    }
    while ((n + 1) as f64) < x {
        n += 1;
    }
    n
}

/// Which built-in table to produce, or a custom sector with its own ρ list.
#[derive(Debug, Clone, PartialEq)]
pub enum TableSpec {
    /// Sector [π/47, 2π/47] (width derived from the K column) over
    /// ρ ∈ {100, …, 50000}; `printed_caption` swaps in the bounds
    /// [π/24, 2π/47] as printed in the table's caption.
    Fig2a { printed_caption: bool },
    /// Sector [π/31415, 2π/31415] over ρ ∈ {1000, …, 500000}.
    Fig2b,
    Custom { sector: Sector, rhos: Vec<f64> },
}

pub const FIG2A_RHOS: [f64; 7] = [100.0, 500.0, 1000.0, 5000.0, 10_000.0, 25_000.0, 50_000.0];
pub const FIG2B_RHOS: [f64; 7] = [
    1000.0, 5000.0, 10_000.0, 50_000.0, 100_000.0, 250_000.0, 500_000.0,
];

pub fn fig2a_sector(printed_caption: bool) -> Sector {
    let alpha = if printed_caption {
        Angle::from_pi_multiple(1, 24).expect("q > 0")
    } else {
        Angle::from_pi_multiple(1, 47).expect("q > 0")
    };
    Sector::from_bounds(alpha, Angle::from_pi_multiple(2, 47).expect("q > 0"), true)
}

pub fn fig2b_sector() -> Sector {
    Sector::from_bounds(
        Angle::from_pi_multiple(1, 31415).expect("q > 0"),
        Angle::from_pi_multiple(2, 31415).expect("q > 0"),
        true,
    )
}

impl TableSpec {
    pub fn sector(&self) -> Sector {
        match self {
            TableSpec::Fig2a { printed_caption } => fig2a_sector(*printed_caption),
            TableSpec::Fig2b => fig2b_sector(),
            TableSpec::Custom { sector, .. } => sector.clone(),
        }
    }

    pub fn rhos(&self) -> Vec<f64> {
        match self {
            TableSpec::Fig2a { .. } => FIG2A_RHOS.to_vec(),
            TableSpec::Fig2b => FIG2B_RHOS.to_vec(),
            TableSpec::Custom { rhos, .. } => rhos.clone(),
        }
    }
}

/// One table row: either a completed census or the reason it was skipped.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub rho: f64,
    pub outcome: RowOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RowOutcome {
    Done(CensusResult),
    Skipped(String),
}

/// Run every row of a table. Rows over the workload budget are reported as
/// skipped rather than failing the whole table; any other error aborts.
pub fn census_table(spec: &TableSpec, cfg: &CensusConfig) -> Result<Vec<TableRow>> {
    let sector = spec.sector();
    let mut rows = Vec::new();
    for rho in spec.rhos() {
        match sector_census(&sector, rho, cfg) {
            Ok(res) => rows.push(TableRow {
                rho,
                outcome: RowOutcome::Done(res),
            }),
            Err(e @ Error::BudgetExceeded { .. }) => rows.push(TableRow {
                rho,
                outcome: RowOutcome::Skipped(e.to_string()),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(rows)
}
