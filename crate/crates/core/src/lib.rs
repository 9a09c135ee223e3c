//! Gaussian primes, their distribution by angular sector, and explicit
//! prime-quotient witnesses.
//!
//! The crate has four layers:
//!
//! * [`gaussian`] / [`angle`] / [`region`]: exact lattice arithmetic,
//!   normalized angles with rational-π intent, sectors and annular regions
//!   with deterministic boundary handling.
//! * [`primality`]: deterministic 64-bit primality, a segmented sieve, the
//!   π₃ counting function, and the Gaussian-prime classifier with an
//!   independent trial-division oracle.
//! * [`census`]: brute-force sector counts next to the main-term estimate
//!   (2/π)(β−α)∫₂ᵘ dx/log x evaluated at u = ρ².
//! * [`quotient`]: the constructive search producing a verified γ/q inside
//!   any annular sector, and ε-approximation of arbitrary complex targets.

pub mod angle;
pub mod census;
pub mod error;
mod exact;
pub mod gaussian;
pub mod primality;
pub mod quotient;
pub mod region;

pub use angle::{Angle, AngleOrigin};
pub use census::{
    census_table, fig2a_sector, fig2b_sector, kubilyus_estimate, kubilyus_estimate_with,
    log_integral_from_2, log_integral_from_2_with, pi3_estimate, round_half_away, sector_census,
    total_census_formula, CensusConfig, CensusResult, EstimatorConfig, RowOutcome, TableRow,
    TableSpec, DEFAULT_WORKLOAD_BUDGET, FIG2A_RHOS, FIG2B_RHOS,
};
pub use error::{Error, Result};
pub use exact::dist_lt_exact;
pub use gaussian::{GaussianInt, COORD_LIMIT, MAX_NORM};
pub use primality::{
    classify, is_gaussian_prime, is_prime, pi3, pi3_with, prime_3mod4_in, prime_3mod4_in_with,
    sieve_range, sieve_range_with, trial_divide_zi, Classification, PrimeClass, SieveSegment,
    Witness, DEFAULT_SEGMENT_LEN, ORACLE_NORM_LIMIT, PI3_GUARD,
};
pub use quotient::{
    approximate, find_prime_in_sector, find_quotient, verify_quotient, QuotientConfig,
    QuotientResult, SearchTrace,
};
pub use region::{AngularPosition, AnnularRegion, RationalComplex, Sector};
