//! Acceptance suite. Each test implements one numbered criterion at its
//! stated tolerance and prints a single pass/fail line; run with
//! `cargo test --release -p gpq-cli --test acceptance -- --nocapture`.

use std::f64::consts::TAU;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gpq_core::{
    approximate, classify, fig2a_sector, fig2b_sector, find_quotient, is_prime,
    kubilyus_estimate_with, pi3, round_half_away, sector_census, total_census_formula,
    trial_divide_zi, verify_quotient, Angle, AnnularRegion, CensusConfig, EstimatorConfig,
    GaussianInt, QuotientConfig, Sector,
};

/// fig2b reference rows: (rho, N, K_rounded).
const FIG2B: [(f64, u64, i64); 7] = [
    (1_000.0, 0, 5),
    (5_000.0, 0, 100),
    (10_000.0, 369, 367),
    (50_000.0, 7_823, 7_732),
    (100_000.0, 28_964, 28_971),
    (250_000.0, 167_197, 167_099),
    (500_000.0, 632_781, 631_552),
];

/// fig2a reference rows: (rho, N, K_rounded); K matches the derived width π/47.
const FIG2A: [(f64, u64, i64); 7] = [
    (100.0, 50, 53),
    (500.0, 946, 940),
    (1_000.0, 3_327, 3_346),
    (5_000.0, 66_712, 66_651),
    (10_000.0, 245_085, 245_200),
    (25_000.0, 1_384_746, 1_385_602),
    (50_000.0, 5_168_740, 5_167_941),
];

fn report(number: u32, name: &str, ok: bool, detail: String) {
    println!(
        "criterion {number} ({name}): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {number} ({name}) failed: {detail}");
}

fn within(actual: u64, expected: u64, tol: u64) -> bool {
    actual.abs_diff(expected) <= tol
}

#[test]
fn criterion_01_fig2b_census_desk_tier() {
    let start = Instant::now();
    let cfg = CensusConfig::default();
    let sector = fig2b_sector();
    let mut detail = String::new();
    let mut ok = true;
    for &(rho, expect_n, _) in &FIG2B[..5] {
        let res = sector_census(&sector, rho, &cfg).unwrap();
        let row_ok = within(res.n, expect_n, 2);
        detail.push_str(&format!("rho {rho}: N {} (expect {expect_n}); ", res.n));
        ok &= row_ok;
    }
    let elapsed = start.elapsed().as_secs_f64();
    ok &= elapsed < 60.0;
    detail.push_str(&format!("elapsed {elapsed:.1}s (limit 60s)"));
    report(1, "fig2b census, desk tier", ok, detail);
}

#[test]
fn criterion_02_fig2b_census_extended_tier() {
    let start = Instant::now();
    let cfg = CensusConfig::default();
    let sector = fig2b_sector();
    let mut detail = String::new();
    let mut ok = true;
    for &(rho, expect_n, _) in &FIG2B[5..] {
        let res = sector_census(&sector, rho, &cfg).unwrap();
        ok &= within(res.n, expect_n, 2);
        detail.push_str(&format!("rho {rho}: N {} (expect {expect_n}); ", res.n));
    }
    let elapsed = start.elapsed().as_secs_f64();
    ok &= elapsed < 900.0;
    detail.push_str(&format!("elapsed {elapsed:.1}s (limit 900s)"));
    report(2, "fig2b census, extended tier", ok, detail);
}

#[test]
fn criterion_03_fig2b_estimator() {
    let start = Instant::now();
    let cfg = EstimatorConfig::new(1e-9).unwrap();
    let sector = fig2b_sector();
    let mut detail = String::new();
    let mut ok = true;
    for &(rho, _, expect_k) in &FIG2B {
        let k = kubilyus_estimate_with(&sector, rho * rho, &cfg).unwrap();
        let rounded = round_half_away(k);
        ok &= (rounded - expect_k).abs() <= 1;
        detail.push_str(&format!("rho {rho}: K {rounded} (expect {expect_k}); "));
    }
    let elapsed = start.elapsed().as_secs_f64();
    ok &= elapsed < 1.0;
    detail.push_str(&format!("elapsed {elapsed:.3}s (limit 1s)"));
    report(3, "fig2b estimator", ok, detail);
}

#[test]
fn criterion_04_fig2a_estimator_derived_width() {
    let cfg = EstimatorConfig::new(1e-9).unwrap();
    let sector = fig2a_sector(false);
    let mut detail = String::new();
    let mut ok = true;
    for &(rho, _, expect_k) in &FIG2A {
        let k = kubilyus_estimate_with(&sector, rho * rho, &cfg).unwrap();
        let rounded = round_half_away(k);
        ok &= (rounded - expect_k).abs() <= 1;
        detail.push_str(&format!("rho {rho}: K {rounded} (expect {expect_k}); "));
    }
    report(4, "fig2a estimator, width pi/47", ok, detail);
}

#[test]
fn criterion_05_fig2a_convention_report() {
    let cfg = CensusConfig::default();
    let derived = fig2a_sector(false);
    let printed = fig2a_sector(true);
    let reference = [(100.0, 50u64), (500.0, 946), (1_000.0, 3_327)];
    println!("fig2a angular-convention comparison (reference N column):");
    println!("{:>8} {:>12} {:>22} {:>22}", "rho", "reference", "derived [pi/47,2pi/47]", "printed [pi/24,2pi/47]");
    let mut ok = true;
    for (rho, expect) in reference {
        let d = sector_census(&derived, rho, &cfg);
        let p = sector_census(&printed, rho, &cfg);
        ok &= d.is_ok() && p.is_ok();
        let (d, p) = (d.unwrap(), p.unwrap());
        println!("{rho:>8} {expect:>12} {:>22} {:>22}", d.n, p.n);
    }
    println!("(the derived-width sector reproduces the reference column)");
    report(
        5,
        "fig2a convention comparison report",
        ok,
        "report production failed".to_string(),
    );
}

#[test]
fn criterion_06_classifier_oracle_equivalence() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    // exhaustive over every point with norm <= 10^4
    let mut checked = 0u64;
    'outer: for a in -100i64..=100 {
        for b in -100i64..=100 {
            let g = GaussianInt::new(a, b).unwrap();
            if g.norm() > 10_000 {
                continue;
            }
            checked += 1;
            if classify(&g).class != trial_divide_zi(&g).unwrap().class {
                ok = false;
                detail = format!("exhaustive disagreement at ({a},{b})");
                break 'outer;
            }
        }
    }
    detail.push_str(&format!("exhaustive points {checked}; "));
    // 10^4 random points with norm <= 10^8
    let mut rng = ChaCha8Rng::seed_from_u64(0x6a75_7374_5f71);
    let mut sampled = 0;
    while sampled < 10_000 {
        let a = rng.gen_range(-10_000i64..=10_000);
        let b = rng.gen_range(-10_000i64..=10_000);
        let g = GaussianInt::new(a, b).unwrap();
        if g.norm() > 100_000_000 {
            continue;
        }
        sampled += 1;
        if classify(&g).class != trial_divide_zi(&g).unwrap().class {
            ok = false;
            detail = format!("random disagreement at ({a},{b})");
            break;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    ok &= elapsed < 60.0;
    detail.push_str(&format!("random points {sampled}; elapsed {elapsed:.1}s (limit 60s)"));
    report(6, "classifier oracle equivalence", ok, detail);
}

#[test]
fn criterion_07_full_circle_identity() {
    let cfg = CensusConfig::default();
    let full = Sector::from_bounds(Angle::ZERO, Angle::parse("2pi").unwrap(), true);
    let mut ok = true;
    let mut detail = String::new();
    for rho in 2..=500u32 {
        let scan = sector_census(&full, rho as f64, &cfg).unwrap().n;
        let formula = total_census_formula(rho as f64).unwrap();
        if scan != formula {
            ok = false;
            detail = format!("mismatch at rho {rho}: scan {scan}, formula {formula}");
            break;
        }
    }
    report(7, "full-circle identity, rho 2..=500", ok, detail);
}

#[test]
fn criterion_08_pi3_correctness_and_trend() {
    let mut ok = true;
    let mut detail = String::new();

    // segmented sieve equals a direct deterministic-primality loop at every
    // x <= 10^6 (prefix counts over the same indicator)
    let seg = gpq_core::sieve_range_with(0, 1_000_001, 1 << 26).unwrap();
    let mut sieve_count = 0u64;
    let mut direct_count = 0u64;
    for x in 0..=1_000_000u64 {
        if seg.is_prime(x) && x % 4 == 3 {
            sieve_count += 1;
        }
        if is_prime(x) && x % 4 == 3 {
            direct_count += 1;
        }
        if sieve_count != direct_count {
            ok = false;
            detail = format!("prefix mismatch at x = {x}");
            break;
        }
    }
    // spot-check the segmented pi3 entry point against the same counts
    ok &= pi3(1_000_000).unwrap() == sieve_count;

    // PNT-for-APs ratio at 10^7
    let p7 = pi3(10_000_000).unwrap();
    let ratio = p7 as f64 / (1e7 / 1e7_f64.ln());
    ok &= (0.50..=0.56).contains(&ratio);
    detail.push_str(&format!("pi3(1e7) = {p7}, ratio {ratio:.4}; "));

    // interval counts positive and strictly increasing along x = 10^4..10^7
    let mut prev_gap = 0u64;
    for exp in 4..=7u32 {
        let x = 10u64.pow(exp);
        let gap = pi3((x as f64 * 1.1) as u64).unwrap() - pi3(x).unwrap();
        ok &= gap > 0 && gap > prev_gap;
        detail.push_str(&format!("gap(1e{exp}) = {gap}; "));
        prev_gap = gap;
    }
    report(8, "pi3 correctness and trend", ok, detail);
}

fn random_regions(count: usize, seed: u64) -> Vec<AnnularRegion> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let alpha = rng.gen_range(0.0..TAU);
            let width = rng.gen_range(0.01..TAU);
            let r = rng.gen_range(0.1..=10.0);
            let ratio = rng.gen_range(1.05..2.0);
            let sector = Sector::from_width(Angle::from_radians(alpha), width, false).unwrap();
            AnnularRegion::new(sector, r, r * ratio).unwrap()
        })
        .collect()
}

#[test]
fn criterion_09_quotient_soundness() {
    let cfg = QuotientConfig::default();
    let regions = random_regions(100, 0x7175_6f74_6965_6e74);
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for (i, reg) in regions.iter().enumerate() {
        match find_quotient(reg, &cfg) {
            Ok(res) => {
                if !verify_quotient(&res) {
                    ok = false;
                    detail = format!("region {i} produced an unverifiable result");
                    break;
                }
            }
            Err(e) => {
                ok = false;
                detail = format!("region {i} failed: {e}");
                break;
            }
        }
    }
    let mean = start.elapsed().as_secs_f64() / 100.0;
    ok &= mean < 1.0;
    detail.push_str(&format!("mean wall time {mean:.3}s per region (limit 1s)"));
    report(9, "quotient soundness, 100 regions", ok, detail);
}

#[test]
fn criterion_10_density_demonstration() {
    let cfg = QuotientConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x64656e73697479);
    let mut ok = true;
    let mut detail = String::new();
    for i in 0..20 {
        let magnitude = rng.gen_range(0.5..=2.0);
        let angle = rng.gen_range(0.0..TAU);
        let (zr, zi) = (magnitude * angle.cos(), magnitude * angle.sin());
        let eps = 1e-2;
        match approximate(zr, zi, eps, &cfg) {
            Ok(res) => {
                let exact = res.value.dist_lt(zr, zi, eps);
                if !(verify_quotient(&res) && exact) {
                    ok = false;
                    detail = format!("target {i} ({zr}, {zi}) not within eps exactly");
                    break;
                }
            }
            Err(e) => {
                ok = false;
                detail = format!("target {i} ({zr}, {zi}) failed: {e}");
                break;
            }
        }
    }
    // the origin at eps = 0.1
    match approximate(0.0, 0.0, 0.1, &cfg) {
        Ok(res) => {
            ok &= verify_quotient(&res) && res.value.dist_lt(0.0, 0.0, 0.1);
        }
        Err(e) => {
            ok = false;
            detail = format!("origin target failed: {e}");
        }
    }
    report(10, "density demonstration, 20 targets + origin", ok, detail);
}

#[test]
fn criterion_11_thread_determinism() {
    // criterion 1 payload through the CLI
    let table = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_gpq"))
            .args(["table", "fig2b", "--threads", threads])
            .output()
            .expect("spawn gpq");
        assert!(out.status.success());
        out.stdout
    };
    let bytes_match_cli = table("1") == table("8");

    // criterion 9 payload under explicitly sized thread pools
    let quotients = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let cfg = QuotientConfig::default();
            random_regions(100, 0x7175_6f74_6965_6e74)
                .iter()
                .map(|reg| serde_json::to_string(&find_quotient(reg, &cfg).unwrap()).unwrap())
                .collect::<Vec<_>>()
                .join("\n")
        })
    };
    let bytes_match_lib = quotients(1) == quotients(8);

    report(
        11,
        "byte-identical outputs at 1 and 8 threads",
        bytes_match_cli && bytes_match_lib,
        format!("cli match: {bytes_match_cli}, lib match: {bytes_match_lib}"),
    );
}
