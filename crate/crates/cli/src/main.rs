//! gpq: Gaussian prime censuses and quotient search from the command line.
//!
//! Exit codes: 0 success, 1 usage or precondition violation, 2 resource or
//! budget guard, 3 internal inconsistency (a result that fails its own
//! verifier; must never happen in a correct build).

mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use gpq_core::{
    approximate, census_table, classify, find_quotient, pi3_estimate, pi3_with, sector_census,
    verify_quotient, Angle, AnnularRegion, CensusConfig, Error, EstimatorConfig, GaussianInt,
    QuotientConfig, RowOutcome, Sector, TableSpec,
};

use output::{
    census_csv_row, census_json, classify_csv, classify_json, quotient_csv_row, quotient_json,
    real, table_json, Format, CENSUS_CSV_HEADER, QUOTIENT_CSV_HEADER,
};

#[derive(Parser)]
#[command(name = "gpq", version, about = "Gaussian primes: classification, sector censuses, quotient search")]
struct Cli {
    /// Worker threads for lattice scans (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Lattice-point budget for census and search scans
    #[arg(long, global = true, default_value_t = gpq_core::DEFAULT_WORKLOAD_BUDGET)]
    budget: u64,

    /// Output format
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,

    /// Relative tolerance for the log-integral quadrature
    #[arg(long, global = true, default_value_t = 1e-9)]
    quadrature_tol: f64,

    /// Segment length for sieve-backed commands
    #[arg(long, global = true, default_value_t = gpq_core::DEFAULT_SEGMENT_LEN)]
    sieve_segment_size: u64,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a + bi as zero/unit/ramified/split/inert/composite
    #[command(allow_negative_numbers = true)]
    Classify { a: i64, b: i64 },
    /// Count Gaussian primes with |z| < rho and alpha <= arg z <= beta,
    /// next to the main-term estimate at u = rho²
    Census {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        rho: f64,
    },
    /// Evaluate the main-term estimate (2/pi)(beta-alpha)∫₂ᵘ dx/log x directly
    Estimate {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        u: f64,
    },
    /// Exact count of primes p <= x with p ≡ 3 (mod 4), next to x/(2 log x)
    Pi3 { x: u64 },
    /// Reproduce a built-in census table
    Table {
        #[arg(value_enum)]
        spec: TableArg,
        #[arg(long, value_enum, default_value = "derived-width")]
        caption_mode: CaptionMode,
    },
    /// Find a verified Gaussian-prime quotient in the open annular sector
    /// {alpha < arg z < beta, r < |z| < R}
    FindQuotient {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        r: f64,
        #[arg(long = "R")]
        big_r: f64,
    },
    /// Find a quotient within eps of the target re + im·i
    #[command(allow_negative_numbers = true)]
    Approximate {
        #[arg(long)]
        re: f64,
        #[arg(long)]
        im: f64,
        #[arg(long)]
        eps: f64,
    },
    /// Emit every Gaussian prime with |a|,|b| <= bound as CSV points
    Scatter { bound: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableArg {
    Fig2a,
    Fig2b,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaptionMode {
    /// Sector [pi/47, 2pi/47]: the width the printed K column implies
    DerivedWidth,
    /// Sector [pi/24, 2pi/47] exactly as printed in the source caption
    PrintedCaption,
}

/// Largest scatter bound; the grid has (2·bound + 1)² points.
const SCATTER_GUARD: u32 = 5000;

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::CoordinateOutOfRange { .. }
        | Error::MulOverflow { .. }
        | Error::ZeroInput { .. }
        | Error::AngleParse { .. }
        | Error::Domain { .. } => 1,
        Error::GuardExceeded { .. }
        | Error::BudgetExceeded { .. }
        | Error::IterationCap { .. }
        | Error::OracleScale { .. } => 2,
    }
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: exit_code_for(&e),
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(1);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn parse_angle(text: &str) -> Result<Angle, Failure> {
    Angle::parse(text).map_err(Failure::from)
}

fn census_config(cli: &Cli) -> Result<CensusConfig, Failure> {
    Ok(CensusConfig {
        workload_budget: cli.budget,
        estimator: EstimatorConfig::new(cli.quadrature_tol)?,
    })
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Classify { a, b } => {
            let g = GaussianInt::new(*a, *b)?;
            let c = classify(&g);
            match cli.format {
                Format::Csv => println!("{}", classify_csv(*a, *b, &c)),
                Format::Json => println!("{}", classify_json(*a, *b, &c)),
            }
            Ok(())
        }
        Cmd::Census { alpha, beta, rho } => {
            let sector = Sector::from_bounds(parse_angle(alpha)?, parse_angle(beta)?, true);
            let res = sector_census(&sector, *rho, &census_config(cli)?)?;
            match cli.format {
                Format::Csv => {
                    println!("{CENSUS_CSV_HEADER}\n{}", census_csv_row(&res));
                    eprintln!(
                        "# sector {} boundary_hits {}",
                        res.sector, res.boundary_hits
                    );
                }
                Format::Json => println!("{}", census_json(&res)),
            }
            Ok(())
        }
        Cmd::Estimate { alpha, beta, u } => {
            let sector = Sector::from_bounds(parse_angle(alpha)?, parse_angle(beta)?, true);
            let cfg = EstimatorConfig::new(cli.quadrature_tol)?;
            let k = gpq_core::census::kubilyus_estimate_with(&sector, *u, &cfg)?;
            let rounded = gpq_core::round_half_away(k);
            match cli.format {
                Format::Csv => println!(
                    "alpha,beta,u,K,K_rounded\n{},{},{},{},{rounded}",
                    sector.alpha(),
                    sector.beta(),
                    real(*u),
                    real(k)
                ),
                Format::Json => println!(
                    "{}",
                    json!({
                        "alpha": sector.alpha().to_string(),
                        "beta": sector.beta().to_string(),
                        "u": u,
                        "K": k,
                        "K_rounded": rounded,
                    })
                ),
            }
            Ok(())
        }
        Cmd::Pi3 { x } => {
            let exact = pi3_with(*x, cli.sieve_segment_size)?;
            let estimate = pi3_estimate(*x as f64);
            match cli.format {
                Format::Csv => {
                    println!("x,pi3,estimate\n{x},{exact},{}", real(estimate))
                }
                Format::Json => println!(
                    "{}",
                    json!({"x": x, "pi3": exact, "estimate": estimate})
                ),
            }
            Ok(())
        }
        Cmd::Table { spec, caption_mode } => {
            let (name, table_spec, mode) = match spec {
                TableArg::Fig2a => (
                    "fig2a",
                    TableSpec::Fig2a {
                        printed_caption: *caption_mode == CaptionMode::PrintedCaption,
                    },
                    Some(match caption_mode {
                        CaptionMode::DerivedWidth => "derived-width",
                        CaptionMode::PrintedCaption => "printed-caption",
                    }),
                ),
                TableArg::Fig2b => ("fig2b", TableSpec::Fig2b, None),
            };
            let sector = table_spec.sector();
            let sector_desc = sector.to_string();
            let rows = census_table(&table_spec, &census_config(cli)?)?;
            match cli.format {
                Format::Csv => {
                    match mode {
                        Some(m) => println!("# table {name} sector {sector_desc} caption-mode {m}"),
                        None => println!("# table {name} sector {sector_desc}"),
                    }
                    println!("{CENSUS_CSV_HEADER}");
                    for row in &rows {
                        match &row.outcome {
                            RowOutcome::Done(r) => println!("{}", census_csv_row(r)),
                            RowOutcome::Skipped(reason) => {
                                eprintln!("warning: rho {} skipped: {reason}", real(row.rho))
                            }
                        }
                    }
                }
                Format::Json => {
                    println!("{}", table_json(name, mode, &sector_desc, &rows))
                }
            }
            Ok(())
        }
        Cmd::FindQuotient {
            alpha,
            beta,
            r,
            big_r,
        } => {
            let sector = Sector::from_bounds(parse_angle(alpha)?, parse_angle(beta)?, false);
            let region = AnnularRegion::new(sector, *r, *big_r)?;
            let cfg = QuotientConfig {
                workload_budget: cli.budget,
                ..Default::default()
            };
            let res = find_quotient(&region, &cfg)?;
            if !verify_quotient(&res) {
                return Err(Failure {
                    code: 3,
                    message: "internal inconsistency: result failed re-verification".into(),
                });
            }
            print_quotient(cli, &res, None);
            Ok(())
        }
        Cmd::Approximate { re, im, eps } => {
            let cfg = QuotientConfig {
                workload_budget: cli.budget,
                ..Default::default()
            };
            let res = approximate(*re, *im, *eps, &cfg)?;
            if !verify_quotient(&res) || !res.value.dist_lt(*re, *im, *eps) {
                return Err(Failure {
                    code: 3,
                    message: "internal inconsistency: result failed re-verification".into(),
                });
            }
            let err = (res.value.re() - re).hypot(res.value.im() - im);
            print_quotient(cli, &res, Some((*re, *im, *eps, err)));
            Ok(())
        }
        Cmd::Scatter { bound } => {
            if *bound > SCATTER_GUARD {
                return Err(Failure {
                    code: 2,
                    message: format!("scatter bound {bound} exceeds guard {SCATTER_GUARD}"),
                });
            }
            scatter(cli, *bound as i64);
            Ok(())
        }
    }
}

fn print_quotient(cli: &Cli, res: &gpq_core::QuotientResult, target: Option<(f64, f64, f64, f64)>) {
    match cli.format {
        Format::Csv => {
            println!("{QUOTIENT_CSV_HEADER}\n{}", quotient_csv_row(res));
            eprintln!(
                "# gamma {} q {} region {} iterations {} final_threshold {}",
                res.gamma,
                res.q,
                res.region,
                res.search_trace.iterations,
                real(res.search_trace.final_threshold)
            );
            if let Some((re, im, eps, err)) = target {
                eprintln!("# target {re}+{im}i eps {eps} error {}", real(err));
            }
        }
        Format::Json => {
            let mut v = quotient_json(res);
            if let Some((re, im, eps, err)) = target {
                v["target"] = json!({"re": re, "im": im, "eps": eps});
                v["error"] = json!(err);
            }
            println!("{v}");
        }
    }
}

fn scatter(cli: &Cli, bound: i64) {
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let mut total = 0u64;
    match cli.format {
        Format::Csv => {
            writeln!(out, "a,b,class").unwrap();
            for a in -bound..=bound {
                for b in -bound..=bound {
                    let g = GaussianInt::new(a, b).expect("bound <= 5000");
                    let c = classify(&g);
                    if c.class.is_prime() {
                        total += 1;
                        writeln!(out, "{a},{b},{}", c.class).unwrap();
                    }
                }
            }
            out.flush().unwrap();
            eprintln!("# total {total}");
        }
        Format::Json => {
            let mut points = Vec::new();
            for a in -bound..=bound {
                for b in -bound..=bound {
                    let g = GaussianInt::new(a, b).expect("bound <= 5000");
                    let c = classify(&g);
                    if c.class.is_prime() {
                        total += 1;
                        points.push(json!({"a": a, "b": b, "class": c.class.as_str()}));
                    }
                }
            }
            writeln!(
                out,
                "{}",
                json!({"bound": bound, "total": total, "points": points})
            )
            .unwrap();
            out.flush().unwrap();
        }
    }
}
