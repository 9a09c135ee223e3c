//! Record formatting: CSV with fixed headers, JSON with fixed field names.
//! Reals in CSV are printed with 10 significant digits; JSON numbers use the
//! shortest round-trip representation so re-parsing yields identical values.

use serde_json::{json, Value};

use gpq_core::{CensusResult, Classification, QuotientResult, RowOutcome, TableRow};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// %.{sig}g-style formatting: `sig` significant digits, positional when the
/// exponent is moderate, trailing zeros trimmed.
pub fn fmt_sig(x: f64, sig: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", sig - 1, x);
    let (mant, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("numeric exponent");
    if exp < -4 || exp >= sig as i32 {
        let mant = mant.trim_end_matches('0').trim_end_matches('.');
        format!("{mant}e{exp}")
    } else {
        let decimals = (sig as i32 - 1 - exp).max(0) as usize;
        let t = format!("{x:.decimals$}");
        if t.contains('.') {
            t.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            t
        }
    }
}

pub fn real(x: f64) -> String {
    fmt_sig(x, 10)
}

pub fn classify_json(a: i64, b: i64, c: &Classification) -> Value {
    json!({
        "a": a,
        "b": b,
        "class": c.class.as_str(),
        "witness": c.witness,
    })
}

pub fn classify_csv(a: i64, b: i64, c: &Classification) -> String {
    let witness = c.witness.map(|w| w.to_string()).unwrap_or_default();
    format!("a,b,class,witness\n{a},{b},{},{witness}", c.class)
}

pub fn census_json(r: &CensusResult) -> Value {
    json!({
        "alpha": r.sector.alpha().to_string(),
        "beta": r.sector.beta().to_string(),
        "rho": r.rho,
        "N": r.n,
        "K": r.k,
        "K_rounded": r.k_rounded,
        "boundary_hits": r.boundary_hits,
    })
}

pub fn census_csv_row(r: &CensusResult) -> String {
    format!("{},{},{},{}", real(r.rho), r.n, real(r.k), r.k_rounded)
}

pub const CENSUS_CSV_HEADER: &str = "rho,N,K,K_rounded";

pub fn table_json(name: &str, caption_mode: Option<&str>, sector_desc: &str, rows: &[TableRow]) -> Value {
    let rows: Vec<Value> = rows
        .iter()
        .map(|row| match &row.outcome {
            RowOutcome::Done(r) => json!({
                "rho": r.rho,
                "N": r.n,
                "K": r.k,
                "K_rounded": r.k_rounded,
                "boundary_hits": r.boundary_hits,
            }),
            RowOutcome::Skipped(reason) => json!({
                "rho": row.rho,
                "skipped": reason,
            }),
        })
        .collect();
    let mut obj = json!({
        "table": name,
        "sector": sector_desc,
        "rows": rows,
    });
    if let Some(mode) = caption_mode {
        obj["caption_mode"] = Value::String(mode.to_string());
    }
    obj
}

pub fn quotient_json(r: &QuotientResult) -> Value {
    json!({
        "gamma_a": r.gamma.re(),
        "gamma_b": r.gamma.im(),
        "q": r.q,
        "re_exact": format!("{}/{}", r.gamma.re(), r.q),
        "im_exact": format!("{}/{}", r.gamma.im(), r.q),
        "re_dec": r.value.re(),
        "im_dec": r.value.im(),
        "region": {
            "alpha": r.region.sector().alpha().to_string(),
            "beta": r.region.sector().beta().to_string(),
            "r": r.region.r(),
            "R": r.region.big_r(),
        },
        "trace": {
            "iterations": r.search_trace.iterations,
            "final_threshold": r.search_trace.final_threshold,
        },
    })
}

pub const QUOTIENT_CSV_HEADER: &str = "gamma_a,gamma_b,q,re_exact,im_exact,re_dec,im_dec";

pub fn quotient_csv_row(r: &QuotientResult) -> String {
    format!(
        "{},{},{},{}/{},{}/{},{},{}",
        r.gamma.re(),
        r.gamma.im(),
        r.q,
        r.gamma.re(),
        r.q,
        r.gamma.im(),
        r.q,
        real(r.value.re()),
        real(r.value.im()),
    )
}
