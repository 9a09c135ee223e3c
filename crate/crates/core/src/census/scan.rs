//! Lattice-point enumeration over disk wedges.
//!
//! A sector is split at the quarter-turn rays strictly inside it, giving at
//! most five wedge pieces that each live in a single quadrant. Interior split
//! rays are half-open (closed below, open above) so every lattice point is
//! visited exactly once; the sector's own bounds keep the caller's
//! open/closed flags. Each piece is rotated into the first quadrant for
//! candidate generation, while membership is always tested against the
//! original bounds with their exact intent.

use std::f64::consts::{FRAC_PI_2, TAU};

use rayon::prelude::*;

use crate::angle::Angle;
use crate::primality::gaussian_prime_raw;
use crate::region::{angular_position, AngularPosition, Sector};

/// Tolerance for merging a split ray into a sector bound. Lattice points with
/// |coordinates| <= 2³¹ are never strictly between two rays this close.
const SPLIT_MERGE_TOL: f64 = 1e-12;

/// Padding applied to the tan-based candidate bounds; candidate generation
/// over-covers and the position test filters exactly.
const GEN_PAD: f64 = 1e-9;

#[derive(Debug, Clone)]
pub(crate) struct WedgePiece {
    lo: Angle,
    hi: Angle,
    width: f64,
    lo_closed: bool,
    hi_closed: bool,
    lo_is_alpha: bool,
    hi_is_beta: bool,
    quadrant: u8,
    lo_off: f64,
    hi_off: f64,
}

/// Rotate a first-quadrant point by k quarter turns.
fn rotate(x: i64, y: i64, k: u8) -> (i64, i64) {
    match k {
        0 => (x, y),
        1 => (-y, x),
        2 => (-x, -y),
        _ => (y, -x),
    }
}

pub(crate) fn decompose(s: &Sector) -> Vec<WedgePiece> {
    let alpha_val = s.alpha().radians();
    let width = s.width();
    let end = alpha_val + width;
    let full = s.is_full_circle();

    let mut cuts: Vec<(f64, Angle)> = vec![(alpha_val, *s.alpha())];
    let mut m = (alpha_val / FRAC_PI_2).floor() as i64;
    loop {
        let v = m as f64 * FRAC_PI_2;
        if v > end - SPLIT_MERGE_TOL {
            break;
        }
        if v > alpha_val + SPLIT_MERGE_TOL {
            let p = m.rem_euclid(4) as u64;
            cuts.push((v, Angle::from_pi_multiple(p, 2).expect("q=2")));
        }
        m += 1;
    }
    cuts.push((end, *s.beta()));

    let n = cuts.len() - 1;
    (0..n)
        .map(|i| {
            let (lo_abs, lo) = cuts[i];
            let (hi_abs, hi) = cuts[i + 1];
            let first = i == 0;
            let last = i == n - 1;
            let qd = (((lo_abs + hi_abs) / 2.0) / FRAC_PI_2).floor() as i64;
            let base = qd as f64 * FRAC_PI_2;
            WedgePiece {
                lo,
                hi,
                width: hi_abs - lo_abs,
                lo_closed: if first { s.inclusive() } else { true },
                hi_closed: if last { !full && s.inclusive() } else { false },
                lo_is_alpha: first,
                hi_is_beta: last && !full,
                quadrant: qd.rem_euclid(4) as u8,
                lo_off: (lo_abs - base).clamp(0.0, FRAC_PI_2),
                hi_off: (hi_abs - base).clamp(0.0, FRAC_PI_2),
            }
        })
        .collect()
}

/// Candidate second-coordinate range for column x of a piece, before exact
/// filtering: the wedge rays padded outward, intersected with the disk.
fn column_bounds(piece: &WedgePiece, x: i64, y_disk: i64) -> (i64, i64) {
    let t_lo = if piece.lo_off <= GEN_PAD {
        0.0
    } else {
        (piece.lo_off - GEN_PAD).tan()
    };
    let y_lo = ((x as f64 * t_lo).floor() as i64 - 2).max(0);
    let y_hi = if piece.hi_off >= FRAC_PI_2 - GEN_PAD {
        y_disk
    } else {
        let t_hi = (piece.hi_off + GEN_PAD).tan();
        ((x as f64 * t_hi).ceil() as i64 + 2).min(y_disk)
    };
    (y_lo, y_hi)
}

/// Count Gaussian primes with norm in [2, norm_limit] and argument in the
/// sector, plus the number of those sitting exactly on the sector's own
/// bounding rays (counted toward N only per the inclusive flag, but always
/// reported). Column strips are independent, so the result is identical for
/// any thread count.
pub(crate) fn count_primes(s: &Sector, norm_limit: u64) -> (u64, u64) {
    if norm_limit < 2 {
        return (0, 0);
    }
    let pieces = decompose(s);
    let x_max = norm_limit.isqrt() as i64;
    pieces
        .iter()
        .map(|piece| {
            (0..x_max as usize + 1)
                .into_par_iter()
                .with_min_len(256)
                .map(|x| scan_column_count(piece, x as i64, norm_limit))
                .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
        })
        .fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
}

fn scan_column_count(piece: &WedgePiece, x: i64, norm_limit: u64) -> (u64, u64) {
    let y_disk = (norm_limit - (x * x) as u64).isqrt() as i64;
    let (y_lo, y_hi) = column_bounds(piece, x, y_disk);
    let mut count = 0u64;
    let mut hits = 0u64;
    for y in y_lo..=y_hi {
        let n = (x * x + y * y) as u64;
        if n < 2 {
            continue;
        }
        let (a, b) = rotate(x, y, piece.quadrant);
        match angular_position(&piece.lo, &piece.hi, piece.width, a, b) {
            AngularPosition::Outside => {}
            AngularPosition::Interior => {
                if gaussian_prime_raw(a, b) {
                    count += 1;
                }
            }
            AngularPosition::OnAlpha => {
                if gaussian_prime_raw(a, b) {
                    if piece.lo_closed {
                        count += 1;
                    }
                    if piece.lo_is_alpha {
                        hits += 1;
                    }
                }
            }
            AngularPosition::OnBeta => {
                if gaussian_prime_raw(a, b) {
                    if piece.hi_closed {
                        count += 1;
                    }
                    if piece.hi_is_beta {
                        hits += 1;
                    }
                }
            }
        }
    }
    (count, hits)
}

/// The Gaussian prime strictly inside the sector with norm in
/// [min_norm, max_norm), minimal norm, ties broken by smallest argument then
/// smallest first coordinate. Serial: the windows the quotient search asks
/// for are small.
pub(crate) fn min_prime_in_annulus(
    s: &Sector,
    min_norm: u64,
    max_norm: u64,
) -> Option<crate::gaussian::GaussianInt> {
    if max_norm < 3 {
        return None;
    }
    let norm_limit = max_norm - 1;
    let pieces = decompose(s);
    let x_max = norm_limit.isqrt() as i64;
    let mut best: Option<(u64, f64, i64, i64)> = None; // (norm, arg, a, b)
    for piece in &pieces {
        for x in 0..=x_max {
            let y_disk = (norm_limit - (x * x) as u64).isqrt() as i64;
            let (y_lo, y_hi) = column_bounds(piece, x, y_disk);
            // lift the column floor to the annulus lower edge
            let x2 = (x * x) as u64;
            let y_ann = if x2 >= min_norm {
                0
            } else {
                let r = min_norm - x2;
                let fl = r.isqrt();
                if fl * fl == r {
                    fl as i64
                } else {
                    fl as i64 + 1
                }
            };
            for y in y_lo.max(y_ann)..=y_hi {
                let n = (x * x + y * y) as u64;
                if n < 2 || n < min_norm {
                    continue;
                }
                if let Some((bn, _, _, _)) = best {
                    if n > bn {
                        continue;
                    }
                }
                let (a, b) = rotate(x, y, piece.quadrant);
                if angular_position(&piece.lo, &piece.hi, piece.width, a, b)
                    != AngularPosition::Interior
                {
                    continue;
                }
                if !gaussian_prime_raw(a, b) {
                    continue;
                }
                let arg = (b as f64).atan2(a as f64).rem_euclid(TAU);
                let cand = (n, arg, a, b);
                best = match best {
                    None => Some(cand),
                    Some(cur) => {
                        let (cn, ca, caa, _) = cur;
                        if (n, arg, a) < (cn, ca, caa) {
                            Some(cand)
                        } else {
                            Some(cur)
                        }
                    }
                };
            }
        }
    }
    best.map(|(_, _, a, b)| crate::gaussian::GaussianInt::new_unchecked(a, b))
}
