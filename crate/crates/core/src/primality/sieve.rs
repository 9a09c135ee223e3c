//! Segmented sieve of Eratosthenes and the π₃ counting function.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default maximum length of a single sieved segment (2^26).
pub const DEFAULT_SEGMENT_LEN: u64 = 1 << 26;

/// Runtime guard for pi3: the artifact never materializes prime data past this.
pub const PI3_GUARD: u64 = 10_000_000_000;

/// Primality bitmap for the odd integers in [lo, hi). The even prime 2 is
/// handled by the iteration and counting methods.
#[derive(Debug, Clone)]
pub struct SieveSegment {
    lo: u64,
    hi: u64,
    first_odd: u64,
    bits: Vec<u64>,
}

impl SieveSegment {
    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    fn index_of(&self, n: u64) -> Option<usize> {
        if n < self.lo || n >= self.hi || n.is_multiple_of(2) || n < self.first_odd {
            return None;
        }
        Some(((n - self.first_odd) / 2) as usize)
    }

    fn bit(&self, idx: usize) -> bool {
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    fn clear(&mut self, idx: usize) {
        self.bits[idx / 64] &= !(1u64 << (idx % 64));
    }

    /// Exact primality for any n in [lo, hi).
    pub fn is_prime(&self, n: u64) -> bool {
        if n == 2 {
            return self.lo <= 2 && 2 < self.hi;
        }
        match self.index_of(n) {
            Some(i) => self.bit(i),
            None => false,
        }
    }

    /// All primes in [lo, hi) in increasing order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        let two = (self.lo <= 2 && 2 < self.hi).then_some(2u64);
        let odds = (0..self.odd_count()).filter(|&i| self.bit(i)).map(move |i| {
            self.first_odd + 2 * i as u64
        });
        two.into_iter().chain(odds)
    }

    fn odd_count(&self) -> usize {
        if self.first_odd >= self.hi {
            0
        } else {
            ((self.hi - self.first_odd).div_ceil(2)) as usize
        }
    }

    /// Number of primes p in [lo, hi) with p ≡ residue (mod 4).
    pub fn count_mod4(&self, residue: u64) -> u64 {
        self.primes().filter(|p| p % 4 == residue).count() as u64
    }
}

/// Simple sieve for the base primes up to `limit` (inclusive).
fn base_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut is_p = vec![true; n + 1];
    is_p[0] = false;
    if n >= 1 {
        is_p[1] = false;
    }
    let mut i = 2usize;
    while i * i <= n {
        if is_p[i] {
            let mut j = i * i;
            while j <= n {
                is_p[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| is_p[i]).map(|i| i as u64).collect()
}

fn sieve_segment_unchecked(lo: u64, hi: u64) -> SieveSegment {
    let first_odd = if lo.is_multiple_of(2) { lo + 1 } else { lo }.max(1);
    let odd_count = if first_odd >= hi {
        0
    } else {
        ((hi - first_odd).div_ceil(2)) as usize
    };
    let mut seg = SieveSegment {
        lo,
        hi,
        first_odd,
        bits: vec![u64::MAX; odd_count.div_ceil(64)],
    };
    // mask tail bits so counts stay honest
    if odd_count % 64 != 0 {
        if let Some(last) = seg.bits.last_mut() {
            *last = (1u64 << (odd_count % 64)) - 1;
        }
    }
    if odd_count == 0 {
        return seg;
    }
    // 1 is not prime
    if let Some(i) = seg.index_of(1) {
        seg.clear(i);
    }
    let root = (hi - 1).isqrt();
    for p in base_primes(root) {
        if p == 2 {
            continue;
        }
        // first odd multiple of p that is >= max(p², lo)
        let mut start = p * p;
        if start < lo {
            start = lo.div_ceil(p) * p;
            if start % 2 == 0 {
                start += p;
            }
        }
        let mut m = start;
        while m < hi {
            if let Some(i) = seg.index_of(m) {
                seg.clear(i);
            }
            m += 2 * p;
        }
    }
    seg
}

/// Bitmap of exactly the primes in [lo, hi). The segment length is capped so
/// a stray request cannot allocate without bound.
pub fn sieve_range(lo: u64, hi: u64) -> Result<SieveSegment> {
    sieve_range_with(lo, hi, DEFAULT_SEGMENT_LEN)
}

pub fn sieve_range_with(lo: u64, hi: u64, max_len: u64) -> Result<SieveSegment> {
    if lo >= hi {
        return Err(Error::Domain {
            what: format!("sieve range needs lo < hi, got [{lo}, {hi})"),
        });
    }
    if hi - lo > max_len {
        return Err(Error::GuardExceeded {
            what: "sieve segment length",
            requested: hi - lo,
            limit: max_len,
        });
    }
    Ok(sieve_segment_unchecked(lo, hi))
}

/// Exact count of primes p <= x with p ≡ 3 (mod 4), by segmented sieve.
/// Segments are independent, so the count is identical for any segmentation
/// or thread count.
pub fn pi3(x: u64) -> Result<u64> {
    pi3_with(x, DEFAULT_SEGMENT_LEN)
}

pub fn pi3_with(x: u64, segment_len: u64) -> Result<u64> {
    count_mod4_up_to(x, 3, segment_len)
}

/// Count primes p <= x with p ≡ residue (mod 4).
pub(crate) fn count_mod4_up_to(x: u64, residue: u64, segment_len: u64) -> Result<u64> {
    if x > PI3_GUARD {
        return Err(Error::GuardExceeded {
            what: "pi3 argument",
            requested: x,
            limit: PI3_GUARD,
        });
    }
    if x < 2 {
        return Ok(0);
    }
    let segment_len = segment_len.max(1 << 16);
    let hi = x + 1;
    let starts: Vec<u64> = (0..hi.div_ceil(segment_len)).map(|i| i * segment_len).collect();
    let total = starts
        .into_par_iter()
        .map(|lo| {
            let seg_hi = (lo + segment_len).min(hi);
            sieve_segment_unchecked(lo, seg_hi).count_mod4(residue)
        })
        .sum();
    Ok(total)
}

/// Smallest prime p with lo < p < hi and p ≡ 3 (mod 4), if any exists.
/// Only the open interval (lo, hi) is sieved, one segment at a time from the
/// low end, stopping at the first hit.
pub fn prime_3mod4_in(lo: f64, hi: f64) -> Result<Option<u64>> {
    prime_3mod4_in_with(lo, hi, DEFAULT_SEGMENT_LEN)
}

/// Candidates above this would need impractically large base-prime tables.
pub const INTERVAL_GUARD: u64 = 1 << 40;

pub fn prime_3mod4_in_with(lo: f64, hi: f64, segment_len: u64) -> Result<Option<u64>> {
    if !(lo.is_finite() && hi.is_finite() && 0.0 < lo && lo < hi) {
        return Err(Error::Domain {
            what: format!("prime search interval needs 0 < lo < hi, got ({lo}, {hi})"),
        });
    }
    if hi > INTERVAL_GUARD as f64 {
        return Err(Error::GuardExceeded {
            what: "prime interval upper bound",
            requested: hi as u64,
            limit: INTERVAL_GUARD,
        });
    }
    let segment_len = segment_len.max(1 << 16);
    // smallest integer candidate strictly above lo
    let mut start = lo.floor() as u64 + 1;
    if start < 3 {
        start = 3;
    }
    let end = hi.ceil() as u64; // candidates are < end; exact bound re-checked below
    while start < end {
        let seg_hi = (start + segment_len).min(end);
        let seg = sieve_segment_unchecked(start, seg_hi);
        for p in seg.primes() {
            if p % 4 == 3 && (p as f64) > lo && (p as f64) < hi {
                return Ok(Some(p));
            }
        }
        start = seg_hi;
    }
    Ok(None)
}
