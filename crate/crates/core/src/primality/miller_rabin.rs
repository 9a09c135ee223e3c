//! Deterministic primality for the full u64 range.

/// Small primes used to shortcut the strong-pseudoprime rounds.
const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Verified deterministic base set for every n < 2^64 (Sinclair).
const BASES_64: [u64; 7] = [2, 325, 9375, 28178, 450775, 9780504, 1795265022];

/// Verified deterministic base set for n < 3_215_031_751.
const BASES_32: [u64; 4] = [2, 3, 5, 7];

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    a %= n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, n);
        }
        a = mul_mod(a, a, n);
        e >>= 1;
    }
    acc
}

/// One strong-probable-prime round. n odd, n > 2, n - 1 = d·2^s.
fn sprp(n: u64, d: u64, s: u32, base: u64) -> bool {
    let a = base % n;
    if a == 0 {
        return true;
    }
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Exact primality verdict for any 64-bit input. Deterministic: the base
/// sets are proven to have no strong pseudoprimes in their ranges.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    // n > 97² is guaranteed odd here
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    let bases: &[u64] = if n < 3_215_031_751 {
        &BASES_32
    } else {
        &BASES_64
    };
    bases.iter().all(|&b| sprp(n, d, s, b))
}
