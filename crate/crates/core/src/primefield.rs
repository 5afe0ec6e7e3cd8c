//! u64 modular arithmetic, primality testing and deterministic prime streams.

use std::sync::LazyLock;

pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

/// Modular inverse by extended Euclid; panics if gcd(a, p) != 1.
pub fn invmod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    assert!(r0 == 1, "not invertible");
    (s0.rem_euclid(p as i128)) as u64
}

/// Deterministic Miller-Rabin, exact for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

static SMALL_PRIMES: LazyLock<Vec<u64>> = LazyLock::new(|| {
    // Sieve enough primes for the largest certification budgets.
    let limit: usize = 2_000_000;
    let mut sieve = vec![true; limit];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i < limit {
        if sieve[i] {
            let mut j = i * i;
            while j < limit {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..limit).filter(|&k| sieve[k]).map(|k| k as u64).collect()
});

/// Ascending small primes (plenty for 10^5-prime scan budgets).
pub fn small_primes() -> &'static [u64] {
    &SMALL_PRIMES
}

/// Deterministic stream of large primes used for CRT reconstruction,
/// descending from just below 2^62.
pub fn crt_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = (1u64 << 62) - 1;
    while out.len() < count {
        if is_prime_u64(candidate) {
            out.push(candidate);
        }
        candidate -= 2;
    }
    out
}
