//! Prime-field arithmetic context. All form coefficients are residues
//! mod a prime `p`; the field object is passed explicitly wherever
//! arithmetic happens, so values stay plain `u64`s.

use crate::error::{Error, Result};

pub const DEFAULT_FIELD_CHAR: u64 = 1_000_003;

/// The prime field `F_p`. Genericity arguments require `p` to exceed
/// the degree sum of every scroll processed under this config; the
/// degree-dependent operations enforce that at entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FieldConfig {
    p: u64,
}

impl FieldConfig {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 63 {
            return Err(Error::CharTooLarge { p });
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime { p });
        }
        Ok(FieldConfig { p })
    }

    pub fn default_field() -> Self {
        FieldConfig { p: DEFAULT_FIELD_CHAR }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p { s - self.p } else { s }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b { a - b } else { a + self.p - b }
    }

    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 { 0 } else { self.p - a }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Balanced representative in `[-p/2, p/2]`, for readable printing.
    pub fn balanced(&self, a: u64) -> i64 {
        if a as u128 * 2 > self.p as u128 {
            -((self.p - a) as i64)
        } else {
            a as i64
        }
    }

    /// Guards operations whose correctness needs `p > degree`.
    pub fn require_exceeds(&self, degree: usize) -> Result<()> {
        if (degree as u128) >= self.p as u128 {
            return Err(Error::FieldTooSmall { p: self.p, required: degree });
        }
        Ok(())
    }
}

// Deterministic Miller-Rabin for u64; this witness set decides
// primality for every 64-bit integer.
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n.is_multiple_of(q) {
            return false;
        }
    }
    let mulmod = |a: u64, b: u64| (a as u128 * b as u128 % n as u128) as u64;
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        base %= n;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            exp >>= 1;
        }
        acc
    };
    let mut d = n - 1;
    let mut s = 0u32;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &w in &WITNESSES {
        let mut x = powmod(w, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Minimal deterministic PRNG (splitmix64). Every randomized operation
/// takes one of these explicitly; there is no global generator.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `[0, bound)` by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = u64::MAX - u64::MAX % bound;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % bound;
            }
        }
    }
}
