//! Number-theoretic transforms modulo primes `c * 2^25 + 1 < 2^32`, with CRT
//! reconstruction of nonnegative integers below `u128::MAX`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::number_theory::primes::{factorize, inv_mod, pow_mod};

/// Transform moduli; each admits power-of-two lengths up to `2^25`.
pub const PRIMES: [u64; 6] = [4194304001, 3892314113, 3489660929, 3221225473, 2885681153, 2717908993];

/// Largest supported transform length.
pub const MAX_LEN: usize = 1 << 25;

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    let factors: Vec<u64> = factorize((p - 1) as i128).expect("p > 1").primes().collect();
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("prime modulus")
}

/// Prime modulus with its primitive root.
#[derive(Debug, Clone, Copy)]
pub struct Modulus {
    pub p: u64,
    pub g: u64,
}

impl Modulus {
    pub fn new(p: u64) -> Self {
        Modulus { p, g: primitive_root(p) }
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// In-place iterative radix-2 transform; `invert` applies the inverse including `1/len`.
    pub fn transform(&self, a: &mut [u64], invert: bool) {
        let n = a.len();
        assert!(n.is_power_of_two() && n <= MAX_LEN);
        let p = self.p;
        let mut j = 0;
        for i in 1..n {
            let mut bit = n >> 1;
            while j & bit != 0 {
                j ^= bit;
                bit >>= 1;
            }
            j ^= bit;
            if i < j {
                a.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= n {
            let mut w = pow_mod(self.g, (p - 1) / len as u64, p);
            if invert {
                w = inv_mod(w, p).expect("unit");
            }
            let half = len / 2;
            let mut twiddles = Vec::with_capacity(half);
            let mut t = 1u64;
            for _ in 0..half {
                twiddles.push(t);
                t = self.mul(t, w);
            }
            for chunk in a.chunks_mut(len) {
                let (lo, hi) = chunk.split_at_mut(half);
                for i in 0..half {
                    let u = lo[i];
                    let v = self.mul(hi[i], twiddles[i]);
                    lo[i] = if u + v >= p { u + v - p } else { u + v };
                    hi[i] = if u >= v { u - v } else { u + p - v };
                }
            }
            len <<= 1;
        }
        if invert {
            let inv_n = inv_mod(n as u64 % p, p).expect("unit");
            for x in a.iter_mut() {
                *x = self.mul(*x, inv_n);
            }
        }
    }

    /// `f * g mod (x^{len}, p)` for residues already reduced modulo `p`.
    pub fn multiply_truncated(&self, f: &[u32], g: &[u32], len: usize) -> Vec<u32> {
        let size = (f.len().min(len) + g.len().min(len)).max(2).next_power_of_two();
        let load = |src: &[u32]| {
            let mut v = vec![0u64; size];
            for (d, &s) in v.iter_mut().zip(src.iter().take(len)) {
                *d = s as u64;
            }
            v
        };
        let mut a = load(f);
        let mut b = load(g);
        self.transform(&mut a, false);
        self.transform(&mut b, false);
        for (x, y) in a.iter_mut().zip(&b) {
            *x = self.mul(*x, *y);
        }
        drop(b);
        self.transform(&mut a, true);
        a.truncate(len);
        a.into_iter().map(|x| x as u32).collect()
    }
}

/// Number of moduli whose product exceeds `2^bits`.
pub fn moduli_needed(bits: f64) -> Result<usize> {
    let mut acc = 0.0;
    for (i, &p) in PRIMES.iter().enumerate() {
        acc += libm::log2(p as f64);
        if acc > bits + 1.0 {
            return Ok(i + 1);
        }
    }
    Err(Error::Overflow("coefficient bound exceeds the available moduli"))
}

/// Garner reconstruction of the value whose residues modulo `PRIMES[..residues.len()]`
/// are given, assuming it lies below the product of those moduli.
pub struct Crt {
    moduli: Vec<u64>,
    /// `inverses[i][j] = p_j^{-1} mod p_i` for `j < i`.
    inverses: Vec<Vec<u64>>,
}

impl Crt {
    pub fn new(count: usize) -> Self {
        let moduli: Vec<u64> = PRIMES[..count].to_vec();
        let inverses = (0..count)
            .map(|i| (0..i).map(|j| inv_mod(moduli[j] % moduli[i], moduli[i]).expect("coprime")).collect())
            .collect();
        Crt { moduli, inverses }
    }

    pub fn reconstruct(&self, residues: &[u64]) -> Result<u128> {
        let k = self.moduli.len();
        let mut digits = vec![0u64; k];
        for i in 0..k {
            let p = self.moduli[i];
            let mut x = residues[i] % p;
            for j in 0..i {
                x = (x + p - digits[j] % p) % p * self.inverses[i][j] % p;
            }
            digits[i] = x;
        }
        let mut value: u128 = 0;
        let mut radix: u128 = 1;
        for i in 0..k {
            if digits[i] != 0 {
                let term = radix.checked_mul(digits[i] as u128).ok_or(Error::Overflow("CRT reconstruction"))?;
                value = value.checked_add(term).ok_or(Error::Overflow("CRT reconstruction"))?;
            }
            if i + 1 < k {
                radix = match radix.checked_mul(self.moduli[i] as u128) {
                    Some(r) => r,
                    None if digits[i + 1..].iter().all(|&d| d == 0) => break,
                    None => return Err(Error::Overflow("CRT reconstruction")),
                };
            }
        }
        Ok(value)
    }
}
