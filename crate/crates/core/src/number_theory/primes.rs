//! Primality, factorization and modular helpers on machine integers.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Trial division bound used before switching to Pollard rho.
pub const TRIAL_BOUND: u64 = 100_000;

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Modular inverse of `a` modulo `m` when `gcd(a, m) = 1`.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Exponent of `p` in `n` (`n != 0`).
pub fn valuation(mut n: u128, p: u64) -> u32 {
    debug_assert!(n != 0 && p > 1);
    let p = p as u128;
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = libm::sqrt(n as f64) as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Deterministic Miller–Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent's variant of Pollard rho. `n` must be odd and composite.
fn pollard_rho(n: u64) -> u64 {
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g, mut r, mut q) = (2u64, 2u64, 1u64, 1u64, 1u64);
        let mut ys = 2u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..core::cmp::min(128, r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

fn push_prime_factors(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_rho(n);
    push_prime_factors(d, out);
    push_prime_factors(n / d, out);
}

/// Signed prime factorization `sign * prod p^e`, primes ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> i128 {
        let mut v: i128 = self.sign as i128;
        for &(p, e) in &self.factors {
            v *= (p as i128).pow(e);
        }
        v
    }

    /// Distinct primes dividing the number.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Split `|n| = c^2 * b` with `b` squarefree; returns `(c, b)`.
    pub fn square_split(&self) -> (u128, u128) {
        let (mut c, mut b) = (1u128, 1u128);
        for &(p, e) in &self.factors {
            c *= (p as u128).pow(e / 2);
            if e % 2 == 1 {
                b *= p as u128;
            }
        }
        (c, b)
    }
}

/// Factor a nonzero integer with `|n| < 2^64`.
///
/// Trial division by numbers up to [`TRIAL_BOUND`] (2, 3 and a 6k±1 wheel), then
/// Miller–Rabin and Pollard rho on the cofactor.
pub fn factorize(n: i128) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::FactorZero);
    }
    if n.unsigned_abs() > u64::MAX as u128 {
        return Err(Error::FactorRange(n));
    }
    let sign = if n < 0 { -1 } else { 1 };
    let mut m = n.unsigned_abs() as u64;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let take = |m: &mut u64, p: u64, factors: &mut Vec<(u64, u32)>| {
        if (*m).is_multiple_of(p) {
            let mut e = 0;
            while (*m).is_multiple_of(p) {
                *m /= p;
                e += 1;
            }
            factors.push((p, e));
        }
    };
    take(&mut m, 2, &mut factors);
    take(&mut m, 3, &mut factors);
    let mut d = 5u64;
    while d < TRIAL_BOUND && d * d <= m {
        take(&mut m, d, &mut factors);
        take(&mut m, d + 2, &mut factors);
        d += 6;
    }
    if m > 1 {
        if d * d > m {
            factors.push((m, 1));
        } else {
            let mut rest = Vec::new();
            push_prime_factors(m, &mut rest);
            rest.sort_unstable();
            for p in rest {
                match factors.last_mut() {
                    Some((q, e)) if *q == p => *e += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }
    }
    Ok(Factorization { sign, factors })
}

/// Sieve of Eratosthenes, primes `<= n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Square roots of `a` modulo an odd prime `p` (Tonelli–Shanks). Returns `None` for
/// non-residues.
pub fn sqrt_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return Some(0);
    }
    if p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(pow_mod(a, (p + 1) / 4, p));
    }
    let s = (p - 1).trailing_zeros();
    let q = (p - 1) >> s;
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}
