//! Exact constants of the shape `q * pi^e * sqrt(s)`.

use alloc::format;
use alloc::string::{String, ToString};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::number_theory::primes::{factorize, gcd};

/// `q * pi^e * sqrt(s)` with `q` rational, `e` an integer and `s` a squarefree positive integer.
///
/// Zero is stored as `0 * pi^0 * sqrt(1)`; every other value has a unique representation,
/// so structural equality is numeric equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymbolicReal {
    q: BigRational,
    e: i32,
    s: u64,
}

impl SymbolicReal {
    pub fn zero() -> Self {
        SymbolicReal { q: BigRational::zero(), e: 0, s: 1 }
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(q: BigRational) -> Self {
        Self::new(q, 0, 1).expect("radicand 1 is squarefree")
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(num.into(), den.into()))
    }

    /// `pi^e`.
    pub fn pi_pow(e: i32) -> Self {
        SymbolicReal { q: BigRational::one(), e, s: 1 }
    }

    /// Build from parts; `s` must be squarefree and positive.
    pub fn new(q: BigRational, e: i32, s: u64) -> Result<Self> {
        if s == 0 || !is_squarefree(s) {
            return Err(Error::MalformedSymbolic(format!("radicand {s} is not squarefree")));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        Ok(SymbolicReal { q, e, s })
    }

    /// `sqrt(n)` for a nonnegative integer, with the square part extracted.
    pub fn sqrt_int(n: u64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let (c, b) = factorize(n as i128).expect("nonzero").square_split();
        SymbolicReal { q: BigRational::from_integer(BigInt::from(c)), e: 0, s: b as u64 }
    }

    /// `sqrt(num / den)` for positive integers.
    pub fn sqrt_ratio(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Self::sqrt_int(num).div(&Self::sqrt_int(den))
    }

    pub fn coefficient(&self) -> &BigRational {
        &self.q
    }

    pub fn pi_exponent(&self) -> i32 {
        self.e
    }

    pub fn radicand(&self) -> u64 {
        self.s
    }

    pub fn is_zero(&self) -> bool {
        self.q.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = gcd(self.s, other.s);
        let s = (self.s / g) * (other.s / g);
        let q = &self.q * &other.q * BigRational::from_integer(BigInt::from(g));
        SymbolicReal { q, e: self.e + other.e, s }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/(q pi^e sqrt s) = sqrt(s) / (q s pi^e)
        let q = BigRational::one() / (&self.q * BigRational::from_integer(BigInt::from(self.s)));
        Ok(SymbolicReal { q, e: -self.e, s: self.s })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.recip()?))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        SymbolicReal { q: &self.q * r, e: self.e, s: self.s }
    }

    pub fn neg(&self) -> Self {
        SymbolicReal { q: -&self.q, e: self.e, s: self.s }
    }

    /// Sum of two constants with the same `pi` exponent and radicand.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.e != other.e || self.s != other.s {
            return Err(Error::IncompatibleTerms { e1: self.e, s1: self.s, e2: other.e, s2: other.s });
        }
        Self::new(&self.q + &other.q, self.e, self.s)
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Double-precision value.
    pub fn numeric(&self) -> f64 {
        rational_to_f64(&self.q)
            * libm::pow(core::f64::consts::PI, self.e as f64)
            * libm::sqrt(self.s as f64)
    }

    /// `floor(|self| * 2^bits)` with the sign of `self` (error below one unit from truncation
    /// of the guard bits).
    pub fn fixed_point(&self, bits: u32) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        let w = bits as usize + 64;
        let pi = pi_fixed(w);
        let root = (BigInt::from(self.s) << (2 * w)).sqrt();
        let (up, down) = (self.e.max(0) as usize, (-self.e).max(0) as usize);
        let num = self.q.numer().abs() * num_traits::pow(pi.clone(), up) * root * (BigInt::one() << (w * down));
        let den = self.q.denom() * num_traits::pow(pi, down) * (BigInt::one() << (w * up));
        let v = (num / den) >> 64usize;
        if self.q.is_negative() {
            -v
        } else {
            v
        }
    }

    /// Serialization `num/den*pi^e*sqrt(s)`; parsed back by [`FromStr`].
    pub fn to_canonical_string(&self) -> String {
        format!("{}/{}*pi^{}*sqrt({})", self.q.numer(), self.q.denom(), self.e, self.s)
    }
}

/// `pi * 2^bits` (truncated), from Machin's formula with guard bits.
pub fn pi_fixed(bits: usize) -> BigInt {
    let w = bits + 32;
    let one = BigInt::one() << w;
    let atan_inv = |x: u32| {
        let x2 = BigInt::from(x * x);
        let mut power = &one / BigInt::from(x);
        let mut sum = BigInt::zero();
        let mut k = 0u32;
        while !power.is_zero() {
            let term = &power / BigInt::from(2 * k + 1);
            if k.is_multiple_of(2) {
                sum += term;
            } else {
                sum -= term;
            }
            power /= &x2;
            k += 1;
        }
        sum
    };
    (atan_inv(5) * 16 - atan_inv(239) * 4) >> 32usize
}

/// Correctly scaled conversion of a big rational to `f64`.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if let Some(v) = q.to_f64() {
        if v.is_finite() && (v != 0.0 || q.is_zero()) {
            return v;
        }
    }
    // Fall back to shifting both parts into range.
    let (n, d) = (q.numer(), q.denom());
    let nb = n.bits() as i64;
    let db = d.bits() as i64;
    let shift = nb - db - 60;
    let scaled = if shift > 0 {
        (n.abs() / (d << (shift as usize))).to_f64().unwrap_or(f64::INFINITY)
    } else {
        ((n.abs() << ((-shift) as usize)) / d).to_f64().unwrap_or(f64::INFINITY)
    };
    let v = libm::ldexp(scaled, shift as i32);
    if n.is_negative() {
        -v
    } else {
        v
    }
}

fn is_squarefree(s: u64) -> bool {
    match factorize(s as i128) {
        Ok(f) => f.factors.iter().all(|&(_, e)| e == 1),
        Err(_) => false,
    }
}

impl fmt::Display for SymbolicReal {
    /// Human form: `15/2 * pi^-2`, `945/26 * sqrt(3)`, `5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = alloc::vec::Vec::new();
        let q = if self.q.is_integer() { self.q.numer().to_string() } else { self.q.to_string() };
        let trivial_q = self.q.is_one() && (self.e != 0 || self.s != 1);
        if !trivial_q {
            parts.push(q);
        }
        match self.e {
            0 => {}
            1 => parts.push("pi".into()),
            e => parts.push(format!("pi^{e}")),
        }
        if self.s != 1 {
            parts.push(format!("sqrt({})", self.s));
        }
        write!(f, "{}", parts.join(" * "))
    }
}

impl FromStr for SymbolicReal {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::MalformedSymbolic(text.into());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut acc = Self::one();
        for factor in compact.split('*') {
            let term = if let Some(exp) = factor.strip_prefix("pi^") {
                Self::pi_pow(exp.parse::<i32>().map_err(|_| bad())?)
            } else if factor == "pi" {
                Self::pi_pow(1)
            } else if let Some(inner) = factor.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
                Self::sqrt_int(inner.parse::<u64>().map_err(|_| bad())?)
            } else {
                let r = match factor.split_once('/') {
                    Some((a, b)) => {
                        let a: BigInt = a.parse().map_err(|_| bad())?;
                        let b: BigInt = b.parse().map_err(|_| bad())?;
                        if b.is_zero() {
                            return Err(bad());
                        }
                        BigRational::new(a, b)
                    }
                    None => BigRational::from_integer(factor.parse::<BigInt>().map_err(|_| bad())?),
                };
                Self::rational(r)
            };
            acc = acc.mul(&term);
        }
        Ok(acc)
    }
}
