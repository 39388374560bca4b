//! Closed forms and numeric evaluation of `zeta(s)` and `L(s, D)`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::bernoulli::{bernoulli, generalized_bernoulli};
use super::kronecker::Discriminant;
use super::primes::factorize;
use crate::error::{Error, Result};
use crate::symbolic::SymbolicReal;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `zeta(m) = (2 pi)^m |B_m| / (2 m!)` for even `m >= 2`.
pub fn zeta_exact(m: u32) -> Result<SymbolicReal> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::ZetaArgument(m));
    }
    let b = bernoulli(m)?;
    let b = if b < BigRational::from_integer(0.into()) { -b } else { b };
    let q = b * BigRational::new(BigInt::one() << m as usize, factorial(m) * 2);
    Ok(SymbolicReal::rational(q).mul(&SymbolicReal::pi_pow(m as i32)))
}

/// Exact `L(s, D)` when the character parity matches `s`.
///
/// Primitive characters use the functional-equation closed form in terms of `B_{s,chi}`;
/// imprimitive labels `D = D0 f^2` multiply the primitive value by the missing Euler factors.
pub fn l_value_exact(s: u32, d: Discriminant) -> Result<SymbolicReal> {
    if s == 0 {
        return Err(Error::ParityMismatch { s, d: d.get() });
    }
    let (d0, f) = d.fundamental();
    let primitive = if d0.get() == 1 {
        zeta_exact(s).map_err(|_| Error::ParityMismatch { s, d: d.get() })?
    } else {
        let odd = d0.get() < 0;
        if odd != (s % 2 == 1) {
            return Err(Error::ParityMismatch { s, d: d.get() });
        }
        let delta = u32::from(odd);
        let sign: i64 = if (1 + (s - delta) / 2).is_multiple_of(2) { 1 } else { -1 };
        let conductor = d0.modulus();
        let b = generalized_bernoulli(s, d0)?;
        // sign * sqrt(f) * (2 pi / f)^s * B / (2 s!)
        let q = b
            * BigRational::from_integer(BigInt::from(sign) << s as usize)
            / BigRational::from_integer(num_traits::pow(BigInt::from(conductor), s as usize) * factorial(s) * 2);
        SymbolicReal::rational(q)
            .mul(&SymbolicReal::pi_pow(s as i32))
            .mul(&SymbolicReal::sqrt_int(conductor))
    };
    if f == 1 {
        return Ok(primitive);
    }
    let mut correction = BigRational::one();
    for p in factorize(f as i128)?.primes() {
        let chi = d0.chi(p as i64);
        let ps = BigRational::from_integer(num_traits::pow(BigInt::from(p), s as usize));
        correction *= BigRational::one() - BigRational::from_integer(chi.into()) / ps;
    }
    Ok(primitive.scale(&correction))
}

/// Euler–Maclaurin evaluation of `zeta(s)` for real `s > 1`.
fn zeta_numeric(s: f64) -> f64 {
    const N: u32 = 1000;
    let mut acc = 0.0;
    for n in (1..N).rev() {
        acc += libm::pow(n as f64, -s);
    }
    let n = N as f64;
    acc + libm::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * libm::pow(n, -s) + s * libm::pow(n, -s - 1.0) / 12.0
        - s * (s + 1.0) * (s + 2.0) * libm::pow(n, -s - 3.0) / 720.0
}

/// Hard cap on the number of series terms.
const MAX_TERMS: u64 = 500_000_000;

/// `L(s, D)` by a truncated character sum whose tail is below `tol`.
///
/// For nonprincipal characters partial summation bounds the tail after `N` terms by
/// `|D| N^{-s}`; principal labels go through `zeta(s)` with the missing Euler factors.
pub fn l_value_numeric(s: f64, d: Discriminant, tol: f64) -> Result<f64> {
    if !(s > 1.0) || !(tol > 0.0) || !s.is_finite() {
        return Err(Error::NonConvergent(format!("s = {s}, tol = {tol}")));
    }
    let (d0, f) = d.fundamental();
    if d0.get() == 1 {
        let mut value = zeta_numeric(s);
        if f > 1 {
            for p in factorize(f as i128)?.primes() {
                value *= 1.0 - libm::pow(p as f64, -s);
            }
        }
        return Ok(value);
    }
    let modulus = d.modulus();
    let terms = libm::ceil(libm::pow(modulus as f64 / tol, 1.0 / s));
    if !(terms < MAX_TERMS as f64) {
        return Err(Error::NonConvergent(format!("{terms} terms needed for tol {tol}")));
    }
    let terms = (terms as u64).max(modulus);
    let table: Vec<i8> = (0..modulus).map(|a| d.chi(a as i64)).collect();
    let mut acc = 0.0;
    for n in (1..=terms).rev() {
        let chi = table[(n % modulus) as usize];
        if chi != 0 {
            acc += chi as f64 * libm::pow(n as f64, -s);
        }
    }
    Ok(acc)
}
