use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::kronecker::Discriminant;
use crate::error::{Error, Result};

/// Largest Bernoulli index served by default.
pub const DEFAULT_BOUND: u32 = 64;

fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(c.clone());
    }
    row
}

/// `B_0, ..., B_m` with the convention `B_1 = -1/2`.
pub fn bernoulli_numbers(m: u32) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(m as usize + 1);
    b.push(BigRational::one());
    for n in 1..=m {
        let row = binomial_row(n + 1);
        let mut acc = BigRational::zero();
        for (j, bj) in b.iter().enumerate() {
            acc += BigRational::from_integer(row[j].clone()) * bj;
        }
        b.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
    }
    b
}

/// Exact Bernoulli number `B_m` for `m <= bound`.
pub fn bernoulli_bounded(m: u32, bound: u32) -> Result<BigRational> {
    if m > bound {
        return Err(Error::BernoulliBound { index: m, bound });
    }
    Ok(bernoulli_numbers(m).pop().expect("nonempty"))
}

pub fn bernoulli(m: u32) -> Result<BigRational> {
    bernoulli_bounded(m, DEFAULT_BOUND)
}

/// Bernoulli polynomial `B_m(x)` given the numbers `B_0..B_m`.
fn bernoulli_polynomial(numbers: &[BigRational], m: u32, x: &BigRational) -> BigRational {
    let row = binomial_row(m);
    let mut acc = BigRational::zero();
    let mut xpow = BigRational::one();
    // sum_j C(m, j) B_{m-j} x^j
    for j in 0..=m as usize {
        acc += BigRational::from_integer(row[j].clone()) * &numbers[m as usize - j] * &xpow;
        xpow *= x;
    }
    acc
}

/// Generalized Bernoulli number `B_{m, chi_D}`.
///
/// For `D = 1` this is the ordinary `B_m`; otherwise
/// `|D|^(m-1) * sum_{a=1}^{|D|} chi_D(a) B_m(a/|D|)`, which also covers imprimitive labels.
pub fn generalized_bernoulli(m: u32, d: Discriminant) -> Result<BigRational> {
    if m > DEFAULT_BOUND {
        return Err(Error::BernoulliBound { index: m, bound: DEFAULT_BOUND });
    }
    if d.get() == 1 {
        return bernoulli(m);
    }
    let numbers = bernoulli_numbers(m);
    let f = d.modulus();
    let mut acc = BigRational::zero();
    for a in 1..=f {
        let chi = d.chi(a as i64);
        if chi == 0 {
            continue;
        }
        let x = BigRational::new(BigInt::from(a), BigInt::from(f));
        let term = bernoulli_polynomial(&numbers, m, &x);
        if chi > 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    let scale = num_traits::pow(BigInt::from(f), m as usize - 1);
    Ok(acc * BigRational::from_integer(scale))
}
