//! Main coefficient `C(Q, -k) = C'(Q) delta(Q, -k)` of `N_t(Q, -k) ~ C t^{2 rho}`.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::One;

use crate::error::{Error, Result};
use crate::forms::{FieldSpec, FormSpec};
use crate::global_density::{delta_global, DiscriminantRule, GlobalDensity};
use crate::symbolic::SymbolicReal;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn double_factorial(n: u32) -> BigInt {
    (1..=n).rev().step_by(2).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn int(n: impl Into<BigInt>) -> SymbolicReal {
    SymbolicReal::rational(BigRational::from_integer(n.into()))
}

/// `C'(Q)`: the density-free part of the main coefficient.
///
/// Real: `2 pi^{n/2} / ((n-1) Gamma(n/2)) * a^{(n-2)/2} / sqrt(a_1 ... a_n)`.
/// Complex: `2^{n+1} pi^{n+1} / (n! |d|^{(n+1)/2}) * a^{n-1} / (a_1 ... a_n)`.
pub fn c_prime(spec: &FormSpec) -> Result<SymbolicReal> {
    let n = spec.n();
    let a = spec.a;
    let prod = spec.positive_product();
    match spec.field {
        FieldSpec::Real => {
            // pi^{n/2} / Gamma(n/2)
            let pi_over_gamma = if n.is_multiple_of(2) {
                SymbolicReal::pi_pow((n / 2) as i32).div(&int(factorial(n / 2 - 1)))?
            } else {
                let k = (n - 1) / 2;
                SymbolicReal::pi_pow(k as i32)
                    .mul(&int(BigInt::one() << k as usize))
                    .div(&int(double_factorial(n - 2)))?
            };
            let a_pow = if n.is_multiple_of(2) {
                int(num_traits::pow(BigInt::from(a), (n as usize - 2) / 2))
            } else {
                // a^{(n-2)/2} = a^{(n-3)/2} sqrt(a)
                int(num_traits::pow(BigInt::from(a), (n as usize - 3) / 2)).mul(&SymbolicReal::sqrt_int(a))
            };
            let root = u64::try_from(prod).map_err(|_| Error::Overflow("product of coefficients"))?;
            int(2)
                .mul(&pi_over_gamma)
                .div(&int(n - 1))?
                .mul(&a_pow)
                .div(&SymbolicReal::sqrt_int(root))
        }
        FieldSpec::Complex { disc } => {
            let d = disc.unsigned_abs();
            let d_pow = if n % 2 == 1 {
                int(num_traits::pow(BigInt::from(d), (n as usize).div_ceil(2)))
            } else {
                int(num_traits::pow(BigInt::from(d), n as usize / 2)).mul(&SymbolicReal::sqrt_int(d))
            };
            int(BigInt::one() << (n as usize + 1))
                .mul(&SymbolicReal::pi_pow(n as i32 + 1))
                .mul(&int(num_traits::pow(BigInt::from(a), n as usize - 1)))
                .div(&int(factorial(n) * BigInt::from(prod)))?
                .div(&d_pow)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MainCoefficient {
    pub c_prime: SymbolicReal,
    pub delta: GlobalDensity,
    /// Exact `C`; `None` when the density is only known numerically.
    pub c: Option<SymbolicReal>,
    pub numeric: f64,
    pub rho: Ratio<i64>,
    pub two_rho: Ratio<i64>,
}

impl MainCoefficient {
    pub fn is_zero(&self) -> bool {
        self.numeric == 0.0
    }
}

/// `C(Q, -k)`; zero exactly when `-k` is not represented locally.
pub fn main_coefficient(spec: &FormSpec, k: i64, rule: DiscriminantRule) -> Result<MainCoefficient> {
    if k == 0 {
        return Err(Error::ZeroTarget);
    }
    let c_prime = c_prime(spec)?;
    let delta = delta_global(spec, -k, rule)?;
    let c = delta.exact.as_ref().map(|d| c_prime.mul(d));
    let numeric = match &c {
        Some(v) => v.numeric(),
        None => c_prime.numeric() * delta.numeric,
    };
    let rho = spec.rho();
    Ok(MainCoefficient { c_prime, delta, c, numeric, rho, two_rho: rho * 2 })
}
