//! Global density `delta(Q, t) = prod_p delta_p(Q, t)`.
//!
//! The product is written as a closed-form Euler product over all primes, whose factor at
//! `p` is the generic value `f_p` of `delta_p`, times the finite correction
//! `prod_{p in S} delta_p / f_p` over the primes `S` dividing `2 t det` (and `d` in the
//! complex case), where the generic value may fail.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{FieldSpec, FormSpec};
use crate::local_density::{local_density, LocalDensityResult};
use crate::number_theory::kronecker::Discriminant;
use crate::number_theory::lseries::{l_value_exact, l_value_numeric, zeta_exact};
use crate::number_theory::primes::{factorize, primes_up_to};
use crate::symbolic::{rational_to_f64, SymbolicReal};

/// Which label the real quadratic character receives when the squarefree part is trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum DiscriminantRule {
    /// The trivial label 1 is replaced by 4 (principal character modulo 2).
    #[default]
    WorkedExample,
    /// Labels exactly as produced by the squarefree split.
    Literal,
}

/// Closed-form part of the density.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesPart {
    /// `L(s, D) / zeta(2s)`.
    LOverZeta { s: u32, d: Discriminant },
    /// `1 / L(s, D)`.
    InverseL { s: u32, d: Discriminant },
    /// `1 / zeta(s)`.
    InverseZeta { s: u32 },
}

impl SeriesPart {
    /// Generic local factor `f_p`, the Euler factor of the closed form at `p`.
    pub fn euler_factor(&self, p: u64) -> BigRational {
        let p_pow = |e: u32| BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(p), e as usize));
        let one = BigRational::one();
        match *self {
            SeriesPart::LOverZeta { s, d } => match d.chi(p as i64) {
                0 => one - p_pow(2 * s),
                chi => one + BigRational::from_integer(chi.into()) * p_pow(s),
            },
            SeriesPart::InverseL { s, d } => one - BigRational::from_integer(d.chi(p as i64).into()) * p_pow(s),
            SeriesPart::InverseZeta { s } => one - p_pow(s),
        }
    }

    /// Exponent governing the decay of `|f_p - 1|`.
    pub fn decay(&self) -> u32 {
        match *self {
            SeriesPart::LOverZeta { s, .. } | SeriesPart::InverseL { s, .. } | SeriesPart::InverseZeta { s } => s,
        }
    }

    /// Exact value when the required L-value has a closed form.
    pub fn exact(&self) -> Result<SymbolicReal> {
        match *self {
            SeriesPart::LOverZeta { s, d } => l_value_exact(s, d)?.div(&zeta_exact(2 * s)?),
            SeriesPart::InverseL { s, d } => l_value_exact(s, d)?.recip(),
            SeriesPart::InverseZeta { s } => zeta_exact(s)?.recip(),
        }
    }

    pub fn numeric(&self) -> Result<f64> {
        if let Ok(v) = self.exact() {
            return Ok(v.numeric());
        }
        let tol = 1e-13;
        match *self {
            SeriesPart::LOverZeta { s, d } => {
                Ok(l_value_numeric(s as f64, d, tol)? / zeta_exact(2 * s)?.numeric())
            }
            SeriesPart::InverseL { s, d } => Ok(1.0 / l_value_numeric(s as f64, d, tol)?),
            SeriesPart::InverseZeta { s } => Ok(1.0 / l_value_numeric(s as f64, Discriminant::TRIVIAL, tol)?),
        }
    }
}

impl fmt::Display for SeriesPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SeriesPart::LOverZeta { s, d } => write!(f, "L({s},{})/zeta({})", d.get(), 2 * s),
            SeriesPart::InverseL { s, d } => write!(f, "1/L({s},{})", d.get()),
            SeriesPart::InverseZeta { s } => write!(f, "1/zeta({s})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GlobalDensity {
    /// Exact value; `None` when only a numeric value is available.
    pub exact: Option<SymbolicReal>,
    pub numeric: f64,
    pub series: SeriesPart,
    /// `delta_p` at every prime of `S`.
    pub bad_primes: Vec<LocalDensityResult>,
    /// `prod_{p in S} delta_p / f_p`.
    pub correction: BigRational,
}

impl GlobalDensity {
    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }
}

/// Squarefree part of a nonzero integer, sign included.
fn squarefree_part(n: i128) -> Result<i128> {
    let (_, b) = factorize(n)?.square_split();
    Ok(n.signum() * b as i128)
}

fn label(core: i128, rule: DiscriminantRule) -> Result<Discriminant> {
    let d = if core.rem_euclid(4) == 1 { core } else { 4 * core };
    let d = if d == 1 && rule == DiscriminantRule::WorkedExample { 4 } else { d };
    let d = i64::try_from(d).map_err(|_| Error::Overflow("discriminant label"))?;
    Discriminant::new(d)
}

/// Character label for a real form representing `target`.
///
/// Rank `m` odd: `(-1)^{(m-1)/2} b` with `t det = c^2 b`; rank even: `(-1)^{m/2} b` with
/// `det = c^2 b`. Values not `≡ 1 (mod 4)` are multiplied by 4.
pub fn discriminant_label_real(spec: &FormSpec, target: i64, rule: DiscriminantRule) -> Result<Discriminant> {
    if target == 0 {
        return Err(Error::ZeroTarget);
    }
    let m = spec.m();
    let det = spec.det();
    if m % 2 == 1 {
        let s = (m - 1) / 2;
        let n = det.checked_mul(target as i128).ok_or(Error::Overflow("t * det"))?;
        let sign = if s.is_multiple_of(2) { 1 } else { -1 };
        label(sign * squarefree_part(n)?, rule)
    } else {
        let sign = if (m / 2).is_multiple_of(2) { 1 } else { -1 };
        label(sign * squarefree_part(det)?, rule)
    }
}

/// Primes dividing `2 t det` (times `d` in the complex case).
pub fn exceptional_primes(spec: &FormSpec, target: i64) -> Result<Vec<u64>> {
    if target == 0 {
        return Err(Error::ZeroTarget);
    }
    let mut primes = vec![2u64];
    let mut push = |n: i128| -> Result<()> {
        for p in factorize(n)?.primes() {
            if !primes.contains(&p) {
                primes.push(p);
            }
        }
        Ok(())
    };
    push(target as i128)?;
    for &a in &spec.positive {
        push(a as i128)?;
    }
    push(spec.a as i128)?;
    if let Some(d) = spec.field.disc() {
        push(d as i128)?;
    }
    primes.sort_unstable();
    Ok(primes)
}

pub fn series_part(spec: &FormSpec, target: i64, rule: DiscriminantRule) -> Result<SeriesPart> {
    let m = spec.m();
    Ok(match spec.field {
        FieldSpec::Real if m % 2 == 1 => {
            SeriesPart::LOverZeta { s: (m - 1) / 2, d: discriminant_label_real(spec, target, rule)? }
        }
        FieldSpec::Real => SeriesPart::InverseL { s: m / 2, d: discriminant_label_real(spec, target, rule)? },
        FieldSpec::Complex { disc } if m % 2 == 1 => SeriesPart::InverseL { s: m, d: Discriminant::new(disc)? },
        FieldSpec::Complex { .. } => SeriesPart::InverseZeta { s: m },
    })
}

/// `delta(Q, target)` for either field.
pub fn delta_global(spec: &FormSpec, target: i64, rule: DiscriminantRule) -> Result<GlobalDensity> {
    let series = series_part(spec, target, rule)?;
    let mut bad_primes = Vec::new();
    let mut correction = BigRational::one();
    for p in exceptional_primes(spec, target)? {
        let local = local_density(spec, target, p)?;
        correction *= &local.value / series.euler_factor(p);
        bad_primes.push(local);
    }
    if correction.is_zero() {
        return Ok(GlobalDensity { exact: Some(SymbolicReal::zero()), numeric: 0.0, series, bad_primes, correction });
    }
    let exact = series.exact().ok().map(|v| v.scale(&correction));
    let numeric = match &exact {
        Some(v) => v.numeric(),
        None => series.numeric()? * rational_to_f64(&correction),
    };
    Ok(GlobalDensity { exact, numeric, series, bad_primes, correction })
}

pub fn delta_global_real(spec: &FormSpec, target: i64, rule: DiscriminantRule) -> Result<GlobalDensity> {
    if !spec.field.is_real() {
        return Err(Error::InvalidForm(format!("{spec} is not real")));
    }
    delta_global(spec, target, rule)
}

pub fn delta_global_complex(spec: &FormSpec, target: i64) -> Result<GlobalDensity> {
    if spec.field.is_real() {
        return Err(Error::InvalidForm(format!("{spec} is not complex")));
    }
    delta_global(spec, target, DiscriminantRule::default())
}

/// Truncated Euler product with an estimate of the omitted tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncatedProduct {
    pub value: f64,
    /// Bound on `|delta - value|`, floating-point rounding included.
    pub tail_bound: f64,
    /// False when the bound is heuristic (decay exponent 1, conditionally convergent tail).
    pub rigorous: bool,
}

/// `prod_{p <= bound} delta_p`, always including the primes of `S`.
pub fn delta_truncated_product(spec: &FormSpec, target: i64, bound: u64) -> Result<TruncatedProduct> {
    if bound < 50 {
        return Err(Error::InvalidParameter(format!("prime bound {bound} must be at least 50")));
    }
    let series = series_part(spec, target, DiscriminantRule::default())?;
    let mut primes = primes_up_to(bound);
    for p in exceptional_primes(spec, target)? {
        if p > bound {
            primes.push(p);
        }
    }
    // Compensated sum of log1p(delta_p - 1); the excess is exact before rounding.
    let (mut log_value, mut carry) = (0.0f64, 0.0f64);
    for &p in &primes {
        let local = local_density(spec, target, p)?.value;
        if local.is_zero() {
            return Ok(TruncatedProduct { value: 0.0, tail_bound: 0.0, rigorous: true });
        }
        let term = libm::log1p(rational_to_f64(&(local - BigRational::one()))) - carry;
        let next = log_value + term;
        carry = (next - log_value) - term;
        log_value = next;
    }
    let value = libm::exp(log_value);
    let big_p = bound as f64;
    let s = series.decay() as f64;
    let (eps, rigorous) = if series.decay() >= 2 {
        // sum_{n > P} n^{-s} / (1 - P^{-s}) bounds sum_{p > P} |log f_p|
        (libm::pow(big_p, 1.0 - s) / ((s - 1.0) * (1.0 - libm::pow(big_p, -s))), true)
    } else {
        let conductor = match series {
            SeriesPart::LOverZeta { d, .. } | SeriesPart::InverseL { d, .. } => d.modulus() as f64,
            SeriesPart::InverseZeta { .. } => 1.0,
        };
        let log = libm::log(conductor * big_p);
        (log * log / libm::sqrt(big_p), false)
    };
    let rounding = value * 64.0 * f64::EPSILON;
    Ok(TruncatedProduct { value, tail_bound: value * libm::expm1(eps) + rounding, rigorous })
}

/// Human description of the closed form, e.g. `L(2,4)/zeta(4) * 2/3`.
pub fn describe(density: &GlobalDensity) -> String {
    format!("{} * {}", density.series, density.correction)
}
