//! `Psi(t) = |N_t / t^{2 rho} - C|`, its record envelope and log-log power-law fits.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::coefficient::MainCoefficient;
use crate::counting::CountSeries;
use crate::error::{Error, Result};

/// Fractional bits of the fixed-point `C` used when evaluating `Psi`.
const C_BITS: u32 = 128;

#[derive(Debug, Clone, PartialEq)]
pub struct PsiSeries {
    /// `(t, Psi(t))` for `t = 1..=T`.
    pub points: Vec<(u64, f64)>,
    pub c_numeric: f64,
    pub two_rho: u32,
}

impl PsiSeries {
    pub fn t_max(&self) -> u64 {
        self.points.last().map_or(0, |p| p.0)
    }

    pub fn at(&self, t: u64) -> f64 {
        self.points[t as usize - 1].1
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub sigma: f64,
    pub b: f64,
    pub envelope: Vec<(u64, f64)>,
    /// `(t_min, T)`.
    pub window: (u64, u64),
    pub point_count: usize,
}

/// Evaluate `Psi` on `1..=T`. The difference `N_t - C t^{2 rho}` is taken exactly against a
/// 128-bit fixed-point `C` when `C` is known in closed form.
pub fn psi_series(counts: &CountSeries, coefficient: &MainCoefficient) -> Result<PsiSeries> {
    if coefficient.is_zero() {
        return Err(Error::ExperimentInvalid);
    }
    let two_rho = counts.form.two_rho();
    if coefficient.two_rho != num_rational::Ratio::from_integer(two_rho as i64) {
        return Err(Error::InvalidParameter(format!(
            "coefficient exponent {} does not match the counted form",
            coefficient.two_rho
        )));
    }
    let scale = libm::ldexp(1.0, C_BITS as i32);
    let fixed = coefficient.c.as_ref().map(|c| c.fixed_point(C_BITS));
    let points = (1..=counts.t_max)
        .map(|t| {
            let n = counts.at(t);
            let psi = match &fixed {
                Some(c) => {
                    let power = num_traits::pow(BigInt::from(t), two_rho as usize);
                    let diff = ((BigInt::from(n) << C_BITS as usize) - c * &power).abs();
                    let denom = power.to_f64().unwrap_or(f64::INFINITY) * scale;
                    diff.to_f64().unwrap_or(f64::INFINITY) / denom
                }
                None => libm::fabs(n as f64 / libm::pow(t as f64, two_rho as f64) - coefficient.numeric),
            };
            (t, psi)
        })
        .collect();
    Ok(PsiSeries { points, c_numeric: coefficient.numeric, two_rho })
}

/// Points `(m, Psi(m))` with `m >= t_min` and `Psi(m) > Psi(l)` for every later `l`,
/// sorted by `t`. Zero values are never records.
pub fn envelope(psi: &PsiSeries, t_min: u64) -> Result<Vec<(u64, f64)>> {
    if t_min == 0 || t_min >= psi.t_max() {
        return Err(Error::InvalidParameter(format!("t_min = {t_min} must lie in [1, T)")));
    }
    let mut best = 0.0f64;
    let mut out = Vec::new();
    for &(t, v) in psi.points.iter().rev().take_while(|p| p.0 >= t_min) {
        if v > best {
            best = v;
            out.push((t, v));
        }
    }
    if out.is_empty() {
        return Err(Error::EmptyEnvelope);
    }
    out.reverse();
    Ok(out)
}

/// Least-squares fit of `y = B x^sigma` in log-log coordinates; returns `(sigma, B)`.
pub fn power_law_fit(points: &[(f64, f64)]) -> Result<(f64, f64)> {
    if points.len() < 2 {
        return Err(Error::FitDegenerate("fewer than two points"));
    }
    if points.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0)) {
        return Err(Error::FitDegenerate("coordinates must be positive"));
    }
    let h = points.len() as f64;
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (libm::log(x), libm::log(y))).collect();
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / h;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / h;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for &(lx, ly) in &logs {
        sxx += (lx - mean_x) * (lx - mean_x);
        sxy += (lx - mean_x) * (ly - mean_y);
    }
    if sxx <= 0.0 {
        return Err(Error::FitDegenerate("all x coordinates coincide"));
    }
    let sigma = sxy / sxx;
    Ok((sigma, libm::exp(mean_y - sigma * mean_x)))
}

/// Envelope of `Psi` on `[t_min, T]` and its power-law fit.
pub fn estimate_decay(counts: &CountSeries, coefficient: &MainCoefficient, t_min: u64) -> Result<FitResult> {
    fit_psi(&psi_series(counts, coefficient)?, t_min)
}

pub fn fit_psi(psi: &PsiSeries, t_min: u64) -> Result<FitResult> {
    let envelope = envelope(psi, t_min)?;
    let xy: Vec<(f64, f64)> = envelope.iter().map(|&(t, v)| (t as f64, v)).collect();
    let (sigma, b) = power_law_fit(&xy)?;
    Ok(FitResult { sigma, b, point_count: envelope.len(), envelope, window: (t_min, psi.t_max()) })
}

/// `10^round(log10(T) / 2)`.
pub fn default_t_min(t_max: u64) -> u64 {
    let e = libm::round(libm::log10(t_max.max(1) as f64) / 2.0) as u32;
    10u64.pow(e).min(t_max.saturating_sub(1)).max(1)
}

/// Rows `[t, Psi(t), c_1(t), c_2(t), c_3(t)]` over the envelope, where
/// `c_i(t) = Psi(t_0) (t / t_0)^{e_i}` and `t_0` is the first envelope point.
pub fn reference_curves(envelope: &[(u64, f64)], exponents: [f64; 3]) -> Vec<[f64; 5]> {
    let Some(&(t0, psi0)) = envelope.first() else {
        return Vec::new();
    };
    envelope
        .iter()
        .map(|&(t, v)| {
            let r = t as f64 / t0 as f64;
            let c = exponents.map(|e| psi0 * libm::pow(r, e));
            [t as f64, v, c[0], c[1], c[2]]
        })
        .collect()
}
