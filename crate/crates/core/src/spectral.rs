//! Eigenvalue-side thresholds and the translation of a fitted decay exponent `sigma` into
//! estimates of `tau` and `lambda_1`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::forms::FieldSpec;

pub const DEFAULT_MARGIN: f64 = 0.05;

type Q = Ratio<i64>;

fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

fn to_f64(x: Q) -> f64 {
    x.to_f64().expect("small rationals convert")
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralContext {
    pub field: FieldSpec,
    pub n: u32,
    pub rho: Q,
    /// Unconditional bound on `tau - 2 rho`.
    pub upsilon: Q,
    /// `tau - 2 rho` when `lambda_1 >= 4n/(n+1)^2 rho^2`.
    pub omega: Q,
    /// `4n/(n+1)^2 rho^2`.
    pub omega_lambda: Q,
    /// Known lower bound for `lambda_1` of congruence subgroups.
    pub known_lower_bound: Q,
}

impl SpectralContext {
    pub fn rho_squared(&self) -> Q {
        self.rho * self.rho
    }

    /// `2 rho n / (n + 1)`: below this `tau` carries no spectral information.
    pub fn visibility_threshold(&self) -> Q {
        self.rho * 2 * q(self.n as i64, self.n as i64 + 1)
    }

    /// Exact `lambda_1` matching a rational `sigma`, when `tau` is above the visibility threshold.
    pub fn lambda_exact(&self, sigma: Q) -> Option<Q> {
        let tau = self.rho * 2 + sigma;
        (tau > self.visibility_threshold()).then(|| {
            let nu = tau - self.rho;
            self.rho_squared() - nu * nu
        })
    }

    /// `sigma` produced by an exceptional eigenvalue `lambda < rho^2`.
    pub fn sigma_for_lambda(&self, lambda: f64) -> f64 {
        let rho = to_f64(self.rho);
        libm::sqrt(rho * rho - lambda) - rho
    }
}

pub fn spectral_context(field: FieldSpec, n: u32) -> Result<SpectralContext> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("n = {n} must be at least 2")));
    }
    let ni = n as i64;
    let rho = field.rho(n);
    let (upsilon, omega, known_lower_bound) = match field {
        FieldSpec::Real => (
            if n == 2 { q(-1, 3) } else { q(-1, 2) },
            q(-1, 1) + q(2, ni + 1),
            if n == 2 { q(975, 4096) } else { q(2 * ni - 3, 4) },
        ),
        FieldSpec::Complex { .. } => (q(-1, 1), q(-2, 1) + q(2, ni + 1), q(2 * ni - 1, 1)),
    };
    let omega_lambda = q(4 * ni, (ni + 1) * (ni + 1)) * rho * rho;
    Ok(SpectralContext { field, n, rho, upsilon, omega, omega_lambda, known_lower_bound })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Classification {
    /// `sigma > Omega + margin`: the decay is too slow for `lambda_1 >= 4n/(n+1)^2 rho^2`.
    ExceptionalSpectrumEvidence,
    /// `sigma < Omega - margin`: consistent with `lambda_1 >= 4n/(n+1)^2 rho^2`.
    LowerBoundEvidence,
    Inconclusive,
}

impl Classification {
    pub fn name(self) -> &'static str {
        match self {
            Classification::ExceptionalSpectrumEvidence => "ExceptionalSpectrumEvidence",
            Classification::LowerBoundEvidence => "LowerBoundEvidence",
            Classification::Inconclusive => "Inconclusive",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralVerdict {
    pub sigma: f64,
    pub tau_hat: f64,
    pub nu_hat: Option<f64>,
    pub lambda_hat: Option<f64>,
    pub classification: Classification,
    pub margin: f64,
}

pub fn infer_lambda(sigma: f64, ctx: &SpectralContext) -> Result<SpectralVerdict> {
    infer_lambda_with_margin(sigma, ctx, DEFAULT_MARGIN)
}

pub fn infer_lambda_with_margin(sigma: f64, ctx: &SpectralContext, margin: f64) -> Result<SpectralVerdict> {
    if !(sigma < 0.0) || !sigma.is_finite() {
        return Err(Error::InvalidParameter(format!("sigma = {sigma} must be negative")));
    }
    if !(margin >= 0.0) {
        return Err(Error::InvalidParameter(format!("margin = {margin} must be nonnegative")));
    }
    let rho = to_f64(ctx.rho);
    let tau_hat = 2.0 * rho + sigma;
    let nu_hat = (tau_hat > to_f64(ctx.visibility_threshold())).then_some(tau_hat - rho);
    let lambda_hat = nu_hat.map(|nu| rho * rho - nu * nu);
    let omega = to_f64(ctx.omega);
    let classification = if sigma > omega + margin {
        Classification::ExceptionalSpectrumEvidence
    } else if sigma < omega - margin {
        Classification::LowerBoundEvidence
    } else {
        Classification::Inconclusive
    };
    Ok(SpectralVerdict { sigma, tau_hat, nu_hat, lambda_hat, classification, margin })
}

/// Which conjectured behaviour a group of experiments points to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Support {
    /// Every row shows exceptional spectrum.
    ExceptionalSpectrum,
    /// Every row is consistent with `lambda_1 >= 4n/(n+1)^2 rho^2`.
    LowerBound,
    Mixed,
}

impl fmt::Display for Support {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Support::ExceptionalSpectrum => "exceptional spectrum",
            Support::LowerBound => "lower bound",
            Support::Mixed => "mixed",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub context: SpectralContext,
    pub experiments: usize,
    pub a_values: Vec<u64>,
    pub sigma_range: (f64, f64),
    /// `lambda_1` over the rows where it is defined.
    pub lambda_range: Option<(f64, f64)>,
    pub support: Support,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ConjectureReport {
    pub rows: Vec<ReportRow>,
}

/// One verdict per experiment, keyed by `(field, n, a)`.
#[derive(Debug, Clone, PartialEq)]
pub struct KeyedVerdict {
    pub field: FieldSpec,
    pub n: u32,
    pub a: u64,
    pub verdict: SpectralVerdict,
}

fn field_key(field: FieldSpec) -> (u8, i64) {
    match field {
        FieldSpec::Real => (0, 0),
        FieldSpec::Complex { disc } => (1, -disc),
    }
}

/// Aggregate verdicts per `(field, n)`.
pub fn conjecture_report(verdicts: &[KeyedVerdict]) -> Result<ConjectureReport> {
    let mut groups: BTreeMap<((u8, i64), u32), Vec<&KeyedVerdict>> = BTreeMap::new();
    for v in verdicts {
        groups.entry((field_key(v.field), v.n)).or_default().push(v);
    }
    let mut rows = Vec::new();
    for group in groups.values() {
        let context = spectral_context(group[0].field, group[0].n)?;
        let sigmas = group.iter().map(|v| v.verdict.sigma);
        let sigma_range = sigmas.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), s| (lo.min(s), hi.max(s)));
        let lambdas: Vec<f64> = group.iter().filter_map(|v| v.verdict.lambda_hat).collect();
        let lambda_range = (!lambdas.is_empty()).then(|| {
            lambdas.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &l| (lo.min(l), hi.max(l)))
        });
        let all = |c: Classification| group.iter().all(|v| v.verdict.classification == c);
        let support = if all(Classification::ExceptionalSpectrumEvidence) {
            Support::ExceptionalSpectrum
        } else if all(Classification::LowerBoundEvidence) {
            Support::LowerBound
        } else {
            Support::Mixed
        };
        let mut a_values: Vec<u64> = group.iter().map(|v| v.a).collect();
        a_values.sort_unstable();
        rows.push(ReportRow { context, experiments: group.len(), a_values, sigma_range, lambda_range, support });
    }
    Ok(ConjectureReport { rows })
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<8} {:>2} {:>7} {:>7} {:>18} {:>8} {:>8} {:>18} {:>6}  support",
            "field", "n", "Upsilon", "Omega", "sigma in", "upsilon", "omega", "lambda_1 in", "rho^2"
        )?;
        for row in &self.rows {
            let c = &row.context;
            let field = match c.field {
                FieldSpec::Real => String::from("R"),
                FieldSpec::Complex { disc } => format!("C({disc})"),
            };
            let lambda = match row.lambda_range {
                Some((lo, hi)) => format!("[{lo:.2}, {hi:.2}]"),
                None => String::from("-"),
            };
            writeln!(
                f,
                "{:<8} {:>2} {:>7.2} {:>7.2} {:>18} {:>8.2} {:>8.2} {:>18} {:>6.2}  {}",
                field,
                c.n,
                to_f64(c.upsilon),
                to_f64(c.omega),
                format!("[{:.3}, {:.3}]", row.sigma_range.0, row.sigma_range.1),
                to_f64(c.known_lower_bound),
                to_f64(c.omega_lambda),
                lambda,
                to_f64(c.rho_squared()),
                row.support
            )?;
        }
        Ok(())
    }
}
