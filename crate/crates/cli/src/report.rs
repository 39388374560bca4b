//! JSON, CSV and plot-data renderings of pipeline results.

use std::fmt::Write as _;

use hyperlat_core::analysis::{reference_curves, FitResult};
use hyperlat_core::coefficient::MainCoefficient;
use hyperlat_core::global_density::{describe, GlobalDensity};
use hyperlat_core::spectral::{ConjectureReport, SpectralContext, SpectralVerdict};
use hyperlat_core::FieldSpec;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::Serialize;

fn q(r: Ratio<i64>) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Serialize)]
pub struct FitJson {
    pub sigma: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub window: [u64; 2],
    pub envelope_size: usize,
    pub envelope: Vec<(u64, f64)>,
}

impl From<&FitResult> for FitJson {
    fn from(fit: &FitResult) -> Self {
        FitJson {
            sigma: fit.sigma,
            b: fit.b,
            window: [fit.window.0, fit.window.1],
            envelope_size: fit.envelope.len(),
            envelope: fit.envelope.clone(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LocalJson {
    pub p: u64,
    pub value: String,
    pub method: String,
    pub stabilized_at: Option<u32>,
}

#[derive(Debug, Serialize)]
pub struct DensityJson {
    pub exact: Option<String>,
    pub numeric: f64,
    pub closed_form: String,
    pub correction: String,
    pub local: Vec<LocalJson>,
}

impl From<&GlobalDensity> for DensityJson {
    fn from(d: &GlobalDensity) -> Self {
        DensityJson {
            exact: d.exact.as_ref().map(|v| v.to_string()),
            numeric: d.numeric,
            closed_form: describe(d),
            correction: d.correction.to_string(),
            local: d
                .bad_primes
                .iter()
                .map(|l| LocalJson {
                    p: l.p,
                    value: l.value.to_string(),
                    method: format!("{:?}", l.method),
                    stabilized_at: l.stabilized_at,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct CoefficientJson {
    pub exact: Option<String>,
    pub numeric: f64,
    pub c_prime: String,
    pub rho: String,
    pub two_rho: String,
}

impl From<&MainCoefficient> for CoefficientJson {
    fn from(c: &MainCoefficient) -> Self {
        CoefficientJson {
            exact: c.c.as_ref().map(|v| v.to_string()),
            numeric: c.numeric,
            c_prime: c.c_prime.to_string(),
            rho: c.rho.to_string(),
            two_rho: c.two_rho.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectralJson {
    pub rho: String,
    pub rho_squared: String,
    pub upsilon: String,
    pub omega: String,
    pub omega_lambda: String,
    pub known_lower_bound: String,
    pub visibility_threshold: String,
}

impl From<&SpectralContext> for SpectralJson {
    fn from(c: &SpectralContext) -> Self {
        SpectralJson {
            rho: c.rho.to_string(),
            rho_squared: c.rho_squared().to_string(),
            upsilon: c.upsilon.to_string(),
            omega: c.omega.to_string(),
            omega_lambda: c.omega_lambda.to_string(),
            known_lower_bound: c.known_lower_bound.to_string(),
            visibility_threshold: c.visibility_threshold().to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerdictJson {
    pub classification: String,
    pub sigma: f64,
    pub tau_hat: f64,
    pub nu_hat: Option<f64>,
    pub lambda_hat: Option<f64>,
    pub margin: f64,
}

impl From<&SpectralVerdict> for VerdictJson {
    fn from(v: &SpectralVerdict) -> Self {
        VerdictJson {
            classification: v.classification.name().to_string(),
            sigma: v.sigma,
            tau_hat: v.tau_hat,
            nu_hat: v.nu_hat,
            lambda_hat: v.lambda_hat,
            margin: v.margin,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ConfigJson {
    pub form: String,
    pub k: i64,
    #[serde(rename = "T")]
    pub t_max: u64,
    pub t_min: u64,
    pub provider: String,
    pub threads: usize,
    pub compat_mode: String,
}

#[derive(Debug, Serialize)]
pub struct CountsJson {
    pub provider: String,
    #[serde(rename = "N_T")]
    pub n_t: String,
}

#[derive(Debug, Serialize)]
pub struct TimingJson {
    pub count_seconds: f64,
    pub total_seconds: f64,
}

#[derive(Debug, Serialize)]
pub struct ExperimentReport {
    pub config: ConfigJson,
    pub coefficient: CoefficientJson,
    pub density: DensityJson,
    pub counts: CountsJson,
    #[serde(rename = "Psi_T")]
    pub psi_t: f64,
    pub fit: FitJson,
    pub spectral: SpectralJson,
    pub verdict: VerdictJson,
    pub timing: TimingJson,
}

pub const ROW_HEADER: &str = "a,C,C_numeric,Psi_T,sigma,classification";

/// One table row; the experiment columns stay empty when `C = 0`.
pub fn table_row(a: u64, c: &MainCoefficient, experiment: Option<(f64, f64, &SpectralVerdict)>) -> String {
    let exact = c.c.as_ref().map_or_else(|| format!("{:.12}", c.numeric), |v| v.to_string());
    let exact = if exact.contains(',') { format!("\"{exact}\"") } else { exact };
    match experiment {
        Some((psi_t, sigma, v)) => {
            format!("{a},{exact},{:.12},{psi_t:.6e},{sigma:.4},{}", c.numeric, v.classification)
        }
        None => format!("{a},{exact},{:.12},,,", c.numeric),
    }
}

/// Columns `t, Psi(t)` and reference curves of exponents `sigma`, `Omega`, `Upsilon`,
/// all equal to `Psi` at the first envelope point.
pub fn plot_data(form: &str, fit: &FitResult, ctx: &SpectralContext) -> String {
    let exponents = [fit.sigma, q(ctx.omega), q(ctx.upsilon)];
    let mut out = String::new();
    writeln!(out, "# form={form} sigma={:.6} Omega={} Upsilon={}", fit.sigma, ctx.omega, ctx.upsilon).unwrap();
    writeln!(out, "# t psi curve_sigma curve_Omega curve_Upsilon").unwrap();
    for row in reference_curves(&fit.envelope, exponents) {
        writeln!(out, "{} {:.9e} {:.9e} {:.9e} {:.9e}", row[0] as u64, row[1], row[2], row[3], row[4]).unwrap();
    }
    out
}

#[derive(Debug, Serialize)]
pub struct ReportRowJson {
    pub field: String,
    pub n: u32,
    pub experiments: usize,
    pub a_values: Vec<u64>,
    pub upsilon: f64,
    pub omega: f64,
    pub sigma_range: (f64, f64),
    pub known_lower_bound: f64,
    pub omega_lambda: f64,
    pub lambda_range: Option<(f64, f64)>,
    pub rho_squared: f64,
    pub support: String,
}

pub fn conjecture_json(report: &ConjectureReport) -> Vec<ReportRowJson> {
    report
        .rows
        .iter()
        .map(|row| {
            let c = &row.context;
            ReportRowJson {
                field: match c.field {
                    FieldSpec::Real => "R".to_string(),
                    FieldSpec::Complex { disc } => format!("C({disc})"),
                },
                n: c.n,
                experiments: row.experiments,
                a_values: row.a_values.clone(),
                upsilon: q(c.upsilon),
                omega: q(c.omega),
                sigma_range: row.sigma_range,
                known_lower_bound: q(c.known_lower_bound),
                omega_lambda: q(c.omega_lambda),
                lambda_range: row.lambda_range,
                rho_squared: q(c.rho_squared()),
                support: row.support.to_string(),
            }
        })
        .collect()
}
