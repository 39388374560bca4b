//! Count series `N_t(Q, -k)` for `0 <= t <= T`.
//!
//! Real forms: `N_t = sum_{|m| <= t} F_A(a m^2 - k)`.
//! Complex forms: `N_t = sum_{m <= t^2} F_A(a m - k) G(m)`.

use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::ops::Range;
use core::str::FromStr;

use super::divisor::{DivisorRule, PolySieve};
use super::theta::{norm_counts, theta_table, RepresentationTable, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::forms::{FieldSpec, FormSpec, OrderBasis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provider {
    ThetaConvolution,
    DivisorFormula,
    /// Divisor formulas when available, theta products otherwise.
    Hybrid,
}

impl Provider {
    pub fn name(self) -> &'static str {
        match self {
            Provider::ThetaConvolution => "theta",
            Provider::DivisorFormula => "divisor",
            Provider::Hybrid => "hybrid",
        }
    }
}

impl fmt::Display for Provider {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Provider {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "theta" | "theta-convolution" | "thetaconvolution" => Ok(Provider::ThetaConvolution),
            "divisor" | "divisor-formula" | "divisorformula" => Ok(Provider::DivisorFormula),
            "hybrid" => Ok(Provider::Hybrid),
            other => Err(Error::InvalidParameter(format!("unknown provider {other:?}"))),
        }
    }
}

/// `values[t] = N_t(Q, -k)` for `t = 0..=t_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountSeries {
    pub form: FormSpec,
    pub k: i64,
    pub t_max: u64,
    /// Provider that produced the values (never `Hybrid`).
    pub provider: Provider,
    pub values: Vec<u128>,
}

impl CountSeries {
    pub fn at(&self, t: u64) -> u128 {
        self.values[t as usize]
    }

    /// Same values relabelled with another provider, for comparisons.
    pub fn with_provider(self, provider: Provider) -> Self {
        CountSeries { provider, ..self }
    }

    /// Nondecreasing values, and even values for real forms with `k > 0`.
    pub fn check_invariants(&self) -> bool {
        let monotone = self.values.windows(2).all(|w| w[0] <= w[1]);
        let even = !self.form.field.is_real() || self.k <= 0 || self.values.iter().all(|v| v % 2 == 0);
        monotone && even && self.values.len() as u64 == self.t_max + 1
    }
}

enum Source {
    Table(RepresentationTable),
    Divisor { rule: DivisorRule, sieve: PolySieve },
}

enum NormSource {
    Real,
    Table(Vec<u64>),
    Divisor { rule: DivisorRule, sieve: PolySieve },
}

/// Precomputed state for counting; contributions can be evaluated chunk by chunk in any
/// order and assembled deterministically.
pub struct CountPlan {
    form: FormSpec,
    k: i64,
    t_max: u64,
    provider: Provider,
    source: Source,
    norms: NormSource,
}

fn feasible_list(rule: Option<DivisorRule>) -> String {
    if rule.is_some() {
        "divisor, hybrid".into()
    } else {
        "none within the table budget".into()
    }
}

impl CountPlan {
    pub fn new(form: &FormSpec, k: i64, t_max: u64, provider: Provider) -> Result<Self> {
        Self::with_budget(form, k, t_max, provider, DEFAULT_BUDGET)
    }

    pub fn with_budget(form: &FormSpec, k: i64, t_max: u64, provider: Provider, budget: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroTarget);
        }
        if t_max == 0 {
            return Err(Error::InvalidParameter("T must be positive".into()));
        }
        let real = form.field.is_real();
        let m_max = if real {
            t_max
        } else {
            t_max.checked_mul(t_max).ok_or(Error::Overflow("T^2"))?
        };
        let rule = DivisorRule::for_form(form);
        let resolved = match (provider, rule) {
            (Provider::DivisorFormula, None) => {
                return Err(Error::UnsupportedProvider { provider: provider.name().into(), feasible: "theta".into() })
            }
            (Provider::Hybrid, Some(_)) | (Provider::DivisorFormula, Some(_)) => Provider::DivisorFormula,
            _ => Provider::ThetaConvolution,
        };
        let g_max = if real { m_max as u128 * m_max as u128 } else { m_max as u128 };
        let top = (form.a as u128 * g_max) as i128 - k as i128;
        let n_max = u64::try_from(top.max(-(k as i128)).max(0)).map_err(|_| Error::Overflow("table bound"))?;
        let source = match resolved {
            Provider::DivisorFormula => Source::Divisor {
                rule: rule.expect("resolved"),
                sieve: PolySieve::new(form.a, k, real, m_max)?,
            },
            _ => match theta_table(form.field, &form.positive, n_max, budget) {
                Ok(table) => Source::Table(table),
                Err(Error::TableBudget { needed, budget }) if rule.is_some() || provider != Provider::Hybrid => {
                    if rule.is_some() {
                        return Err(Error::UnsupportedProvider {
                            provider: provider.name().into(),
                            feasible: feasible_list(rule),
                        });
                    }
                    return Err(Error::TableBudget { needed, budget });
                }
                Err(e) => return Err(e),
            },
        };
        let norms = match form.field {
            FieldSpec::Real => NormSource::Real,
            FieldSpec::Complex { disc } => match DivisorRule::for_order(disc) {
                Some(rule) => NormSource::Divisor { rule, sieve: PolySieve::new(1, 0, false, m_max)? },
                None => {
                    if m_max + 1 > budget {
                        return Err(Error::TableBudget { needed: m_max + 1, budget });
                    }
                    NormSource::Table(norm_counts(&OrderBasis::new(disc)?, m_max))
                }
            },
        };
        Ok(CountPlan { form: form.clone(), k, t_max, provider: resolved, source, norms })
    }

    pub fn provider(&self) -> Provider {
        self.provider
    }

    /// Largest summation index: `T` (real) or `T^2` (complex).
    pub fn m_max(&self) -> u64 {
        if self.form.field.is_real() {
            self.t_max
        } else {
            self.t_max * self.t_max
        }
    }

    /// Consecutive ranges covering `0..=m_max`.
    pub fn chunks(&self, size: u64) -> Vec<Range<u64>> {
        let size = size.max(1);
        let end = self.m_max() + 1;
        (0..end.div_ceil(size)).map(|i| i * size..((i + 1) * size).min(end)).collect()
    }

    fn argument(&self, m: u64) -> i128 {
        let g = if self.form.field.is_real() { m as i128 * m as i128 } else { m as i128 };
        self.form.a as i128 * g - self.k as i128
    }

    fn f_values(&self, range: Range<u64>) -> Result<Vec<u128>> {
        match &self.source {
            Source::Divisor { rule, sieve } => sieve.evaluate_range(*rule, range.start, range.end),
            Source::Table(table) => range
                .map(|m| table.get(self.argument(m)).ok_or(Error::Overflow("table index")))
                .collect(),
        }
    }

    /// Summand for each `m` in `range`: `F_A(a m^2 - k)` (real; the assembly doubles
    /// `m > 0`) or `F_A(a m - k) G(m)` (complex).
    pub fn contributions(&self, range: Range<u64>) -> Result<Vec<u128>> {
        let f = self.f_values(range.clone())?;
        match &self.norms {
            NormSource::Real => Ok(f),
            NormSource::Table(g) => f
                .iter()
                .zip(range)
                .map(|(&x, m)| x.checked_mul(g[m as usize] as u128).ok_or(Error::Overflow("F * G")))
                .collect(),
            NormSource::Divisor { rule, sieve } => {
                let g = sieve.evaluate_range(*rule, range.start, range.end)?;
                f.iter().zip(&g).map(|(&x, &y)| x.checked_mul(y).ok_or(Error::Overflow("F * G"))).collect()
            }
        }
    }

    /// Combine the contributions of [`chunks`](Self::chunks), in order.
    pub fn assemble(&self, parts: Vec<Vec<u128>>) -> Result<CountSeries> {
        let overflow = || Error::Overflow("count series");
        let terms: Vec<u128> = parts.into_iter().flatten().collect();
        if terms.len() as u64 != self.m_max() + 1 {
            return Err(Error::InvalidParameter("contributions do not cover 0..=m_max".into()));
        }
        let mut values = vec![0u128; self.t_max as usize + 1];
        if self.form.field.is_real() {
            let mut acc = terms[0];
            values[0] = acc;
            for t in 1..=self.t_max as usize {
                acc = acc.checked_add(terms[t].checked_mul(2).ok_or_else(overflow)?).ok_or_else(overflow)?;
                values[t] = acc;
            }
        } else {
            let mut acc = 0u128;
            let mut m = 0usize;
            for t in 0..=self.t_max as usize {
                while m <= t * t {
                    acc = acc.checked_add(terms[m]).ok_or_else(overflow)?;
                    m += 1;
                }
                values[t] = acc;
            }
        }
        Ok(CountSeries { form: self.form.clone(), k: self.k, t_max: self.t_max, provider: self.provider, values })
    }

    /// Sequential evaluation of every chunk.
    pub fn run(&self) -> Result<CountSeries> {
        let parts = self.chunks(1 << 16).into_iter().map(|r| self.contributions(r)).collect::<Result<Vec<_>>>()?;
        self.assemble(parts)
    }
}

/// `N_t(Q, -k)` for `t = 0..=t_max`.
pub fn count_series(form: &FormSpec, k: i64, t_max: u64, provider: Provider) -> Result<CountSeries> {
    CountPlan::new(form, k, t_max, provider)?.run()
}
