//! Count-series CSV files: four `# key=value` header lines, then `t,count` rows.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use hyperlat_core::counting::{CountSeries, Provider};
use hyperlat_core::FormSpec;

pub fn render(series: &CountSeries) -> String {
    let mut out = String::with_capacity(24 * (series.values.len() + 4));
    writeln!(out, "# form={}", series.form).unwrap();
    writeln!(out, "# k={}", series.k).unwrap();
    writeln!(out, "# provider={}", series.provider).unwrap();
    writeln!(out, "# T={}", series.t_max).unwrap();
    for (t, v) in series.values.iter().enumerate() {
        writeln!(out, "{t},{v}").unwrap();
    }
    out
}

fn header<'a>(line: Option<&'a str>, key: &str) -> Result<&'a str> {
    let line = line.with_context(|| format!("missing header {key}"))?;
    line.strip_prefix("# ")
        .and_then(|rest| rest.strip_prefix(key))
        .and_then(|rest| rest.strip_prefix('='))
        .with_context(|| format!("expected header `# {key}=`, found {line:?}"))
}

pub fn parse(text: &str) -> Result<CountSeries> {
    let mut lines = text.lines();
    let form: FormSpec = header(lines.next(), "form")?.parse()?;
    let k: i64 = header(lines.next(), "k")?.parse()?;
    let provider: Provider = header(lines.next(), "provider")?.parse()?;
    let t_max: u64 = header(lines.next(), "T")?.parse()?;
    let mut values = Vec::with_capacity(t_max as usize + 1);
    for (expected, line) in lines.enumerate() {
        let (t, v) = line.split_once(',').with_context(|| format!("malformed row {line:?}"))?;
        if t.parse::<u64>()? != expected as u64 {
            bail!("row {expected} is labelled {t}");
        }
        values.push(v.parse::<u128>()?);
    }
    if values.len() as u64 != t_max + 1 {
        bail!("expected {} rows, found {}", t_max + 1, values.len());
    }
    let series = CountSeries { form, k, t_max, provider, values };
    if !series.check_invariants() {
        bail!("cached counts violate monotonicity or parity");
    }
    Ok(series)
}

pub fn write(path: &Path, series: &CountSeries) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    fs::write(path, render(series)).with_context(|| format!("writing {}", path.display()))
}

/// Cache location of the series for `(form, k, T)`.
pub fn path_for(dir: &Path, form: &FormSpec, k: i64, t_max: u64) -> PathBuf {
    let name: String = form
        .to_string()
        .chars()
        .map(|c| match c {
            '0'..='9' | 'a'..='z' | 'A'..='Z' | '-' => c,
            _ => '_',
        })
        .collect();
    dir.join(format!("{name}_k{k}_T{t_max}.csv"))
}

/// Cached series if the file exists and matches the request; `Err` describes why not.
pub fn load(path: &Path, form: &FormSpec, k: i64, t_max: u64) -> Result<Option<CountSeries>> {
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(path)?;
    let series = parse(&text)?;
    if &series.form != form || series.k != k || series.t_max != t_max {
        bail!("cache header describes {} k={} T={}", series.form, series.k, series.t_max);
    }
    Ok(Some(series))
}
