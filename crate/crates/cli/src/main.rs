//! `hyperlat`: main coefficients, representation counts and decay fits for indefinite forms.

mod cache;
mod report;
mod run;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperlat_core::analysis::{default_t_min, fit_psi, psi_series, FitResult, PsiSeries};
use hyperlat_core::coefficient::{main_coefficient, MainCoefficient};
use hyperlat_core::counting::{CountSeries, Provider};
use hyperlat_core::global_density::DiscriminantRule;
use hyperlat_core::spectral::{
    conjecture_report, infer_lambda, spectral_context, KeyedVerdict, SpectralContext, SpectralVerdict,
};
use hyperlat_core::{Error, FieldSpec, FormSpec};
use log::warn;

use report::{ExperimentReport, FitJson};

#[derive(Parser)]
#[command(name = "hyperlat", version, about = "Lattice-point asymptotics and spectral evidence for forms of signature (n, 1)")]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Options {
    /// Form `a1,...,an;a` with optional `@R` or `@C:disc`.
    #[arg(long, global = true)]
    form: Option<String>,
    /// Count representations of `-k`.
    #[arg(long, global = true, default_value_t = 1)]
    k: i64,
    #[arg(long = "T", global = true)]
    t_max: Option<u64>,
    /// Left end of the fit window (default `10^round(log10(T)/2)`).
    #[arg(long, global = true)]
    tmin: Option<u64>,
    #[arg(long, global = true, default_value = "hybrid", value_parser = parse_provider)]
    provider: Provider,
    /// Worker threads for counting; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Output file (count, fit, plot-data) or directory (experiment, table).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, env = "HYPERLAT_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    /// Imaginary quadratic discriminant; makes the form hermitian.
    #[arg(long, global = true, allow_hyphen_values = true)]
    disc: Option<i64>,
    #[arg(long, global = true, value_enum, default_value_t = CompatMode::WorkedExample)]
    compat_mode: CompatMode,
    /// Default to T = 10^6 (real) or 10^4 (complex).
    #[arg(long, global = true)]
    full_scale: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CompatMode {
    WorkedExample,
    Literal,
}

impl CompatMode {
    fn rule(self) -> DiscriminantRule {
        match self {
            CompatMode::WorkedExample => DiscriminantRule::WorkedExample,
            CompatMode::Literal => DiscriminantRule::Literal,
        }
    }

    fn name(self) -> &'static str {
        match self {
            CompatMode::WorkedExample => "worked-example",
            CompatMode::Literal => "literal",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    RealN2,
    RealN4,
    RealN6,
    RealN8,
    CxN2,
    CxN3,
    CxN4,
    CxN5,
}

impl Family {
    fn field_and_n(self, disc: Option<i64>) -> Result<(FieldSpec, usize)> {
        let cx = |n| Ok((FieldSpec::complex(disc.unwrap_or(-3))?, n));
        match self {
            Family::RealN2 => Ok((FieldSpec::Real, 2)),
            Family::RealN4 => Ok((FieldSpec::Real, 4)),
            Family::RealN6 => Ok((FieldSpec::Real, 6)),
            Family::RealN8 => Ok((FieldSpec::Real, 8)),
            Family::CxN2 => cx(2),
            Family::CxN3 => cx(3),
            Family::CxN4 => cx(4),
            Family::CxN5 => cx(5),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Global density `delta(Q, -k)` with its local factors.
    Density,
    /// Main coefficient `C(Q, -k)`.
    Coefficient,
    /// Counts `N_t(Q, -k)` for `t <= T` as CSV.
    Count,
    /// Envelope power-law fit of `Psi` as JSON.
    Fit,
    /// Full pipeline for one form: JSON report, table row and plot data.
    Experiment,
    /// One experiment per `a` for a family `diag(1, ..., 1, -a)`.
    Table {
        #[arg(value_enum)]
        family: Family,
        /// Inclusive range `lo..hi`; empty when `hi < lo`.
        #[arg(long, default_value = "1..15")]
        a_range: String,
    },
    /// Envelope of `Psi` with reference curves, as whitespace-separated columns.
    PlotData,
}

fn parse_provider(text: &str) -> Result<Provider, String> {
    text.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(text: &str) -> Result<Vec<u64>> {
    let (lo, hi) = text.split_once("..").with_context(|| format!("range {text:?} is not lo..hi"))?;
    let lo: u64 = lo.trim().parse().with_context(|| format!("range start {lo:?}"))?;
    let hi: u64 = hi.trim().trim_start_matches('=').parse().with_context(|| format!("range end {hi:?}"))?;
    Ok((lo.max(1)..=hi).collect())
}

struct Experiment {
    spec: FormSpec,
    coefficient: MainCoefficient,
    counts: CountSeries,
    psi: PsiSeries,
    fit: FitResult,
    context: SpectralContext,
    verdict: SpectralVerdict,
    count_seconds: f64,
}

impl Options {
    fn form(&self) -> Result<FormSpec> {
        let text = self.form.as_deref().context("--form is required")?;
        let mut spec: FormSpec = text.parse()?;
        if let Some(disc) = self.disc {
            spec.field = FieldSpec::complex(disc)?;
        }
        Ok(spec)
    }

    fn k(&self) -> Result<i64> {
        if self.k < 1 {
            bail!("--k must be at least 1, got {}", self.k);
        }
        Ok(self.k)
    }

    fn t_max(&self, field: FieldSpec) -> u64 {
        if let Some(t) = self.t_max {
            return t;
        }
        let (desk, full) = if field.is_real() { (100_000, 1_000_000) } else { (1_000, 10_000) };
        if self.full_scale {
            warn!("full-scale run with T = {full}; this can take a long time and a lot of memory");
            full
        } else {
            desk
        }
    }

    fn window(&self, field: FieldSpec) -> Result<(u64, u64)> {
        let t_max = self.t_max(field);
        let t_min = self.tmin.unwrap_or_else(|| default_t_min(t_max));
        if t_min < 1 || t_min >= t_max {
            bail!("need T > t_min >= 1, got T = {t_max}, t_min = {t_min}");
        }
        Ok((t_min, t_max))
    }

    fn coefficient(&self, spec: &FormSpec) -> Result<MainCoefficient> {
        Ok(main_coefficient(spec, self.k()?, self.compat_mode.rule())?)
    }

    fn counts(&self, spec: &FormSpec, t_max: u64) -> Result<CountSeries> {
        run::count_cached(spec, self.k()?, t_max, self.provider, self.threads, self.cache_dir.as_deref())
    }

    fn experiment(&self, spec: FormSpec, coefficient: MainCoefficient) -> Result<Experiment> {
        if coefficient.is_zero() {
            return Err(Error::ExperimentInvalid.into());
        }
        let (t_min, t_max) = self.window(spec.field)?;
        let start = Instant::now();
        let counts = self.counts(&spec, t_max)?;
        let count_seconds = start.elapsed().as_secs_f64();
        let psi = psi_series(&counts, &coefficient)?;
        let fit = fit_psi(&psi, t_min)?;
        let context = spectral_context(spec.field, spec.n())?;
        let verdict = infer_lambda(fit.sigma, &context)?;
        Ok(Experiment { spec, coefficient, counts, psi, fit, context, verdict, count_seconds })
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_density(opts: &Options) -> Result<()> {
    let spec = opts.form()?;
    let c = opts.coefficient(&spec)?;
    let d = &c.delta;
    match &d.exact {
        Some(v) => println!("delta = {v}"),
        None => println!("delta = (no closed form)"),
    }
    println!("numeric = {:.15}", d.numeric);
    println!("closed form = {}", hyperlat_core::global_density::describe(d));
    for local in &d.bad_primes {
        let level = local.stabilized_at.map_or(String::new(), |j| format!(" (stable from p^{j})"));
        println!("delta_{} = {} [{:?}]{level}", local.p, local.value, local.method);
    }
    Ok(())
}

fn cmd_coefficient(opts: &Options) -> Result<()> {
    let spec = opts.form()?;
    let c = opts.coefficient(&spec)?;
    match &c.c {
        Some(v) => println!("C = {v}"),
        None => println!("C = (no closed form)"),
    }
    println!("numeric = {:.15}", c.numeric);
    println!("C' = {}", c.c_prime);
    match &c.delta.exact {
        Some(v) => println!("delta = {v}"),
        None => println!("delta = {:.15}", c.delta.numeric),
    }
    println!("rho = {}", c.rho);
    Ok(())
}

fn cmd_count(opts: &Options) -> Result<()> {
    let spec = opts.form()?;
    let counts = opts.counts(&spec, opts.t_max(spec.field))?;
    emit(opts.out.as_deref(), &cache::render(&counts))
}

fn cmd_fit(opts: &Options) -> Result<()> {
    let spec = opts.form()?;
    let coefficient = opts.coefficient(&spec)?;
    let e = opts.experiment(spec, coefficient)?;
    let json = serde_json::to_string_pretty(&FitJson::from(&e.fit))?;
    emit(opts.out.as_deref(), &(json + "\n"))
}

fn cmd_plot_data(opts: &Options) -> Result<()> {
    let spec = opts.form()?;
    let coefficient = opts.coefficient(&spec)?;
    let e = opts.experiment(spec, coefficient)?;
    emit(opts.out.as_deref(), &report::plot_data(&e.spec.to_string(), &e.fit, &e.context))
}

fn cmd_experiment(opts: &Options) -> Result<()> {
    let start = Instant::now();
    let spec = opts.form()?;
    let coefficient = opts.coefficient(&spec)?;
    let e = opts.experiment(spec, coefficient)?;
    let psi_t = e.psi.at(e.counts.t_max);
    let report = ExperimentReport {
        config: report::ConfigJson {
            form: e.spec.to_string(),
            k: opts.k,
            t_max: e.fit.window.1,
            t_min: e.fit.window.0,
            provider: opts.provider.to_string(),
            threads: opts.threads,
            compat_mode: opts.compat_mode.name().to_string(),
        },
        coefficient: (&e.coefficient).into(),
        density: (&e.coefficient.delta).into(),
        counts: report::CountsJson { provider: e.counts.provider.to_string(), n_t: e.counts.at(e.counts.t_max).to_string() },
        psi_t,
        fit: (&e.fit).into(),
        spectral: (&e.context).into(),
        verdict: (&e.verdict).into(),
        timing: report::TimingJson { count_seconds: e.count_seconds, total_seconds: start.elapsed().as_secs_f64() },
    };
    let json = serde_json::to_string_pretty(&report)? + "\n";
    print!("{json}");
    if let Some(dir) = &opts.out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        fs::write(dir.join("report.json"), &json)?;
        let row = report::table_row(e.spec.a, &e.coefficient, Some((psi_t, e.fit.sigma, &e.verdict)));
        fs::write(dir.join("row.csv"), format!("{}\n{row}\n", report::ROW_HEADER))?;
        fs::write(dir.join("plot-data.txt"), report::plot_data(&e.spec.to_string(), &e.fit, &e.context))?;
    }
    Ok(())
}

fn cmd_table(opts: &Options, family: Family, a_range: &str) -> Result<()> {
    let (field, n) = family.field_and_n(opts.disc)?;
    let mut csv = format!("{}\n", report::ROW_HEADER);
    let mut verdicts = Vec::new();
    for a in parse_range(a_range)? {
        let spec = FormSpec::identity(field, n, a)?;
        let coefficient = opts.coefficient(&spec)?;
        let row = if coefficient.is_zero() {
            report::table_row(a, &coefficient, None)
        } else {
            let e = opts.experiment(spec, coefficient)?;
            let psi_t = e.psi.at(e.counts.t_max);
            verdicts.push(KeyedVerdict { field, n: n as u32, a, verdict: e.verdict.clone() });
            report::table_row(a, &e.coefficient, Some((psi_t, e.fit.sigma, &e.verdict)))
        };
        log::info!("{row}");
        csv.push_str(&row);
        csv.push('\n');
    }
    let summary = conjecture_report(&verdicts)?;
    if !summary.rows.is_empty() {
        eprint!("{summary}");
    }
    match &opts.out {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let name = family.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
            fs::write(dir.join(format!("table-{name}.csv")), &csv)?;
            let json = serde_json::to_string_pretty(&report::conjecture_json(&summary))?;
            fs::write(dir.join(format!("conjecture-{name}.json")), json + "\n")?;
            print!("{csv}");
        }
        None => print!("{csv}"),
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Result<()> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Density => cmd_density(opts),
        Command::Coefficient => cmd_coefficient(opts),
        Command::Count => cmd_count(opts),
        Command::Fit => cmd_fit(opts),
        Command::Experiment => cmd_experiment(opts),
        Command::Table { family, a_range } => cmd_table(opts, *family, a_range),
        Command::PlotData => cmd_plot_data(opts),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match dispatch(&Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
