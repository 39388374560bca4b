use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hyperlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlat"))
        .args(args)
        .env_remove("HYPERLAT_CACHE_DIR")
        .env("RUST_LOG", "warn")
        .output()
        .expect("spawn hyperlat")
}

fn stdout(args: &[&str]) -> String {
    let out = hyperlat(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn stderr_of_failure(args: &[&str]) -> String {
    let out = hyperlat(args);
    assert!(!out.status.success(), "{args:?} unexpectedly succeeded");
    String::from_utf8(out.stderr).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn without_timing(mut report: Value) -> Value {
    report.as_object_mut().unwrap().remove("timing");
    report
}

fn cache_files(dir: &Path) -> Vec<std::path::PathBuf> {
    fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect()
}

#[test]
fn count_four_squares_to_ten() {
    let text = stdout(&["count", "--form", "1,1,1,1;1", "--T", "10"]);
    assert!(text.starts_with("# form=1,1,1,1;1@R\n# k=1\n"));
    assert_eq!(text.lines().last(), Some("10,6098"));
    let theta = stdout(&["count", "--form", "1,1,1,1;1", "--T", "10", "--provider", "theta"]);
    assert_eq!(theta.lines().last(), Some("10,6098"));
}

#[test]
fn cache_reload_matches_recompute() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["count", "--form", "1,1,1;2@C:-3", "--T", "60", "--cache-dir", cache];
    let first = stdout(&args);
    assert_eq!(cache_files(dir.path()).len(), 1);
    let second = stdout(&args);
    assert_eq!(first, second);
    assert_eq!(first, stdout(&args[..5]));
}

#[test]
fn corrupt_cache_is_recomputed_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["count", "--form", "1,1,1,1;3", "--T", "40", "--cache-dir", cache];
    let clean = stdout(&args);
    let file = cache_files(dir.path()).pop().unwrap();
    fs::write(&file, clean.replace("# k=1", "# k=oops")).unwrap();
    let out = hyperlat(&args);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), clean);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("corrupt cache"), "{err}");
    assert_eq!(fs::read_to_string(&file).unwrap(), clean);
}

#[test]
fn cache_for_other_parameters_is_not_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let a = stdout(&["count", "--form", "1,1;1", "--T", "30", "--cache-dir", cache]);
    let b = stdout(&["count", "--form", "1,1;1", "--T", "30", "--k", "2", "--cache-dir", cache]);
    assert_ne!(a, b);
    assert_eq!(cache_files(dir.path()).len(), 2);
}

#[test]
fn unsupported_provider_names_alternatives() {
    let err = stderr_of_failure(&["count", "--form", "1,1,1,1,1;1@C:-3", "--T", "10", "--provider", "divisor"]);
    assert!(err.contains("theta"), "{err}");
}

#[test]
fn density_values() {
    let text = stdout(&["density", "--form", "1,1,1,1;1@R", "--k", "1"]);
    assert!(text.contains("delta = 15/2 * pi^-2"), "{text}");
    assert!(text.contains("0.75990"), "{text}");
    let zero = stdout(&["density", "--form", "1,1;4"]);
    assert!(zero.lines().next() == Some("delta = 0"), "{zero}");
    let literal = stdout(&["density", "--form", "1,1,1,1;1", "--compat-mode", "literal"]);
    assert!(literal.contains("delta = 15/2 * pi^-2"), "{literal}");
}

#[test]
fn coefficient_values() {
    let first = |args: &[&str]| stdout(args).lines().next().unwrap().to_string();
    assert_eq!(first(&["coefficient", "--form", "1,1,1,1;1"]), "C = 5");
    assert_eq!(first(&["coefficient", "--form", "1,1,1,1,1;1@C:-3"]), "C = 18");
    assert_eq!(first(&["coefficient", "--form", "1,1,1,1,1;1", "--disc", "-3"]), "C = 18");
    assert_eq!(first(&["coefficient", "--form", "1,1,1,1,1,1;3"]), "C = 945/26 * sqrt(3)");
}

#[test]
fn experiment_on_hermitian_five_form_shows_exceptional_spectrum() {
    let report = json(&["experiment", "--form", "1,1,1,1,1;1@C:-3", "--T", "1000", "--tmin", "1"]);
    assert_eq!(report["verdict"]["classification"], "ExceptionalSpectrumEvidence");
    assert_eq!(report["coefficient"]["exact"], "18");
    assert_eq!(report["spectral"]["omega"], "-5/3");
    assert!(report["verdict"]["lambda_hat"].as_f64().unwrap() > 0.0);
    for key in ["config", "density", "counts", "Psi_T", "fit", "timing"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn experiment_with_zero_coefficient_is_invalid() {
    let err = stderr_of_failure(&["experiment", "--form", "1,1;4", "--T", "100"]);
    assert!(err.contains("main coefficient is zero"), "{err}");
    stderr_of_failure(&["experiment", "--form", "1,1,1,1;1", "--T", "100", "--tmin", "100"]);
    stderr_of_failure(&["experiment", "--form", "1,1,1,1;1", "--T", "100", "--k", "0"]);
}

#[test]
fn experiment_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["experiment", "--form", "1,1,1,1;2", "--T", "3000", "--cache-dir", cache];
    let a = without_timing(json(&args));
    let b = without_timing(json(&args));
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let c = without_timing(json(&args[..5]));
    assert_eq!(a, c);
}

#[test]
fn thread_count_does_not_change_results() {
    let base = ["experiment", "--form", "1,1,1;1@C:-3", "--T", "200"];
    let reports: Vec<Value> = ["1", "2", "0"]
        .iter()
        .map(|t| {
            let mut args = base.to_vec();
            args.extend(["--threads", t]);
            let mut r = without_timing(json(&args));
            r["config"].as_object_mut().unwrap().remove("threads");
            r
        })
        .collect();
    assert_eq!(reports[0], reports[1]);
    assert_eq!(reports[0], reports[2]);
}

#[test]
fn experiment_writes_output_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run");
    stdout(&["experiment", "--form", "1,1,1,1;1", "--T", "2000", "--out", out.to_str().unwrap()]);
    let report: Value = serde_json::from_str(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap();
    assert!(report["counts"]["N_T"].as_str().unwrap().len() >= 10);
    let row = fs::read_to_string(out.join("row.csv")).unwrap();
    assert!(row.starts_with("a,C,C_numeric,Psi_T,sigma,classification\n1,5,5.0"), "{row}");
    let plot = fs::read_to_string(out.join("plot-data.txt")).unwrap();
    assert_eq!(plot.lines().filter(|l| !l.starts_with('#')).count() as u64, report["fit"]["envelope_size"].as_u64().unwrap());
}

#[test]
fn real_four_table_coefficients() {
    let csv = stdout(&["table", "real-n4", "--T", "10000"]);
    let expected = [
        "5", "8 * sqrt(2)", "12 * sqrt(3)", "32", "140/13 * sqrt(5)", "72/5 * sqrt(6)", "112/5 * sqrt(7)",
        "32 * sqrt(2)", "36", "280/13 * sqrt(10)", "1540/61 * sqrt(11)", "192/5 * sqrt(3)", "364/17 * sqrt(13)",
        "112/5 * sqrt(14)", "360/13 * sqrt(15)",
    ];
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "a,C,C_numeric,Psi_T,sigma,classification");
    assert_eq!(lines.len(), 16);
    for (i, (line, c)) in lines[1..].iter().zip(expected).enumerate() {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[0], (i + 1).to_string());
        assert_eq!(cols[1], c);
        assert!(cols[4].parse::<f64>().unwrap() < -0.8, "{line}");
    }
}

#[test]
fn hermitian_two_table_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let out = hyperlat(&["table", "cx-n2", "--T", "1000", "--out", dir.path().to_str().unwrap()]);
    assert!(out.status.success());
    let csv = String::from_utf8(out.stdout).unwrap();
    let expected = [
        "18", "48", "108", "48", "1200/7", "144", "2352/19", "192", "324", "800/7", "14520/37", "288", "14196/61",
        "6272/19", "3600/7",
    ];
    let c: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(c, expected);
    assert!(String::from_utf8(out.stderr).unwrap().contains("C(-3)     2"));
    assert_eq!(fs::read_to_string(dir.path().join("table-cx-n2.csv")).unwrap(), csv);
    let summary: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("conjecture-cx-n2.json")).unwrap()).unwrap();
    assert_eq!(summary[0]["experiments"], 15);
}

#[test]
fn table_zero_rows_and_empty_range() {
    let csv = stdout(&["table", "real-n2", "--T", "1000", "--a-range", "3..4"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[2], "4,0,0.000000000000,,,");
    assert_eq!(stdout(&["table", "cx-n3", "--a-range", "5..4"]), "a,C,C_numeric,Psi_T,sigma,classification\n");
}

#[test]
fn plot_data_curves_share_left_endpoint() {
    let text = stdout(&["plot-data", "--form", "1,1,1,1;1", "--T", "5000", "--tmin", "10"]);
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect();
    assert!(rows.len() > 2);
    let first = &rows[0];
    assert_eq!(first.len(), 5);
    assert!(first[0] >= 10.0);
    for v in &first[2..] {
        assert!((v - first[1]).abs() <= 1e-8 * first[1]);
    }
}

#[test]
fn fit_json_contract() {
    let fit = json(&["fit", "--form", "1,1,1,1;1", "--T", "5000"]);
    let keys: Vec<&str> = fit.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["B", "envelope", "envelope_size", "sigma", "window"]);
    assert_eq!(fit["window"], serde_json::json!([100, 5000]));
    assert_eq!(fit["envelope"].as_array().unwrap().len() as u64, fit["envelope_size"].as_u64().unwrap());
    assert!(fit["sigma"].as_f64().unwrap() < 0.0);
}
