//! End-to-end tests of the `benford` binary: exit codes, output formats and
//! file round trips.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::atomic::{AtomicU32, Ordering};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_benford"))
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn scratch(name: &str) -> PathBuf {
    static COUNTER: AtomicU32 = AtomicU32::new(0);
    let dir = std::env::temp_dir().join(format!(
        "benford-cli-{}-{}",
        std::process::id(),
        COUNTER.fetch_add(1, Ordering::Relaxed)
    ));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn analyze_reference_fixture_conforms() {
    let output = run(&["analyze", fixture("table2_sn.json").to_str().unwrap()]);
    assert_eq!(code(&output), 0, "{output:?}");
    let text = stdout(&output);
    assert!(text.contains("11.919"), "{text}");
    assert!(text.contains("verdict: conforms"));
    assert!(text.contains("Table 2, SN, 2013-09-30"));
}

#[test]
fn analyze_uniform_model_rejects_benford_data() {
    // Pipeline: synthesize an exact-Benford sample, then test it against the
    // uniform null; the verdict must be rejects with exit code 2.
    let sample = scratch("sample.txt");
    let output = run(&[
        "synth",
        "--model",
        "benford",
        "--n",
        "10000",
        "--seed",
        "7",
        "--out",
        sample.to_str().unwrap(),
    ]);
    assert_eq!(code(&output), 0);

    let output = run(&["analyze", sample.to_str().unwrap(), "--model", "uniform"]);
    assert_eq!(code(&output), 2, "{}", stdout(&output));
    assert!(stdout(&output).contains("verdict: rejects"));
}

#[test]
fn analyze_empty_record_list_errors() {
    let empty = scratch("empty.txt");
    std::fs::write(&empty, "0\n0\n0\n").unwrap();
    let output = run(&["analyze", empty.to_str().unwrap()]);
    assert_eq!(code(&output), 1);
    assert!(String::from_utf8_lossy(&output.stderr).contains("error:"));
}

#[test]
fn analyze_plain_list_reports_filtering() {
    let output = run(&["analyze", fixture("demo_counts.txt").to_str().unwrap()]);
    let text = stdout(&output);
    assert!(
        text.contains("filtered 12 uncited (zero) record(s)"),
        "{text}"
    );
    assert!(text.contains("span: min 1"));
}

#[test]
fn analyze_json_output_round_trips() {
    let output = run(&[
        "analyze",
        fixture("table2_fb.json").to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code(&output), 0);
    let report: benford::AnalysisReport = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(report.observed.n(), 449);
    assert!((report.gof.chi2 - 7.623).abs() < 0.05);
}

#[test]
fn analyze_csv_output_has_digit_rows() {
    let output = run(&[
        "analyze",
        fixture("table5_fb.json").to_str().unwrap(),
        "--format",
        "csv",
    ]);
    let text = stdout(&output);
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 10); // header + 9 digits
    assert!(text.lines().last().unwrap().starts_with("# chi2="));
}

#[test]
fn analyze_generalized_model_requires_beta() {
    let output = run(&[
        "analyze",
        fixture("table2_sn.json").to_str().unwrap(),
        "--model",
        "generalized",
    ]);
    assert_eq!(code(&output), 1);
    assert!(String::from_utf8_lossy(&output.stderr).contains("--beta"));
}

#[test]
fn analyze_rejects_series_input() {
    let output = run(&["analyze", fixture("demo_series.json").to_str().unwrap()]);
    assert_eq!(code(&output), 1);
    assert!(String::from_utf8_lossy(&output.stderr).contains("series"));
}

#[test]
fn series_demo_fixture_all_conform() {
    let output = run(&["series", fixture("demo_series.json").to_str().unwrap()]);
    assert_eq!(code(&output), 0, "{}", stdout(&output));
    let text = stdout(&output);
    assert_eq!(
        text.lines().filter(|l| l.contains("conforms")).count(),
        3,
        "{text}"
    );
}

#[test]
fn series_single_snapshot_matches_analyze() {
    // A one-snapshot series produces the same statistic as analyze on the
    // snapshot itself.
    let snapshot_json = std::fs::read_to_string(fixture("demo_snapshot.json")).unwrap();
    let series_path = scratch("single_series.json");
    std::fs::write(
        &series_path,
        format!("{{\"kind\":\"live_cited_by\",\"snapshots\":[{snapshot_json}]}}"),
    )
    .unwrap();

    let from_series = run(&["series", series_path.to_str().unwrap(), "--format", "json"]);
    let series_report: benford::SeriesReport = serde_json::from_str(&stdout(&from_series)).unwrap();

    let from_analyze = run(&[
        "analyze",
        fixture("demo_snapshot.json").to_str().unwrap(),
        "--format",
        "json",
    ]);
    let analysis: benford::AnalysisReport = serde_json::from_str(&stdout(&from_analyze)).unwrap();

    assert_eq!(series_report.rows.len(), 1);
    assert_eq!(
        series_report.rows[0].chi2.to_bits(),
        analysis.gof.chi2.to_bits()
    );
    assert_eq!(series_report.rows[0].verdict, analysis.gof.verdict);
}

#[test]
fn series_nesting_violation_strict_vs_warn() {
    // Window w1 drops the record 66 from w0, which violates frozen nesting;
    // both windows conform to the law on their own.
    let broken = scratch("broken_series.json");
    std::fs::write(
        &broken,
        r#"{"kind":"frozen_custom_range","snapshots":[
            {"seed":"s","label":"w0","records":[118,234,342,15,27,41,88,93,12,66]},
            {"seed":"s","label":"w1","records":[118,234,342,15,27,41,88,93,12,177,555,61]}]}"#,
    )
    .unwrap();

    let strict = run(&["series", broken.to_str().unwrap()]);
    assert_eq!(code(&strict), 1);
    assert!(String::from_utf8_lossy(&strict.stderr).contains("lost records"));

    let warn = run(&[
        "series",
        broken.to_str().unwrap(),
        "--strict-nesting",
        "false",
    ]);
    assert_eq!(code(&warn), 0, "{}", stdout(&warn));
    assert!(stdout(&warn).contains("nesting warning"));
}

#[test]
fn synth_is_deterministic_across_runs() {
    let a = run(&["synth", "--n", "500", "--seed", "11"]);
    let b = run(&["synth", "--n", "500", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["synth", "--n", "500", "--seed", "12"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn synth_zipf_needs_beta_and_accepts_it() {
    let missing = run(&["synth", "--model", "generalized", "--n", "10"]);
    assert_eq!(code(&missing), 1);
    let output = run(&[
        "synth",
        "--model",
        "generalized",
        "--beta",
        "2.0",
        "--n",
        "10",
        "--seed",
        "3",
    ]);
    assert_eq!(code(&output), 0);
    assert_eq!(stdout(&output).lines().count(), 10);
}

#[test]
fn validate_reports_all_issues_with_exit_2() {
    let broken = scratch("broken_snapshot.json");
    std::fs::write(
        &broken,
        r#"{"seed":"s","label":"bad","total_citations":100,"uncited":10,"records":[1,2,3]}"#,
    )
    .unwrap();
    let output = run(&["validate", broken.to_str().unwrap()]);
    assert_eq!(code(&output), 2);
    assert!(stdout(&output).contains("total ≠ uncited + cited (100 ≠ 13)"));

    let ok = run(&["validate", fixture("demo_snapshot.json").to_str().unwrap()]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("ok"));
}

#[test]
fn reproduce_digit_tables_pass() {
    for (table, chi2s) in [("2", ["11.919", "7.623"]), ("5", ["8.792", "7.176"])] {
        let output = run(&["reproduce", table]);
        assert_eq!(code(&output), 0, "table {table}");
        let text = stdout(&output);
        for chi2 in chi2s {
            assert!(text.contains(chi2), "table {table}: {text}");
        }
        assert!(text.contains("PASS"));
    }
}

#[test]
fn reproduce_verdict_tables_pass() {
    let output = run(&["reproduce", "7"]);
    assert_eq!(code(&output), 0);
    let text = stdout(&output);
    assert!(text.contains("18 of 18 snapshots conform"), "{text}");
    assert!(text.contains("PASS"));

    let unknown = run(&["reproduce", "9"]);
    assert_eq!(code(&unknown), 1);
}

#[test]
fn chart_writes_svg() {
    let out = scratch("chart.svg");
    let output = run(&[
        "chart",
        fixture("table2_sn.json").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&output), 0);
    let svg = std::fs::read_to_string(&out).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("uniform 0.111"));

    // Determinism across invocations.
    let out2 = scratch("chart2.svg");
    run(&[
        "chart",
        fixture("table2_sn.json").to_str().unwrap(),
        "--out",
        out2.to_str().unwrap(),
    ]);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(&out2).unwrap());
}

#[test]
fn chart_on_empty_input_writes_nothing() {
    let empty = scratch("empty.txt");
    std::fs::write(&empty, "0\n").unwrap();
    let out = scratch("never.svg");
    let output = run(&[
        "chart",
        empty.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&output), 1);
    assert!(!out.exists());
}

#[test]
fn analyze_out_flag_writes_file() {
    let out = scratch("report.txt");
    let output = run(&[
        "analyze",
        fixture("table2_sn.json").to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&output), 0);
    assert!(std::fs::read_to_string(&out)
        .unwrap()
        .contains("verdict: conforms"));
}
