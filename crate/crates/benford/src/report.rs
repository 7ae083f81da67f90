//! Report assembly and rendering.
//!
//! An [`AnalysisReport`] bundles everything one conformity run produces:
//! observed counts, expected counts with error bars, per-digit deviations,
//! the chi-square verdict and an optional magnitude span. Rendering is pure:
//! identical report values yield byte-identical output in every format.
//!
//! Human tables print proportions to 3 decimal places and expected counts to
//! 1, matching the published tables; the `csv` and `json` formats keep full
//! precision (JSON round-trips every numeric field exactly).

use serde::{Deserialize, Serialize};

use crate::dataset::{
    snapshot_to_distribution, validate_series, NestingMode, SeriesKind, SnapshotSeries, SpanReport,
};
use crate::digits::{Digit, DigitDistribution};
use crate::error::{Error, Result};
use crate::gof::{
    chi_square, chi_square_critical, conformity_test, digit_deviations, expected_counts,
    ExpectedDistribution, GofResult, Verdict,
};
use crate::models::DigitLawModel;
use crate::tables::{digit_tables, series_table, ReferenceDigitTable, TableId};

/// Output format of the rendering functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    /// Human-readable aligned table.
    #[default]
    Table,
    /// Comma-separated values with a `#`-commented summary trailer.
    Csv,
    /// Pretty-printed JSON of the full report structure.
    Json,
}

/// Everything a single conformity analysis produced.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    /// Where the data came from (file path, fixture provenance, generator).
    pub source: String,
    pub observed: DigitDistribution,
    pub expected: ExpectedDistribution,
    /// Standardized per-digit deviations `(N_obs - N_exp) / ΔN`.
    pub deviations: Vec<f64>,
    pub gof: GofResult,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub span: Option<SpanReport>,
    /// Pipeline notes, e.g. how many uncited records were filtered out.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Runs the full pipeline on an observed distribution.
pub fn analyze(
    source: impl Into<String>,
    observed: DigitDistribution,
    model: &DigitLawModel,
    alpha: f64,
    span: Option<SpanReport>,
) -> Result<AnalysisReport> {
    let gof = conformity_test(&observed, model, alpha)?;
    let expected = expected_counts(model, observed.n())?;
    let deviations = digit_deviations(&observed, &expected)?;
    Ok(AnalysisReport {
        source: source.into(),
        observed,
        expected,
        deviations,
        gof,
        span,
        notes: Vec::new(),
    })
}

/// Renders an analysis report in the requested format.
pub fn render_analysis(report: &AnalysisReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => render_analysis_table(report),
        OutputFormat::Csv => render_analysis_csv(report),
        OutputFormat::Json => to_pretty_json(report),
    }
}

fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

fn render_analysis_table(report: &AnalysisReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("source:  {}\n", report.source));
    out.push_str(&format!(
        "model:   {}   alpha = {}\n",
        report.expected.model().name(),
        report.gof.alpha
    ));
    out.push_str(&format!("records: N = {}\n\n", report.observed.n()));
    out.push_str("digit  observed   prop.      expected          deviation\n");
    let props = report.observed.proportions();
    for (i, digit) in report.observed.digits().enumerate() {
        out.push_str(&format!(
            "{:>5}  {:>8}   {:.3}   {:>7.1} ± {:>5.1}   {:>+10.2}\n",
            digit.to_char(),
            report.observed.counts()[i],
            props[i],
            report.expected.expected()[i],
            report.expected.errors()[i],
            report.deviations[i],
        ));
    }
    out.push_str(&format!(
        "\nchi-square = {:.3}   df = {}   critical = {:.3}   p-value = {:.4}\n",
        report.gof.chi2, report.gof.df, report.gof.critical, report.gof.p_value
    ));
    out.push_str(&format!("verdict: {}\n", report.gof.verdict));
    if let Some(span) = &report.span {
        out.push_str(&format!(
            "span: min {} .. max {} ({:.2} orders of magnitude)\n",
            span.min_record, span.max_record, span.orders_of_magnitude
        ));
    }
    for warning in &report.gof.warnings {
        out.push_str(&format!("warning: {warning}\n"));
    }
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    out
}

fn render_analysis_csv(report: &AnalysisReport) -> String {
    let mut out = String::from("digit,observed,proportion,expected,error,deviation\n");
    let props = report.observed.proportions();
    for (i, digit) in report.observed.digits().enumerate() {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            digit.to_char(),
            report.observed.counts()[i],
            props[i],
            report.expected.expected()[i],
            report.expected.errors()[i],
            report.deviations[i],
        ));
    }
    out.push_str(&format!(
        "# chi2={},df={},critical={},p_value={},verdict={}\n",
        report.gof.chi2, report.gof.df, report.gof.critical, report.gof.p_value, report.gof.verdict
    ));
    out
}

/// One analyzed snapshot inside a series report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesRow {
    pub label: String,
    pub total: u64,
    pub uncited: u64,
    pub n: u64,
    pub chi2: f64,
    pub p_value: f64,
    pub verdict: Verdict,
}

/// Per-snapshot conformity results for a whole series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub model: DigitLawModel,
    pub alpha: f64,
    pub rows: Vec<SeriesRow>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl SeriesReport {
    /// True when every snapshot conforms.
    pub fn all_conform(&self) -> bool {
        self.rows.iter().all(|r| r.verdict == Verdict::Conforms)
    }
}

/// Validates a series and runs the conformity test on every snapshot.
pub fn analyze_series(
    series: &SnapshotSeries,
    model: &DigitLawModel,
    alpha: f64,
    nesting: NestingMode,
) -> Result<SeriesReport> {
    let validation = validate_series(series, nesting);
    if !validation.is_ok() {
        return Err(Error::SeriesInvalid(validation.errors));
    }
    let notes = validation
        .warnings
        .iter()
        .map(|w| format!("nesting warning: {w}"))
        .collect();
    let mut rows = Vec::with_capacity(series.snapshots.len());
    for snapshot in &series.snapshots {
        let observed = snapshot_to_distribution(snapshot, model.base())?;
        let gof = conformity_test(&observed, model, alpha)?;
        rows.push(SeriesRow {
            label: snapshot.label.clone(),
            total: snapshot.total_citations,
            uncited: snapshot.uncited,
            n: observed.n(),
            chi2: gof.chi2,
            p_value: gof.p_value,
            verdict: gof.verdict,
        });
    }
    Ok(SeriesReport {
        kind: series.kind,
        model: *model,
        alpha,
        rows,
        notes,
    })
}

/// Renders a series report in the requested format.
pub fn render_series(report: &SeriesReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let mut out = String::new();
            out.push_str(&format!(
                "kind: {}   model: {}   alpha = {}\n\n",
                report.kind,
                report.model.name(),
                report.alpha
            ));
            out.push_str("label            total  uncited      N     chi2   p-value  verdict\n");
            for row in &report.rows {
                out.push_str(&format!(
                    "{:<15} {:>6}  {:>7}  {:>5}  {:>7.3}   {:.4}  {}\n",
                    row.label, row.total, row.uncited, row.n, row.chi2, row.p_value, row.verdict
                ));
            }
            for note in &report.notes {
                out.push_str(&format!("note: {note}\n"));
            }
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("label,total,uncited,n,chi2,p_value,verdict\n");
            for row in &report.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{}\n",
                    row.label, row.total, row.uncited, row.n, row.chi2, row.p_value, row.verdict
                ));
            }
            out
        }
        OutputFormat::Json => to_pretty_json(report),
    }
}

/// Tolerance used when diffing recomputed statistics against printed values.
pub const REPRODUCTION_TOLERANCE: f64 = 0.05;

/// One digit row of a reproduced distribution table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CellCheck {
    pub digit: u32,
    pub observed: u64,
    pub expected_computed: f64,
    pub expected_printed: f64,
    pub expected_within: bool,
    pub error_computed: f64,
    pub error_printed: f64,
    pub error_within: bool,
}

/// Reproduction of one column (one seed) of a published digit table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DigitTableCheck {
    pub provenance: String,
    pub n: u64,
    pub cells: Vec<CellCheck>,
    pub chi2_computed: f64,
    pub chi2_printed: f64,
    pub chi2_within: bool,
    /// Cells whose printed rounding sits more than the tolerance away from
    /// the full-precision value.
    pub cells_outside: usize,
}

/// Reproduction of one row of a published bookkeeping table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerdictRowCheck {
    pub label: String,
    pub total: u64,
    pub uncited: u64,
    pub n: u64,
    pub chi2_printed: f64,
    pub verdict: Verdict,
}

/// Outcome of reproducing one published table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reproduction {
    pub table: u8,
    pub pass: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub digit_checks: Vec<DigitTableCheck>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdict_checks: Vec<VerdictRowCheck>,
}

fn reproduce_digit_table(reference: &ReferenceDigitTable) -> Result<DigitTableCheck> {
    let observed = DigitDistribution::from_counts(10, reference.observed.to_vec())?;
    let model = DigitLawModel::classical(10)?;
    let expected = expected_counts(&model, observed.n())?;
    let chi2_computed = chi_square(&observed, &expected)?;
    let mut cells = Vec::with_capacity(9);
    let mut cells_outside = 0;
    for i in 0..9 {
        let expected_computed = expected.expected()[i];
        let error_computed = expected.errors()[i];
        let cell = CellCheck {
            digit: i as u32 + 1,
            observed: reference.observed[i],
            expected_computed,
            expected_printed: reference.expected_printed[i],
            expected_within: (expected_computed - reference.expected_printed[i]).abs()
                <= REPRODUCTION_TOLERANCE,
            error_computed,
            error_printed: reference.errors_printed[i],
            error_within: (error_computed - reference.errors_printed[i]).abs()
                <= REPRODUCTION_TOLERANCE,
        };
        if !cell.expected_within {
            cells_outside += 1;
        }
        if !cell.error_within {
            cells_outside += 1;
        }
        cells.push(cell);
    }
    Ok(DigitTableCheck {
        provenance: reference.provenance.to_string(),
        n: reference.n,
        cells,
        chi2_computed,
        chi2_printed: reference.chi2_printed,
        chi2_within: (chi2_computed - reference.chi2_printed).abs() <= REPRODUCTION_TOLERANCE,
        cells_outside,
    })
}

/// Recomputes a published table from the bundled data and diffs it against
/// the printed values.
///
/// For the digit-distribution tables the statistic is recomputed from raw
/// counts with full-precision expected values; the table passes when both
/// chi-square statistics land within [`REPRODUCTION_TOLERANCE`] of the
/// printed ones. For the bookkeeping tables only the verdict mapping can be
/// reproduced (the digit counts were not published): every printed statistic
/// must map to `conforms` at df 8, alpha 0.05.
pub fn reproduce(id: TableId) -> Result<Reproduction> {
    if let Some(references) = digit_tables(id) {
        let checks = references
            .iter()
            .map(|r| reproduce_digit_table(r))
            .collect::<Result<Vec<_>>>()?;
        let pass = checks.iter().all(|c| c.chi2_within);
        return Ok(Reproduction {
            table: id.number(),
            pass,
            digit_checks: checks,
            verdict_checks: Vec::new(),
        });
    }
    let table = series_table(id).expect("table ids partition");
    let critical = chi_square_critical(8, 0.05)?;
    let rows: Vec<VerdictRowCheck> = table
        .rows
        .iter()
        .map(|row| VerdictRowCheck {
            label: row.label.to_string(),
            total: row.total,
            uncited: row.uncited,
            n: row.cited,
            chi2_printed: row.chi2_printed,
            verdict: if row.chi2_printed < critical {
                Verdict::Conforms
            } else {
                Verdict::Rejects
            },
        })
        .collect();
    let pass = rows.iter().all(|r| r.verdict == Verdict::Conforms);
    Ok(Reproduction {
        table: id.number(),
        pass,
        digit_checks: Vec::new(),
        verdict_checks: rows,
    })
}

/// Renders a reproduction as an aligned text table with a PASS/FAIL summary.
pub fn render_reproduction(reproduction: &Reproduction) -> String {
    let mut out = String::new();
    out.push_str(&format!("reproducing table {}\n", reproduction.table));
    for check in &reproduction.digit_checks {
        out.push_str(&format!("\n{} (N = {})\n", check.provenance, check.n));
        out.push_str("digit  observed   computed          printed        \n");
        for cell in &check.cells {
            let mark = if cell.expected_within && cell.error_within {
                "  "
            } else {
                " *"
            };
            out.push_str(&format!(
                "{:>5}  {:>8}   {:>6.1} ± {:>4.1}   {:>6.1} ± {:>4.1}{mark}\n",
                cell.digit,
                cell.observed,
                cell.expected_computed,
                cell.error_computed,
                cell.expected_printed,
                cell.error_printed,
            ));
        }
        out.push_str(&format!(
            "chi-square: computed {:.3} vs printed {:.3} -> {}\n",
            check.chi2_computed,
            check.chi2_printed,
            if check.chi2_within {
                "match"
            } else {
                "MISMATCH"
            }
        ));
        if check.cells_outside > 0 {
            out.push_str(&format!(
                "note: {} cell value(s) marked * sit more than {} from the printed rounding\n",
                check.cells_outside, REPRODUCTION_TOLERANCE
            ));
        }
    }
    if !reproduction.verdict_checks.is_empty() {
        out.push_str("\nlabel            total  uncited      N     chi2  verdict\n");
        for row in &reproduction.verdict_checks {
            out.push_str(&format!(
                "{:<15} {:>6}  {:>7}  {:>5}  {:>7.3}  {}\n",
                row.label, row.total, row.uncited, row.n, row.chi2_printed, row.verdict
            ));
        }
        out.push_str(&format!(
            "{} of {} snapshots conform\n",
            reproduction
                .verdict_checks
                .iter()
                .filter(|r| r.verdict == Verdict::Conforms)
                .count(),
            reproduction.verdict_checks.len()
        ));
    }
    out.push_str(&format!(
        "table {}: {}\n",
        reproduction.table,
        if reproduction.pass { "PASS" } else { "FAIL" }
    ));
    out
}

/// Model proportions next to observed ones, used by the chart and the
/// uniform reference line.
pub(crate) fn digit_labels(distribution: &DigitDistribution) -> Vec<char> {
    distribution.digits().map(Digit::to_char).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{TableId, TABLE2_SN};

    fn sn_report() -> AnalysisReport {
        let observed = DigitDistribution::from_counts(10, TABLE2_SN.observed.to_vec()).unwrap();
        let model = DigitLawModel::classical(10).unwrap();
        analyze(TABLE2_SN.provenance, observed, &model, 0.05, None).unwrap()
    }

    #[test]
    fn analysis_report_cross_references_agree() {
        let report = sn_report();
        assert_eq!(report.observed.n(), report.expected.n());
        assert_eq!(report.observed.base(), report.expected.model().base());
        assert_eq!(report.deviations.len(), report.observed.counts().len());
        assert!((report.gof.chi2 - 11.919).abs() < 0.05);
        assert_eq!(report.gof.verdict, Verdict::Conforms);
    }

    #[test]
    fn table_rendering_mentions_key_numbers() {
        let text = render_analysis(&sn_report(), OutputFormat::Table);
        assert!(text.contains("N = 231"));
        assert!(text.contains("69.5 ±   7.0"));
        assert!(text.contains("verdict: conforms"));
    }

    #[test]
    fn rendering_is_deterministic() {
        let report = sn_report();
        for format in [OutputFormat::Table, OutputFormat::Csv, OutputFormat::Json] {
            let a = render_analysis(&report, format);
            let b = render_analysis(&report, format);
            assert_eq!(a.into_bytes(), b.into_bytes());
        }
    }

    #[test]
    fn json_round_trips_exactly() {
        let report = sn_report();
        let json = render_analysis(&report, OutputFormat::Json);
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        // Bit-for-bit on the floating-point fields.
        assert_eq!(back.gof.chi2.to_bits(), report.gof.chi2.to_bits());
        assert_eq!(back.gof.p_value.to_bits(), report.gof.p_value.to_bits());
        for (a, b) in back.deviations.iter().zip(&report.deviations) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn csv_has_one_row_per_digit() {
        let text = render_analysis(&sn_report(), OutputFormat::Csv);
        let data_rows = text
            .lines()
            .filter(|l| !l.starts_with('#') && !l.starts_with("digit"))
            .count();
        assert_eq!(data_rows, 9);
        assert!(text.lines().last().unwrap().contains("verdict=conforms"));
    }

    #[test]
    fn series_report_row_per_snapshot() {
        let series = SnapshotSeries {
            kind: SeriesKind::FrozenCustomRange,
            snapshots: vec![
                crate::dataset::CitationSnapshot::new(
                    "demo",
                    "w0",
                    2,
                    vec![118, 234, 342, 15, 27, 41, 88, 93, 12, 66],
                ),
                crate::dataset::CitationSnapshot::new(
                    "demo",
                    "w1",
                    5,
                    vec![118, 234, 342, 15, 27, 41, 88, 93, 12, 66, 105, 7],
                ),
            ],
        };
        let model = DigitLawModel::classical(10).unwrap();
        let report = analyze_series(&series, &model, 0.05, NestingMode::Strict).unwrap();
        assert_eq!(report.rows.len(), 2);
        assert_eq!(report.rows[0].n, 10);
        assert_eq!(report.rows[1].total, 17);

        let rendered = render_series(&report, OutputFormat::Table);
        assert!(rendered.contains("w0"));
        assert!(rendered.contains("w1"));
    }

    #[test]
    fn series_validation_failure_propagates() {
        let series = SnapshotSeries {
            kind: SeriesKind::LiveCitedBy,
            snapshots: vec![
                crate::dataset::CitationSnapshot::new("demo", "d0", 10, vec![5, 6]),
                crate::dataset::CitationSnapshot::new("demo", "d1", 0, vec![5]),
            ],
        };
        let model = DigitLawModel::classical(10).unwrap();
        let err = analyze_series(&series, &model, 0.05, NestingMode::Strict).unwrap_err();
        assert!(matches!(err, Error::SeriesInvalid(_)));
    }

    #[test]
    fn reproduce_table_two_passes_on_chi_square() {
        let reproduction = reproduce(TableId::Two).unwrap();
        assert!(reproduction.pass);
        let checks = &reproduction.digit_checks;
        assert_eq!(checks.len(), 2);
        assert!((checks[0].chi2_computed - 11.919).abs() <= 0.05);
        assert!((checks[1].chi2_computed - 7.623).abs() <= 0.05);
        let text = render_reproduction(&reproduction);
        assert!(text.contains("PASS"));
    }

    #[test]
    fn reproduce_table_five_passes_on_chi_square() {
        let reproduction = reproduce(TableId::Five).unwrap();
        assert!(reproduction.pass);
        let checks = &reproduction.digit_checks;
        assert!((checks[0].chi2_computed - 8.792).abs() <= 0.05);
        assert!((checks[1].chi2_computed - 7.176).abs() <= 0.05);
    }

    #[test]
    fn reproduce_verdict_tables_all_conform() {
        for (id, expected_rows) in [
            (TableId::Three, 3usize),
            (TableId::Four, 3),
            (TableId::Six, 11),
            (TableId::Seven, 18),
        ] {
            let reproduction = reproduce(id).unwrap();
            assert!(reproduction.pass, "table {id}");
            assert_eq!(reproduction.verdict_checks.len(), expected_rows);
            assert!(reproduction
                .verdict_checks
                .iter()
                .all(|r| r.verdict == Verdict::Conforms));
        }
    }

    #[test]
    fn reproduction_rendering_deterministic() {
        for id in TableId::ALL {
            let reproduction = reproduce(id).unwrap();
            let a = render_reproduction(&reproduction);
            let b = render_reproduction(&reproduction);
            assert_eq!(a, b);
        }
    }
}
