use std::path::PathBuf;

use crate::dataset::ValidationIssue;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the digit, model, goodness-of-fit, dataset and I/O layers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("base {0} is out of range, expected 2..=36")]
    BaseOutOfRange(u32),

    #[error("value {value} is not a positive finite number")]
    NonPositiveValue { value: f64 },

    #[error("value at index {index} is not a positive finite number: {value}")]
    InvalidValueAt { index: usize, value: f64 },

    #[error("digit {digit} is out of range for base {base}, expected 1..={}", base - 1)]
    DigitOutOfRange { digit: u32, base: u32 },

    #[error("exponent beta must be positive and finite, got {beta}")]
    InvalidBeta { beta: f64 },

    #[error("no records: at least one observation is required")]
    NoRecords,

    #[error("no records to measure span over")]
    EmptyRecords,

    #[error("no cited articles to analyze")]
    NoCitedRecords,

    #[error("record totals differ: observed N = {observed}, expected N = {expected}")]
    TotalMismatch { observed: u64, expected: u64 },

    #[error("bases differ: observed base {observed}, expected base {expected}")]
    BaseMismatch { observed: u32, expected: u32 },

    #[error("expected count for digit {digit} is zero; chi-square is undefined")]
    ZeroExpectedCell { digit: u32 },

    #[error("degrees of freedom {0} out of range, expected 1..=200")]
    DegreesOfFreedomOutOfRange(u32),

    #[error("significance level must lie strictly between 0 and 1, got {0}")]
    AlphaOutOfRange(f64),

    #[error("chi-square statistic must be finite and non-negative, got {0}")]
    InvalidStatistic(f64),

    #[error("degenerate digit space: base 2 has a single digit and zero degrees of freedom")]
    DegenerateDigitSpace,

    #[error("negative citation count at index {index}: {value}")]
    NegativeCount { index: usize, value: i64 },

    #[error("invalid snapshot: {}", render_issues(.0))]
    SnapshotInvalid(Vec<ValidationIssue>),

    #[error("invalid series: {}", render_issues(.0))]
    SeriesInvalid(Vec<ValidationIssue>),

    #[error("sample count must be at least 1")]
    ZeroSampleCount,

    #[error("span must cover at least 1 decade")]
    ZeroSpan,

    #[error("unknown table id '{0}', expected one of 2, 3, 4, 5, 6, 7")]
    UnknownTable(String),

    #[error("distribution has no observations; nothing to draw")]
    EmptyDistribution,

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{origin}: {message}")]
    Parse { origin: String, message: String },
}

fn render_issues(issues: &[ValidationIssue]) -> String {
    issues
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
